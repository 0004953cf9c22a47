#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stepenum/enumerator.hpp"
#include "stepenum/problem.hpp"
#include "stepenum/schedule.hpp"

namespace stepenum {

/// Undirected simple graph with a cover-size bound k (the parameter).
///
/// Vertex v is written as the byte 'a' + v inside solutions, so a cover is
/// the sorted string of its vertex letters ("b", "ac", ...).
struct GraphInstance {
    static constexpr std::size_t kMaxVertices = 256 - 'a';

    std::size_t vertices = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::size_t k = 0;

    /// No self-loops, no duplicate edges, endpoints in range, k <= vertices.
    void validate() const;

    /// Canonical instance bytes: "k\n" then the adjacency matrix, one row of
    /// '0'/'1' per vertex. |x| >= vertex count, so |cover| <= |x|.
    std::string encode() const;
    static GraphInstance decode(std::string_view raw);
};

/// Parses `V E` followed by E lines `u v` (0-based ids).
GraphInstance parse_edge_list(std::string_view text, std::size_t k);

char vertex_symbol(std::uint32_t v) noexcept;

const ProblemDescriptor& vertex_cover_problem();

/// Bounded search tree over the first uncovered edge (fixed edge order):
/// branch on taking either endpoint while the partial cover is below k. At a
/// node with no uncovered edge every superset of size <= k is a cover and is
/// generated; an emitted-set filter drops repeats across leaves. One tick per
/// node expansion and one per generated candidate.
SteppedEnumerator vertex_cover_enum(const GraphInstance& g);

/// Declared capped bound: i covers within 3 * 2^k * i ticks (and halting by
/// 3 * 2^k * (|Sol| + 1)). At most 2^(k+1) nodes, and each cover is generated
/// at most once per leaf, of which there are at most 2^k.
BudgetSchedule vertex_cover_bound();

}  // namespace stepenum
