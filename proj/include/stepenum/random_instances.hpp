#pragma once

#include <random>

#include "stepenum/horn.hpp"
#include "stepenum/synthetic.hpp"
#include "stepenum/vertex_cover.hpp"

namespace stepenum {

/// All randomness flows from one seeded engine so runs are reproducible.
using Rng = std::mt19937_64;

/// Uniform vertex count in [0, max_vertices], each edge present with
/// probability 1/2, k uniform in [0, vertices].
GraphInstance random_graph(Rng& rng, std::size_t max_vertices);

/// Uniform variable count in [1, max_variables] and clause count in
/// [0, max_clauses]; clause width 1..3, at most one positive literal.
HornFormula random_horn(Rng& rng, std::size_t max_variables, std::size_t max_clauses);

/// Random profile, a in {0,1,2}, m in [0, max_m], small t(k) p(n), and a
/// postcomputation tail that keeps the spec within its cap schedule.
SyntheticSpec random_synthetic(Rng& rng, std::uint64_t max_m);

}  // namespace stepenum
