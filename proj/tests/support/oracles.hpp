#pragma once

// Test-side ground truth, written without reusing library search code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stepenum/enumerator.hpp"
#include "stepenum/horn.hpp"
#include "stepenum/trace.hpp"
#include "stepenum/vertex_cover.hpp"

namespace testsupport {

using stepenum::Cost;
using stepenum::Solution;
using stepenum::Step;

/// Replays a fixed list of steps; the last one should have done = true.
class ScriptedProcess final : public stepenum::Process {
public:
    explicit ScriptedProcess(std::vector<Step> steps) : steps_(std::move(steps)) {}
    Step step() override {
        if (next_ < steps_.size()) return steps_[next_++];
        return Step{0, std::nullopt, true};
    }

private:
    std::vector<Step> steps_;
    std::size_t next_ = 0;
};

inline Step emit_after(Cost cost, std::string y) { return Step{cost, Solution(std::move(y)), false}; }
inline Step work(Cost cost) { return Step{cost, std::nullopt, false}; }
inline Step finish_after(Cost cost) { return Step{cost, std::nullopt, true}; }

inline stepenum::SteppedEnumerator scripted(std::vector<Step> steps) {
    return stepenum::make_enumerator<ScriptedProcess>(std::move(steps));
}

/// Emits the given solutions at the given cumulative costs, then halts at
/// `finish` (which must be >= the last emission cost).
inline stepenum::SteppedEnumerator emitting_at(const std::vector<std::pair<Cost, std::string>>& at,
                                               Cost finish) {
    std::vector<Step> steps;
    Cost t = 0;
    for (const auto& [c, y] : at) {
        steps.push_back(emit_after(c - t, y));
        t = c;
    }
    steps.push_back(finish_after(finish - t));
    return scripted(std::move(steps));
}

inline std::vector<std::string> strings_of(const std::vector<Solution>& v) {
    std::vector<std::string> out;
    for (const auto& s : v) out.push_back(s.bytes());
    return out;
}

inline std::vector<std::string> sorted_strings(const std::vector<Solution>& v) {
    auto out = strings_of(v);
    std::sort(out.begin(), out.end());
    return out;
}

/// Every vertex subset of size <= k that touches each edge, by bitmask.
inline std::vector<std::string> vertex_covers(const stepenum::GraphInstance& g) {
    std::vector<std::string> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.vertices); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > g.k) continue;
        bool ok = true;
        for (auto [u, v] : g.edges) ok = ok && (((mask >> u) & 1) || ((mask >> v) & 1));
        if (!ok) continue;
        std::string s;
        for (std::size_t v = 0; v < g.vertices; ++v)
            if ((mask >> v) & 1) s += static_cast<char>('a' + v);
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every satisfying assignment as a '0'/'1' string, variable 1 first.
inline std::vector<std::string> horn_models(const stepenum::HornFormula& f) {
    std::vector<std::string> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << f.variable_count); ++mask) {
        auto value = [&](int lit) {
            const bool b = (mask >> (std::abs(lit) - 1)) & 1;
            return lit > 0 ? b : !b;
        };
        bool ok = true;
        for (const auto& c : f.clauses) ok = ok && std::any_of(c.begin(), c.end(), value);
        if (!ok) continue;
        std::string s(f.variable_count, '0');
        for (std::size_t v = 0; v < f.variable_count; ++v)
            if ((mask >> v) & 1) s[v] = '1';
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every graph on at most `max_vertices` vertices (all edge subsets), each
/// paired with every k <= vertex count.
inline std::vector<stepenum::GraphInstance> all_small_graphs(std::size_t max_vertices) {
    std::vector<stepenum::GraphInstance> out;
    for (std::size_t v = 0; v <= max_vertices; ++v) {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
        for (std::uint32_t a = 0; a < v; ++a)
            for (std::uint32_t b = a + 1; b < v; ++b) pairs.emplace_back(a, b);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
            for (std::size_t k = 0; k <= v; ++k) {
                stepenum::GraphInstance g;
                g.vertices = v;
                g.k = k;
                for (std::size_t e = 0; e < pairs.size(); ++e)
                    if ((mask >> e) & 1) g.edges.push_back(pairs[e]);
                out.push_back(g);
            }
        }
    }
    return out;
}

/// Sum of delays recomputed from scratch.
inline Cost delay_sum(const stepenum::DelayTrace& t) {
    Cost s = 0;
    for (Cost d : t.delays) s += d;
    return s;
}

}  // namespace testsupport
