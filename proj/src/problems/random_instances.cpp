#include "stepenum/random_instances.hpp"

#include <algorithm>
#include <numeric>

namespace stepenum {

namespace {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

}  // namespace

GraphInstance random_graph(Rng& rng, std::size_t max_vertices) {
    GraphInstance g;
    g.vertices = uniform(rng, 0, max_vertices);
    for (std::uint32_t u = 0; u < g.vertices; ++u)
        for (std::uint32_t v = u + 1; v < g.vertices; ++v)
            if (uniform(rng, 0, 1)) g.edges.emplace_back(u, v);
    g.k = uniform(rng, 0, g.vertices);
    return g;
}

HornFormula random_horn(Rng& rng, std::size_t max_variables, std::size_t max_clauses) {
    HornFormula f;
    f.variable_count = uniform(rng, 1, max_variables);
    const std::size_t clauses = uniform(rng, 0, max_clauses);
    std::vector<int> vars(f.variable_count);
    std::iota(vars.begin(), vars.end(), 1);
    for (std::size_t c = 0; c < clauses; ++c) {
        const std::size_t width = uniform(rng, 1, std::min<std::size_t>(3, f.variable_count));
        std::shuffle(vars.begin(), vars.end(), rng);
        std::vector<int> clause(vars.begin(), vars.begin() + width);
        for (auto& lit : clause) lit = -lit;
        // one positive literal in about two thirds of the clauses
        if (uniform(rng, 0, 2) != 0) clause[uniform(rng, 0, width - 1)] *= -1;
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

SyntheticSpec random_synthetic(Rng& rng, std::uint64_t max_m) {
    SyntheticSpec s;
    s.profile = uniform(rng, 0, 1) ? SyntheticProfile::Structured : SyntheticProfile::FrontLoaded;
    s.a = static_cast<unsigned>(uniform(rng, 0, 2));
    s.m = uniform(rng, 0, max_m);
    s.k = uniform(rng, 0, 4);
    s.n = uniform(rng, 1, 16);
    s.t_of_k = ParamFunction::formula("k+1");
    s.p = Polynomial({uniform(rng, 1, 3), uniform(rng, 0, 1)});
    s.postcomputation = uniform(rng, 0, 1) ? uniform(rng, 0, 50) : 0;
    return s;
}

}  // namespace stepenum
