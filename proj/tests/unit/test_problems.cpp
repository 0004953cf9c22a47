#include <doctest.h>

#include "oracles.hpp"
#include "stepenum/errors.hpp"
#include "stepenum/horn.hpp"
#include "stepenum/instrument.hpp"
#include "stepenum/random_instances.hpp"
#include "stepenum/synthetic.hpp"
#include "stepenum/vertex_cover.hpp"

using namespace stepenum;
using namespace testsupport;

namespace {

std::vector<std::string> enumerate_vc(const GraphInstance& g) {
    auto e = vertex_cover_enum(g);
    return sorted_strings(run_to_completion(e).solutions);
}

std::vector<std::string> enumerate_horn(const HornFormula& f) {
    auto e = horn_sat_enum(f);
    return strings_of(run_to_completion(e).solutions);
}

std::vector<Cost> emit_costs(const SyntheticSpec& s) {
    auto e = synthetic_enum(s);
    return run_to_completion(e).trace.emit_costs;
}

// Halting by B(|Sol| + 1) as well as emission i by B(i).
bool honours(const DelayTrace& t, const BudgetSchedule& b, std::uint64_t k, std::uint64_t n) {
    for (std::size_t i = 0; i < t.emit_costs.size(); ++i)
        if (t.emit_costs[i] > b.at(k, n, i + 1)) return false;
    return t.total_cost <= b.at(k, n, t.solution_count() + 1);
}

}  // namespace

TEST_CASE("vertex cover on the path a-b-c") {
    const GraphInstance p3{3, {{0, 1}, {1, 2}}, 1};
    CHECK(enumerate_vc(p3) == std::vector<std::string>{"b"});
    GraphInstance p3k2 = p3;
    p3k2.k = 2;
    CHECK(enumerate_vc(p3k2) == std::vector<std::string>{"ab", "ac", "b", "bc"});
}

TEST_CASE("vertex cover on an edgeless graph lists all small subsets") {
    const GraphInstance g{3, {}, 2};
    CHECK(enumerate_vc(g) == std::vector<std::string>{"", "a", "ab", "ac", "b", "bc", "c"});
    const GraphInstance empty{0, {}, 0};
    CHECK(enumerate_vc(empty) == std::vector<std::string>{""});
}

TEST_CASE("graph encoding and validation") {
    const GraphInstance p3{3, {{0, 1}, {1, 2}}, 1};
    CHECK(p3.encode() == "1\n010\n101\n010\n");
    const auto back = GraphInstance::decode(p3.encode());
    CHECK(back.vertices == 3);
    CHECK(back.k == 1);
    CHECK(back.edges == p3.edges);
    CHECK_THROWS_AS((GraphInstance{2, {{0, 0}}, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GraphInstance{2, {{0, 1}, {1, 0}}, 1}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((GraphInstance{2, {{0, 1}}, 3}.validate()), std::invalid_argument);
    CHECK(vertex_cover_problem().parametrisation(p3.encode()) == 1);
}

TEST_CASE("parse_edge_list") {
    const auto g = parse_edge_list("3 2\n0 1\n1 2\n", 1);
    CHECK(g.vertices == 3);
    CHECK(g.k == 1);
    CHECK(g.edges == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {1, 2}});
    CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n", 1), ParseError);
    CHECK_THROWS_AS(parse_edge_list("3 1\n0 7\n", 1), ParseError);
    try {
        parse_edge_list("3 1\n0 x\n", 1);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(e.column() == 3);
    }
}

TEST_CASE("Horn-SAT examples") {
    CHECK(enumerate_horn(HornFormula{2, {{1}, {-1, 2}}}) == std::vector<std::string>{"11"});
    CHECK(enumerate_horn(HornFormula{2, {}}) == std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(enumerate_horn(HornFormula{1, {{1}, {-1}}}).empty());
    CHECK(HornFormula{2, {{1}, {-1, 2}}}.encode() == "vv\n+.\n-+\n");
    CHECK(horn_sat_problem().parametrisation("vv\n") == 1);
}

TEST_CASE("parse_dimacs") {
    const auto f = parse_dimacs("c tiny\np cnf 2 2\n1 0\n-1 2 0\n");
    CHECK(f.variable_count == 2);
    CHECK(f.clauses == std::vector<std::vector<int>>{{1}, {-1, 2}});
    try {
        parse_dimacs("p cnf 2 1\n1 2 0\n");
        FAIL("expected NotHorn");
    } catch (const NotHorn& e) {
        CHECK(e.clause_index() == 0);
    }
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 2\n1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p cnf 2 1\n3 0\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("1 0\n"), ParseError);
}

TEST_CASE("synthetic cost shapes") {
    SyntheticSpec s;
    s.profile = SyntheticProfile::Structured;
    s.a = 1;
    s.m = 3;
    CHECK(emit_costs(s) == std::vector<Cost>{1, 3, 6});

    s.a = 0;
    s.m = 5;
    s.t_of_k = ParamFunction::constant(7);
    CHECK(emit_costs(s) == std::vector<Cost>{7, 14, 21, 28, 35});

    SyntheticSpec f;
    f.profile = SyntheticProfile::FrontLoaded;
    f.t_of_k = ParamFunction::constant(10);
    f.m = 4;
    CHECK(emit_costs(f) == std::vector<Cost>{11, 12, 13, 14});

    f.postcomputation = 9;
    auto e = synthetic_enum(f);
    CHECK(run_to_completion(e).trace.delays == std::vector<Cost>{11, 1, 1, 1, 9});

    CHECK(synthetic_solution(42) == "sol_000000000042");
    CHECK(synthetic_solution(42).size() == kSyntheticWidth);
}

TEST_CASE("synthetic spec JSON") {
    const auto j = nlohmann::json::parse(
        R"({"n":4,"k":2,"a":1,"m":5,"profile":"front_loaded","t_table":[1,1,3],"p_coeffs":[0,2]})");
    const auto s = SyntheticSpec::from_json(j);
    CHECK(s.scale() == 24);
    CHECK(s.profile == SyntheticProfile::FrontLoaded);
    CHECK(SyntheticSpec::from_json(s.to_json()).to_json() == s.to_json());
    CHECK_THROWS(SyntheticSpec::from_json(nlohmann::json::parse(R"({"n":1,"k":0,"a":0,"m":1,"profile":"odd","t_const":1,"p_coeffs":[1]})")));
    CHECK(synthetic_problem().parametrisation(synthetic_instance_bytes(s)) == 2);
}

TEST_CASE("structured synthetic delays follow (i+1)^a") {
    SyntheticSpec s;
    s.t_of_k = ParamFunction::constant(3);
    s.a = 2;
    s.m = 100;
    auto e = synthetic_enum(s);
    const auto r = run_to_completion(e);
    // d_i = 3 (i+1)^2, so the i^2 shape holds with factor 2^2 and is tight at i = 1
    const auto own = check_delay_bound(r.trace, 3, 1, 2);
    CHECK_FALSE(own.pass);
    CHECK(own.first_violation == std::size_t{1});
    CHECK(own.max_ratio == doctest::Approx(4.0));
    const auto rep = check_delay_bound(r.trace, 3 * 4, 1, 2);
    CHECK(rep.pass);
    CHECK(rep.max_ratio == doctest::Approx(1.0));
}

TEST_CASE("property: suite enumerators match independent brute force") {
    Rng rng(3);
    for (int round = 0; round < 150; ++round) {
        const auto g = random_graph(rng, 6);
        auto e = vertex_cover_enum(g);
        const auto r = run_to_completion(e);
        REQUIRE(sorted_strings(r.solutions) == vertex_covers(g));
        const Instance x(vertex_cover_problem(), g.encode());
        REQUIRE(verify_solutions(vertex_cover_problem(), x, r.solutions).pass);
        REQUIRE(honours(r.trace, vertex_cover_bound(), x.param(), x.size()));
    }
    for (int round = 0; round < 150; ++round) {
        const auto f = random_horn(rng, 10, 20);
        auto e = horn_sat_enum(f);
        const auto r = run_to_completion(e);
        REQUIRE(strings_of(r.solutions) == horn_models(f));
        const Instance x(horn_sat_problem(), f.encode());
        REQUIRE(verify_solutions(horn_sat_problem(), x, r.solutions).pass);
        REQUIRE(honours(r.trace, horn_sat_bound(), x.param(), x.size()));
    }
    for (int round = 0; round < 100; ++round) {
        const auto s = random_synthetic(rng, 200);
        auto e = synthetic_enum(s);
        const auto r = run_to_completion(e, kCostInfinity);
        REQUIRE(r.solutions.size() == s.m);
        REQUIRE(honours(r.trace, synthetic_cap_schedule(s), s.k, s.n));
    }
}

TEST_CASE("Horn delays stay polynomial in the formula size") {
    // 12 free variables: 4096 solutions, every gap bounded by the same constant
    HornFormula f{12, {}};
    auto e = horn_sat_enum(f);
    const auto r = run_to_completion(e);
    REQUIRE(r.solutions.size() == 4096);
    Cost worst = 0;
    for (std::size_t i = 1; i + 1 < r.trace.delays.size(); ++i) worst = std::max(worst, r.trace.delays[i]);
    CHECK(worst <= 2 * 12 + 1);
}
