#include "stepenum/anothersol.hpp"

#include <algorithm>
#include <memory>

#include "stepenum/errors.hpp"
#include "stepenum/generator.hpp"
#include "stepenum/trace.hpp"

namespace stepenum {

namespace {

// Set membership and insertion, one tick each.
constexpr Cost kSetOpTicks = 1;

Generator<Step> algorithm_one(AnotherSolOracle oracle, Checker check, Instance x) {
    SolutionSet found;
    for (;;) {
        OracleReply reply = oracle.solve(x, found);
        const Cost call = std::max<Cost>(reply.ticks, 1);
        if (std::holds_alternative<Exhausted>(reply.answer)) {
            Step out{call, std::nullopt, true};
            co_yield std::move(out);
            co_return;
        }
        Solution y = std::get<Solution>(std::move(reply.answer));
        if (found.contains(y)) {
            throw OracleContractViolation("oracle returned '" + y.bytes() + "' which is already in S");
        }
        if (!check(y.bytes())) {
            throw OracleContractViolation("oracle returned '" + y.bytes() + "' which is not a solution");
        }
        found.insert(y);
        Step out{call + 2 * kSetOpTicks, std::move(y), false};
        co_yield std::move(out);
    }
}

}  // namespace

SteppedEnumerator enum_from_oracle(AnotherSolOracle oracle, const ProblemDescriptor& problem,
                                   Instance x) {
    Checker check = problem.make_checker(x.raw());
    return from_generator(algorithm_one(std::move(oracle), std::move(check), std::move(x)));
}

Cost simulation_budget(const EnumeratorBoundDecl& bound, const Instance& x, std::size_t s) {
    return bound.at(x.param(), x.size(), s + 1);
}

OracleReply oracle_from_enum(const EnumeratorFactory& make_enum, const EnumeratorBoundDecl& bound,
                             const Instance& x, const SolutionSet& S) {
    const Cost budget = std::max<Cost>(simulation_budget(bound, x, S.size()), 1);
    SteppedEnumerator e = make_enum(x);
    const auto events = e.advance(budget);

    std::size_t emitted = 0;
    const Solution* best = nullptr;
    for (const auto& ev : events) {
        if (const auto* em = std::get_if<Emitted>(&ev)) {
            ++emitted;
            if (!S.contains(em->solution) && (!best || em->solution < *best)) best = &em->solution;
        }
    }
    const Cost ticks = std::max<Cost>(sat_add(e.cost_consumed(), emitted * kSetOpTicks), 1);
    if (!e.finished() && emitted <= S.size()) throw BoundViolation(S.size() + 1);
    if (best) return OracleReply{*best, ticks};
    return OracleReply{Exhausted{}, ticks};
}

AnotherSolOracle oracle_from_enum(EnumeratorFactory make_enum, EnumeratorBoundDecl bound) {
    return AnotherSolOracle{[make_enum = std::move(make_enum), bound = std::move(bound)](
                                const Instance& x, const SolutionSet& S) {
        return oracle_from_enum(make_enum, bound, x, S);
    }};
}

bool completeness_check(const EnumeratorFactory& make_enum, const EnumeratorBoundDecl& bound,
                        const Instance& x, const SolutionSet& S) {
    const Cost budget = std::max<Cost>(simulation_budget(bound, x, S.size()), 1);
    SteppedEnumerator e = make_enum(x);
    const auto events = e.advance(budget);
    if (!e.finished()) return false;
    return std::all_of(events.begin(), events.end(), [&](const EnumeratorEvent& ev) {
        const auto* em = std::get_if<Emitted>(&ev);
        return !em || S.contains(em->solution);
    });
}

nlohmann::json RoundtripVerdict::to_json(std::string_view instance_label) const {
    return nlohmann::json{{"instance", instance_label},
                          {"pass", pass},
                          {"solutions_count", solutions.size()},
                          {"oracle_calls", oracle_calls},
                          {"ticks_total", ticks_total}};
}

RoundtripVerdict roundtrip(const ProblemDescriptor& problem, const Instance& x,
                           const EnumeratorFactory& make_enum, const EnumeratorBoundDecl& bound,
                           Cost cap) {
    auto calls = std::make_shared<std::size_t>(0);
    AnotherSolOracle inner = oracle_from_enum(make_enum, bound);
    AnotherSolOracle counted{[inner, calls](const Instance& xi, const SolutionSet& S) {
        ++*calls;
        return inner.solve(xi, S);
    }};

    SteppedEnumerator composed = enum_from_oracle(std::move(counted), problem, x);
    RunResult run = run_to_completion(composed, cap);

    RoundtripVerdict v;
    v.oracle_calls = *calls;
    v.ticks_total = run.trace.total_cost;
    v.pass = sorted(run.solutions) == brute_force_enum(problem, x);
    v.solutions = std::move(run.solutions);
    return v;
}

}  // namespace stepenum
