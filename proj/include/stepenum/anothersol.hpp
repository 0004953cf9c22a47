#pragma once

#include <functional>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "stepenum/enumerator.hpp"
#include "stepenum/problem.hpp"
#include "stepenum/schedule.hpp"

namespace stepenum {

/// Answer "S already contains every solution".
struct Exhausted {
    friend bool operator==(Exhausted, Exhausted) = default;
};

using OracleAnswer = std::variant<Solution, Exhausted>;

struct OracleReply {
    OracleAnswer answer;
    Cost ticks = 1;  ///< reported cost of this invocation, >= 1
};

/// Solver for: given x and S, output some y in Sol(x) \ S, or Exhausted iff
/// S covers Sol(x). Must be reentrant.
struct AnotherSolOracle {
    std::function<OracleReply(const Instance&, const SolutionSet&)> solve;
};

/// Declared capped bound of an enumerator: i solutions within
/// t(k) i^a p(n) ticks. Same shape as a budget schedule.
using EnumeratorBoundDecl = BudgetSchedule;

/// Produces a fresh enumerator for the instance on each call.
using EnumeratorFactory = std::function<SteppedEnumerator(const Instance&)>;

/// Repeatedly asks the oracle for a new solution, emits it and adds it to S
/// until the oracle reports Exhausted. Each step costs the oracle's reported
/// ticks plus one membership test and one insertion. Throws
/// OracleContractViolation if an answer is already in S or fails the check.
SteppedEnumerator enum_from_oracle(AnotherSolOracle oracle, const ProblemDescriptor& problem,
                                   Instance x);

/// One oracle call answered by simulation: runs a fresh enumerator for
/// t(k) (|S|+1)^a p(n) ticks (inclusive). If it halted, its complete output
/// decides the answer; otherwise it has emitted at least |S|+1 solutions
/// (else BoundViolation(|S|+1)). Either way the lexicographically least
/// emitted solution outside S is returned, or Exhausted.
OracleReply oracle_from_enum(const EnumeratorFactory& make_enum, const EnumeratorBoundDecl& bound,
                             const Instance& x, const SolutionSet& S);

/// Adapts oracle_from_enum to the oracle interface.
AnotherSolOracle oracle_from_enum(EnumeratorFactory make_enum, EnumeratorBoundDecl bound);

/// Budget t(k) (s+1)^a p(n) used for a partial set of size s.
Cost simulation_budget(const EnumeratorBoundDecl& bound, const Instance& x, std::size_t s);

/// Decides S ⊇ Sol(x) with an enumerator whose total running time is at most
/// t(k) (|Sol(x)|+1)^a p(n): run it for t(k) (|S|+1)^a p(n) ticks; if it has
/// not halted there are more solutions than |S|.
bool completeness_check(const EnumeratorFactory& make_enum, const EnumeratorBoundDecl& bound,
                        const Instance& x, const SolutionSet& S);

struct RoundtripVerdict {
    bool pass = false;
    std::vector<Solution> solutions;  ///< emission order of the composed enumerator
    std::size_t oracle_calls = 0;
    Cost ticks_total = 0;

    /// {instance, pass, solutions_count, oracle_calls, ticks_total}
    nlohmann::json to_json(std::string_view instance_label) const;
};

/// Algorithm-1 enumeration over the simulation oracle, compared with the
/// brute-force ground truth.
RoundtripVerdict roundtrip(const ProblemDescriptor& problem, const Instance& x,
                           const EnumeratorFactory& make_enum, const EnumeratorBoundDecl& bound,
                           Cost cap = kCostInfinity);

}  // namespace stepenum
