#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stepenum/enumerator.hpp"
#include "stepenum/problem.hpp"
#include "stepenum/schedule.hpp"

namespace stepenum {

/// CNF in which every clause has at most one positive literal. Literals use
/// DIMACS numbering: +v / -v for variable v in 1..variable_count.
struct HornFormula {
    std::size_t variable_count = 0;
    std::vector<std::vector<int>> clauses;

    /// Throws NotHorn or std::invalid_argument.
    void validate() const;

    /// Canonical instance bytes: a header row of variable_count 'v' characters,
    /// then one row per clause with '+', '-' or '.' per variable. Repeated
    /// literals merge and tautological clauses are dropped, which keeps the
    /// solution set unchanged.
    std::string encode() const;
    static HornFormula decode(std::string_view raw);

    /// Assignment as a '0'/'1' string, variable 1 first.
    bool satisfied_by(std::string_view bits) const;
};

/// DIMACS CNF: `c` comment lines, a `p cnf V C` header, zero-terminated
/// clauses. Rejects non-Horn clauses with NotHorn(clause index).
HornFormula parse_dimacs(std::string_view text);

/// Horn-SAT with the trivial parametrisation kappa = 1.
const ProblemDescriptor& horn_sat_problem();

/// Branches on the lowest unassigned variable (0 before 1) after unit
/// propagation and prunes on conflict. Propagation without conflict leaves a
/// satisfiable Horn formula, so every surviving branch reaches a solution and
/// the delay stays polynomial. Solutions come out in increasing bit-string
/// order. Ticks: one per decision plus one per clause visited while
/// propagating.
SteppedEnumerator horn_sat_enum(const HornFormula& f);

/// Declared capped bound t = 1, p(n) = 4n^2 + 4n + 4, exponent 1 over the
/// canonical encoding size n: between two emissions at most 4V decisions
/// happen, each propagating over fewer than n clause visits.
BudgetSchedule horn_sat_bound();

}  // namespace stepenum
