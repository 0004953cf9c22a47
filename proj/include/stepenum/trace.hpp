#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "stepenum/enumerator.hpp"

namespace stepenum {

/// The delays d_0 .. d_n of a completed run with n emissions.
///
/// d_0 is the precomputation (cost up to the first emission), d_i for
/// 1 <= i < n the gap between emission i and i+1, and d_n the postcomputation
/// after the last emission. With n = 0 the single entry d_0 is the whole run.
struct DelayTrace {
    std::vector<Cost> delays;
    std::vector<Cost> emit_costs;  ///< cumulative cost at emission 1..n
    Cost total_cost = 0;

    std::size_t solution_count() const noexcept { return emit_costs.size(); }

    /// Builds a trace from a complete event stream ending in Finished.
    static DelayTrace from_events(std::span<const EnumeratorEvent> events);

    friend bool operator==(const DelayTrace&, const DelayTrace&) = default;
};

struct RunResult {
    std::vector<Solution> solutions;  ///< in emission order
    DelayTrace trace;
};

/// Advances a fresh enumerator until it finishes. Throws BudgetExhausted once
/// `cap` ticks are spent without finishing.
RunResult run_to_completion(SteppedEnumerator& enumerator, Cost cap = kDefaultCostCap);

/// CSV with header `i,delay,cum_cost`, one row per delay.
void write_trace_csv(std::ostream& out, const DelayTrace& trace);
DelayTrace read_trace_csv(std::istream& in);

}  // namespace stepenum
