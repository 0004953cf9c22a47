#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "stepenum/enumerator.hpp"
#include "stepenum/schedule.hpp"
#include "stepenum/trace.hpp"

namespace stepenum {

/// Ticks charged for extracting and writing one buffered solution.
inline constexpr Cost kOutputTicks = 1;

struct RegularizerOptions {
    /// When the inner enumerator misses its declared bound, keep simulating
    /// and emit late instead of throwing BoundViolation. Misses are recorded.
    bool continue_on_violation = false;
    bool record_queue_samples = true;
};

struct QueueSample {
    std::size_t index;       ///< emission index, 1-based
    std::size_t queue_size;  ///< buffered solutions just before the extraction
};

/// Side information a regularized run leaves behind.
struct RegularizerProfile {
    bool sampling = false;
    std::vector<QueueSample> samples;
    std::vector<std::size_t> violations;  ///< solution indices whose budget was missed
    std::size_t inner_emissions = 0;
    std::size_t outer_emissions = 0;
};

struct Regularized {
    SteppedEnumerator enumerator;
    std::shared_ptr<const RegularizerProfile> profile;
};

/// Priority-queue regularizer: turns an enumerator that produces its first i
/// solutions within B(i) = t(k) p(n) i^e ticks (e >= 1) into one whose i-th
/// delay is at most B(i+1) - B(i) plus kOutputTicks.
///
/// Inner emissions are buffered in a min-queue (canonical byte order) instead
/// of being printed; the insertion is the inner's own emission tick. Each
/// time the inner step counter reaches B(solindex) the least buffered solution
/// is output. After the inner halts the queue drains one solution per
/// output step. Reaching B(i) with an empty queue while the inner is still
/// running means the declared bound is false: BoundViolation(i).
Regularized cap_to_inc(SteppedEnumerator inner, BudgetSchedule schedule, std::uint64_t k,
                       std::uint64_t n, RegularizerOptions options = {});

enum class CapCheckFailure { None, Premise, Conclusion };

struct CapCheckVerdict {
    bool pass = true;
    CapCheckFailure failure = CapCheckFailure::None;
    std::size_t index = 0;
};

/// Checks the structured-delay premise d_k <= t p k^a (0^0 = 1) for every k,
/// and the capped conclusion sum_{k<=i} d_k <= 2 t p i^(a+1) for every i >= 1,
/// scanning i upwards and reporting whichever fails first.
CapCheckVerdict inc_to_cap_bound(const DelayTrace& trace, const BudgetSchedule& schedule_a,
                                 std::uint64_t k, std::uint64_t n);

/// slack_i = B(i+1) - B(i) - d_i for every delay of the trace.
std::vector<std::int64_t> delay_slack(const DelayTrace& trace, const BudgetSchedule& schedule,
                                      std::uint64_t k, std::uint64_t n);

/// Smallest constant schedule c i^exponent under which a profiling trace
/// meets its cap (emission i by c i^e) and halts by c (n+1)^e.
BudgetSchedule calibrate_schedule(const DelayTrace& profile_run, unsigned exponent);

}  // namespace stepenum
