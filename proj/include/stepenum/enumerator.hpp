#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "stepenum/arith.hpp"
#include "stepenum/solution.hpp"

namespace stepenum {

/// One atomic chunk of work reported by a process.
///
/// The process has performed `cost` ticks of work; once those ticks are paid,
/// `emit` (if any) is output and then, if `done`, the process halts. A step
/// may be free only when it finishes without emitting.
struct Step {
    Cost cost = 0;
    std::optional<Solution> emit;
    bool done = false;
};

/// A resumable enumeration process. Implementations must be deterministic:
/// the sequence of steps depends only on the construction arguments.
class Process {
public:
    virtual ~Process() = default;
    virtual Step step() = 0;
};

struct Emitted {
    Solution solution;
    Cost at_cost;
};

struct Finished {
    Cost at_cost;
};

using EnumeratorEvent = std::variant<Emitted, Finished>;

/// Drives a Process under cost budgets.
///
/// Steps are paid tick by tick, so a multi-tick step can straddle several
/// advance() calls and its emission appears once the last tick is paid. The
/// observable event sequence therefore depends only on cumulative budget,
/// never on how it was split across calls.
///
/// Not thread-safe: advance a single instance from one thread at a time.
class SteppedEnumerator {
public:
    explicit SteppedEnumerator(std::unique_ptr<Process> process);

    SteppedEnumerator(SteppedEnumerator&&) noexcept = default;
    SteppedEnumerator& operator=(SteppedEnumerator&&) noexcept = default;

    /// Consumes at most `budget` ticks (budget >= 1) and returns the events
    /// that completed within them. Zero-cost events sitting exactly at the
    /// budget boundary are included.
    std::vector<EnumeratorEvent> advance(Cost budget);

    /// Like advance(), but returns as soon as the first event completes.
    std::vector<EnumeratorEvent> advance_until_event(Cost budget);

    Cost cost_consumed() const noexcept { return consumed_; }
    bool finished() const noexcept { return finished_; }
    bool poisoned() const noexcept { return poisoned_; }
    std::size_t emitted_count() const noexcept { return emitted_.size(); }

private:
    std::vector<EnumeratorEvent> run(Cost budget, bool stop_after_event);

    std::unique_ptr<Process> process_;
    std::optional<Step> pending_;
    Cost pending_left_ = 0;
    Cost consumed_ = 0;
    bool finished_ = false;
    bool poisoned_ = false;
    SolutionSet emitted_;
};

template <class P, class... Args>
SteppedEnumerator make_enumerator(Args&&... args) {
    return SteppedEnumerator(std::make_unique<P>(std::forward<Args>(args)...));
}

}  // namespace stepenum
