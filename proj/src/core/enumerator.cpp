#include "stepenum/enumerator.hpp"

#include <stdexcept>

#include "stepenum/errors.hpp"

namespace stepenum {

SteppedEnumerator::SteppedEnumerator(std::unique_ptr<Process> process)
    : process_(std::move(process)) {
    if (!process_) throw std::invalid_argument("SteppedEnumerator: null process");
}

std::vector<EnumeratorEvent> SteppedEnumerator::advance(Cost budget) {
    return run(budget, false);
}

std::vector<EnumeratorEvent> SteppedEnumerator::advance_until_event(Cost budget) {
    return run(budget, true);
}

std::vector<EnumeratorEvent> SteppedEnumerator::run(Cost budget, bool stop_after_event) {
    if (poisoned_) throw std::logic_error("SteppedEnumerator: advanced after an error");
    if (budget == 0) throw std::invalid_argument("SteppedEnumerator: budget must be >= 1");

    std::vector<EnumeratorEvent> events;
    if (finished_) return events;

    try {
        Cost remaining = budget;
        while (!finished_) {
            if (!pending_) {
                Step s = process_->step();
                if (s.cost == 0 && (s.emit || !s.done)) {
                    throw CostAccountingViolation(
                        s.emit ? "emission reported at zero cost"
                               : "zero-cost step that does not finish");
                }
                pending_left_ = s.cost;
                pending_ = std::move(s);
            }
            if (pending_left_ > remaining) {
                pending_left_ -= remaining;
                consumed_ += remaining;
                break;
            }
            remaining -= pending_left_;
            consumed_ += pending_left_;
            pending_left_ = 0;

            Step s = std::move(*pending_);
            pending_.reset();
            const bool had_event = s.emit || s.done;
            if (s.emit) {
                if (!emitted_.insert(*s.emit).second) throw DuplicateEmission(s.emit->bytes());
                events.push_back(Emitted{std::move(*s.emit), consumed_});
            }
            if (s.done) {
                finished_ = true;
                events.push_back(Finished{consumed_});
            }
            if (stop_after_event && had_event) break;
        }
    } catch (...) {
        poisoned_ = true;
        throw;
    }
    return events;
}

}  // namespace stepenum
