#include "stepenum/regularize.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>

#include "stepenum/errors.hpp"

namespace stepenum {

namespace {

class RegularizerProcess final : public Process {
public:
    RegularizerProcess(SteppedEnumerator inner, BudgetSchedule schedule, std::uint64_t k,
                       std::uint64_t n, RegularizerOptions options,
                       std::shared_ptr<RegularizerProfile> profile)
        : inner_(std::move(inner)),
          schedule_(std::move(schedule)),
          k_(k),
          n_(n),
          options_(options),
          profile_(std::move(profile)) {
        inner_finished_ = inner_.finished();
        steps_ = inner_.cost_consumed();
    }

    Step step() override {
        for (;;) {
            if (inner_finished_) {
                if (queue_.empty()) return Step{0, std::nullopt, true};
                return output();
            }

            const Cost threshold = schedule_.at(k_, n_, solindex_);
            if (steps_ < threshold) {
                const Cost consumed = simulate(inner_.advance(threshold - steps_));
                if (consumed > 0) return Step{consumed, std::nullopt, false};
                continue;
            }

            if (!queue_.empty()) return output();

            // B(solindex) reached with fewer than solindex inner solutions.
            if (!options_.continue_on_violation) throw BoundViolation(solindex_);
            if (profile_->violations.empty() || profile_->violations.back() != solindex_) {
                profile_->violations.push_back(solindex_);
            }
            const Cost consumed = simulate(inner_.advance_until_event(kCostInfinity));
            if (consumed > 0) return Step{consumed, std::nullopt, false};
        }
    }

private:
    // Buffers the inner events; returns the ticks the inner spent.
    Cost simulate(const std::vector<EnumeratorEvent>& events) {
        for (const auto& ev : events) {
            if (const auto* e = std::get_if<Emitted>(&ev)) {
                queue_.push(e->solution);
                ++profile_->inner_emissions;
            } else {
                inner_finished_ = true;
            }
        }
        const Cost consumed = inner_.cost_consumed() - steps_;
        steps_ = inner_.cost_consumed();
        return consumed;
    }

    Step output() {
        if (options_.record_queue_samples) {
            profile_->samples.push_back(QueueSample{solindex_, queue_.size()});
        }
        Solution s = queue_.top();
        queue_.pop();
        ++solindex_;
        ++profile_->outer_emissions;
        return Step{kOutputTicks, std::move(s), false};
    }

    SteppedEnumerator inner_;
    BudgetSchedule schedule_;
    std::uint64_t k_;
    std::uint64_t n_;
    RegularizerOptions options_;
    std::shared_ptr<RegularizerProfile> profile_;

    Cost steps_ = 0;
    std::size_t solindex_ = 1;
    std::priority_queue<Solution, std::vector<Solution>, std::greater<>> queue_;
    bool inner_finished_ = false;
};

// Exact comparisons on 128-bit intermediates.
__extension__ using Wide = unsigned __int128;

Wide wide_bound(Cost scale, std::uint64_t i, unsigned exponent) {
    Wide r = scale;
    const Wide cap = static_cast<Wide>(1) << 100;
    for (unsigned e = 0; e < exponent && r != 0; ++e) {
        r *= i;
        if (r > cap) return cap;
    }
    return r;
}

__extension__ using SignedWide = __int128;

std::int64_t clamp_i64(SignedWide v) {
    constexpr auto lo = std::numeric_limits<std::int64_t>::min();
    constexpr auto hi = std::numeric_limits<std::int64_t>::max();
    if (v < lo) return lo;
    if (v > hi) return hi;
    return static_cast<std::int64_t>(v);
}

}  // namespace

Regularized cap_to_inc(SteppedEnumerator inner, BudgetSchedule schedule, std::uint64_t k,
                       std::uint64_t n, RegularizerOptions options) {
    if (schedule.exponent == 0) {
        throw std::invalid_argument("cap_to_inc: the cap schedule needs exponent >= 1");
    }
    auto profile = std::make_shared<RegularizerProfile>();
    profile->sampling = options.record_queue_samples;
    auto enumerator = make_enumerator<RegularizerProcess>(std::move(inner), std::move(schedule), k,
                                                          n, options, profile);
    return Regularized{std::move(enumerator), std::move(profile)};
}

CapCheckVerdict inc_to_cap_bound(const DelayTrace& trace, const BudgetSchedule& schedule_a,
                                 std::uint64_t k, std::uint64_t n) {
    const Cost scale = schedule_a.scale(k, n);
    const unsigned a = schedule_a.exponent;
    Wide cumulative = 0;
    for (std::size_t i = 0; i < trace.delays.size(); ++i) {
        const Cost d = trace.delays[i];
        if (d > wide_bound(scale, i, a)) return {false, CapCheckFailure::Premise, i};
        cumulative += d;
        if (i >= 1 && cumulative > 2 * wide_bound(scale, i, a + 1)) {
            return {false, CapCheckFailure::Conclusion, i};
        }
    }
    return {};
}

std::vector<std::int64_t> delay_slack(const DelayTrace& trace, const BudgetSchedule& schedule,
                                      std::uint64_t k, std::uint64_t n) {
    const Cost scale = schedule.scale(k, n);
    std::vector<std::int64_t> out;
    out.reserve(trace.delays.size());
    for (std::size_t i = 0; i < trace.delays.size(); ++i) {
        const Wide hi = wide_bound(scale, i + 1, schedule.exponent);
        const Wide lo = wide_bound(scale, i, schedule.exponent);
        out.push_back(clamp_i64(static_cast<SignedWide>(hi - lo) -
                                static_cast<SignedWide>(trace.delays[i])));
    }
    return out;
}

BudgetSchedule calibrate_schedule(const DelayTrace& profile_run, unsigned exponent) {
    Cost c = 1;
    auto need = [&](Cost cost, std::uint64_t i) {
        const Cost denom = sat_pow(i, exponent);
        if (denom == 0) return;
        c = std::max(c, cost / denom + (cost % denom != 0));
    };
    for (std::size_t i = 0; i < profile_run.emit_costs.size(); ++i) need(profile_run.emit_costs[i], i + 1);
    need(profile_run.total_cost, profile_run.solution_count() + 1);
    return BudgetSchedule::constant(c, exponent);
}

}  // namespace stepenum
