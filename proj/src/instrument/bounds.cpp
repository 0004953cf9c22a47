#include <cmath>
#include <ostream>

#include "stepenum/errors.hpp"
#include "stepenum/instrument.hpp"

namespace stepenum {

namespace {

__extension__ using Wide = unsigned __int128;

// Bound values can exceed 64 bits before the trace does; cap at 2^100.
Wide bound_at(Cost t_k, Cost p_n, std::uint64_t i, unsigned a) {
    const Wide cap = static_cast<Wide>(1) << 100;
    Wide r = static_cast<Wide>(t_k) * p_n;
    for (unsigned e = 0; e < a && r != 0; ++e) {
        r *= i;
        if (r > cap) return cap;
    }
    return r;
}

// Tracks max observed/bound as an exact fraction.
class RatioTracker {
public:
    void observe(Wide value, Wide bound) {
        if (value == 0) return;
        if (bound == 0) {
            infinite_ = true;
            return;
        }
        // value/bound > num_/den_  <=>  value*den_ > num_*bound  (both < 2^101 * 2^101 is too
        // wide for 128 bits, so compare as long double when the products could overflow)
        const long double lhs = static_cast<long double>(value) * static_cast<long double>(den_);
        const long double rhs = static_cast<long double>(num_) * static_cast<long double>(bound);
        if (lhs > rhs) {
            num_ = value;
            den_ = bound;
        }
    }
    double value(bool pass) const {
        if (infinite_) return INFINITY;
        const double r = static_cast<double>(static_cast<long double>(num_) / static_cast<long double>(den_));
        if (!pass && r <= 1.0) return std::nextafter(1.0, 2.0);
        if (pass && r > 1.0) return 1.0;
        return r;
    }

private:
    Wide num_ = 0;
    Wide den_ = 1;
    bool infinite_ = false;
};

}  // namespace

BoundReport check_delay_bound(const DelayTrace& trace, Cost t_k, Cost p_n, unsigned a) {
    BoundReport r;
    r.kind = BoundKind::Delay;
    r.a = a;
    r.t_k = t_k;
    r.p_n = p_n;
    RatioTracker ratio;
    for (std::size_t i = 0; i < trace.delays.size(); ++i) {
        // d_0 is measured against t p regardless of a
        const Wide b = i == 0 ? bound_at(t_k, p_n, 1, 0) : bound_at(t_k, p_n, i, a);
        const Wide d = trace.delays[i];
        ratio.observe(d, b);
        if (d > b && !r.first_violation) r.first_violation = i;
    }
    r.pass = !r.first_violation;
    r.max_ratio = ratio.value(r.pass);
    return r;
}

BoundReport check_cap_bound(const DelayTrace& trace, Cost t_k, Cost p_n, unsigned a) {
    BoundReport r;
    r.kind = BoundKind::CapTotal;
    r.a = a;
    r.t_k = t_k;
    r.p_n = p_n;
    RatioTracker ratio;
    for (std::size_t i = 1; i <= trace.emit_costs.size(); ++i) {
        const Wide b = bound_at(t_k, p_n, i, a);
        const Wide c = trace.emit_costs[i - 1];
        ratio.observe(c, b);
        if (c > b && !r.first_violation) r.first_violation = i;
    }
    r.pass = !r.first_violation;
    r.max_ratio = ratio.value(r.pass);
    return r;
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j{{"bound_kind", kind == BoundKind::Delay ? "Delay" : "CapTotal"},
                     {"a", a},
                     {"t_k", t_k},
                     {"p_n", p_n},
                     {"pass", pass},
                     {"verdict", pass ? "consistent with bound" : "bound falsified"}};
    j["first_violation"] = first_violation ? nlohmann::json(*first_violation) : nlohmann::json(nullptr);
    j["max_ratio"] = std::isinf(max_ratio) ? nlohmann::json("inf") : nlohmann::json(max_ratio);
    return j;
}

MemoryProfile memory_profile(const RegularizerProfile& run) {
    if (!run.sampling) throw NoSamples("regularized run was made without queue sampling");
    MemoryProfile m;
    m.samples = run.samples;
    for (const auto& s : m.samples) m.max_queue = std::max(m.max_queue, s.queue_size);
    return m;
}

nlohmann::json MemoryProfile::to_json() const {
    nlohmann::json samples_json = nlohmann::json::array();
    for (const auto& s : samples) samples_json.push_back({s.index, s.queue_size});
    return nlohmann::json{{"max_queue", max_queue}, {"samples", samples_json}};
}

void write_queue_csv(std::ostream& out, const MemoryProfile& profile) {
    out << "i,queue_size_at_emission\n";
    for (const auto& s : profile.samples) out << s.index << ',' << s.queue_size << '\n';
}

}  // namespace stepenum
