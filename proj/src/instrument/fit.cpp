#include <algorithm>
#include <cmath>

#include "stepenum/errors.hpp"
#include "stepenum/instrument.hpp"

namespace stepenum {

FitResult fit_exponent(const DelayTrace& trace, std::size_t i_min, std::size_t i_max) {
    const std::size_t n = trace.solution_count();
    FitResult r;
    r.i_min = std::max<std::size_t>(1, i_min);
    r.i_max = n == 0 ? 0 : std::min(i_max, n - 1);
    if (r.i_max < r.i_min || r.i_max - r.i_min + 1 < kMinFitPoints) {
        throw InsufficientData("fit window [" + std::to_string(i_min) + ", " + std::to_string(i_max) +
                               "] holds fewer than 8 delays of a trace with " + std::to_string(n) +
                               " solutions");
    }

    double sx = 0, sy = 0;
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = r.i_min; i <= r.i_max; ++i) {
        if (trace.delays[i] == 0) {
            r.excluded.push_back(i);
            continue;
        }
        const double x = std::log(static_cast<double>(i));
        const double y = std::log(static_cast<double>(trace.delays[i]));
        pts.emplace_back(x, y);
        sx += x;
        sy += y;
    }
    if (pts.size() < kMinFitPoints) {
        throw DegenerateTrace("fewer than 8 nonzero delays in the fit window", r.excluded);
    }
    const double mx = sx / pts.size();
    const double my = sy / pts.size();
    double sxx = 0, sxy = 0, syy = 0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
    }
    r.points = pts.size();
    r.exponent_hat = sxy / sxx;
    r.scale_hat = std::exp(my - r.exponent_hat * mx);
    double ss_res = 0;
    for (const auto& [x, y] : pts) {
        const double e = y - (my + r.exponent_hat * (x - mx));
        ss_res += e * e;
    }
    // relative guard: rounding noise on an exact power law is not variance
    r.r_squared = syy <= 1e-18 * std::max(1.0, my * my * pts.size()) ? 1.0 : std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return r;
}

FitResult fit_exponent(const DelayTrace& trace) {
    const std::size_t n = trace.solution_count();
    return fit_exponent(trace, std::max<std::size_t>(8, n / 100), n);
}

nlohmann::json FitResult::to_json() const {
    return nlohmann::json{{"exponent_hat", exponent_hat}, {"scale_hat", scale_hat},
                          {"r_squared", r_squared},       {"index_range", {i_min, i_max}},
                          {"points", points},             {"excluded_zero_delays", excluded.size()},
                          {"window_note", "engineering choice; finite traces can only be consistent with an exponent"}};
}

}  // namespace stepenum
