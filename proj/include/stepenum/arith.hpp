#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace stepenum {

/// Abstract work units. One tick is one self-reported unit of enumerator work.
using Cost = std::uint64_t;

inline constexpr Cost kCostInfinity = std::numeric_limits<Cost>::max();
inline constexpr Cost kDefaultCostCap = 100'000'000;

// Saturating arithmetic: a bound that overflows is treated as unbounded, which
// keeps every `value <= bound` comparison correct.
constexpr Cost sat_add(Cost a, Cost b) noexcept {
    return a > kCostInfinity - b ? kCostInfinity : a + b;
}

constexpr Cost sat_mul(Cost a, Cost b) noexcept {
    if (a == 0 || b == 0) return 0;
    return a > kCostInfinity / b ? kCostInfinity : a * b;
}

/// base^exp with 0^0 = 1.
constexpr Cost sat_pow(Cost base, unsigned exp) noexcept {
    Cost r = 1;
    for (unsigned e = 0; e < exp; ++e) {
        r = sat_mul(r, base);
        if (r == 0 || r == kCostInfinity) break;
    }
    return r;
}

/// Polynomial with natural coefficients, c[0] + c[1] n + c[2] n^2 + ...
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Cost> coeffs) : coeffs_(std::move(coeffs)) {}

    const std::vector<Cost>& coeffs() const noexcept { return coeffs_; }
    Cost operator()(Cost n) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::vector<Cost> coeffs_;
};

}  // namespace stepenum
