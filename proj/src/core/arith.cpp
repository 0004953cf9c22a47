#include "stepenum/arith.hpp"

namespace stepenum {

Cost Polynomial::operator()(Cost n) const noexcept {
    // Horner, saturating.
    Cost acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = sat_add(sat_mul(acc, n), *it);
    }
    return acc;
}

std::string Polynomial::to_string() const {
    std::string out;
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
        if (coeffs_[d] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(coeffs_[d]);
        if (d == 1) out += "*n";
        else if (d > 1) out += "*n^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

}  // namespace stepenum
