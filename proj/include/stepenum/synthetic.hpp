#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "stepenum/enumerator.hpp"
#include "stepenum/problem.hpp"
#include "stepenum/schedule.hpp"

namespace stepenum {

enum class SyntheticProfile { Structured, FrontLoaded };

/// A generator whose cost shape is fixed by construction.
///
/// structured:   emission i lands at cumulative cost sum_{j<=i} s j^a
/// front_loaded: s ticks of setup, then all m solutions one tick apart
///
/// where s = t(k) p(n). Either profile then burns `postcomputation` ticks
/// before halting.
struct SyntheticSpec {
    std::uint64_t n = 1;
    std::uint64_t k = 0;
    unsigned a = 0;
    std::uint64_t m = 0;
    SyntheticProfile profile = SyntheticProfile::Structured;
    ParamFunction t_of_k = ParamFunction::constant(1);
    Polynomial p{{1}};
    Cost postcomputation = 0;

    Cost scale() const { return sat_mul(t_of_k(k), p(n)); }
    void validate() const;

    /// {n, k, a, m, profile, t_const | t_table | t_formula, p_coeffs[, postcomputation]}
    nlohmann::json to_json() const;
    static SyntheticSpec from_json(const nlohmann::json& j);
};

inline constexpr std::size_t kSyntheticWidth = 16;

/// "sol_" followed by the 1-based index, zero-padded to 16 bytes.
std::string synthetic_solution(std::uint64_t index);

/// Instance bytes are the spec's compact JSON (keys sorted); kappa = spec.k.
const ProblemDescriptor& synthetic_problem();
std::string synthetic_instance_bytes(const SyntheticSpec& spec);

SteppedEnumerator synthetic_enum(const SyntheticSpec& spec);

/// A capped schedule with exponent a + 1 that the spec provably honours,
/// halting included: 2s + postcomputation for structured runs (summation
/// bound), s + 1 + postcomputation for front-loaded ones.
BudgetSchedule synthetic_cap_schedule(const SyntheticSpec& spec);

}  // namespace stepenum
