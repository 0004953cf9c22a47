#include "stepenum/synthetic.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

#include "stepenum/errors.hpp"
#include "stepenum/generator.hpp"

namespace stepenum {

void SyntheticSpec::validate() const {
    if (scale() == 0 && (profile == SyntheticProfile::Structured && m > 0)) {
        throw std::invalid_argument("synthetic: structured emissions need t(k)*p(n) >= 1");
    }
    if (m >= 1'000'000'000'000ULL) throw std::invalid_argument("synthetic: m does not fit the solution width");
}

nlohmann::json SyntheticSpec::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    j["n"] = n;
    j["k"] = k;
    j["a"] = a;
    j["m"] = m;
    j["profile"] = profile == SyntheticProfile::Structured ? "structured" : "front_loaded";
    t_of_k.to_json(j);
    j["p_coeffs"] = p.coeffs();
    if (postcomputation != 0) j["postcomputation"] = postcomputation;
    return j;
}

SyntheticSpec SyntheticSpec::from_json(const nlohmann::json& j) {
    SyntheticSpec s;
    s.n = j.at("n").get<std::uint64_t>();
    s.k = j.at("k").get<std::uint64_t>();
    s.a = j.at("a").get<unsigned>();
    s.m = j.at("m").get<std::uint64_t>();
    const auto profile = j.at("profile").get<std::string>();
    if (profile == "structured") s.profile = SyntheticProfile::Structured;
    else if (profile == "front_loaded") s.profile = SyntheticProfile::FrontLoaded;
    else throw std::invalid_argument("synthetic: unknown profile '" + profile + "'");
    s.t_of_k = ParamFunction::from_json(j);
    s.p = Polynomial(j.value("p_coeffs", std::vector<Cost>{1}));
    s.postcomputation = j.value("postcomputation", Cost{0});
    s.validate();
    return s;
}

std::string synthetic_solution(std::uint64_t index) {
    char buf[kSyntheticWidth + 1];
    std::snprintf(buf, sizeof buf, "sol_%012llu", static_cast<unsigned long long>(index));
    return std::string(buf, kSyntheticWidth);
}

std::string synthetic_instance_bytes(const SyntheticSpec& spec) { return spec.to_json().dump(); }

const ProblemDescriptor& synthetic_problem() {
    static const ProblemDescriptor d = [] {
        ProblemDescriptor p;
        p.name = "synthetic";
        p.make_checker = [](std::string_view x) -> Checker {
            const std::uint64_t m = SyntheticSpec::from_json(nlohmann::json::parse(x)).m;
            return [m](std::string_view y) {
                if (y.size() != kSyntheticWidth || y.substr(0, 4) != "sol_") return false;
                std::uint64_t idx = 0;
                const auto digits = y.substr(4);
                const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), idx);
                if (ec != std::errc{} || ptr != digits.data() + digits.size()) return false;
                return idx >= 1 && idx <= m;
            };
        };
        p.length_bound = Polynomial({kSyntheticWidth});
        p.parametrisation = [](std::string_view x) -> std::uint64_t {
            return nlohmann::json::parse(x).at("k").get<std::uint64_t>();
        };
        p.alphabet = "0123456789_los";
        return p;
    }();
    return d;
}

namespace {

Generator<Step> synthetic_run(SyntheticSpec spec) {
    const Cost s = spec.scale();
    if (spec.profile == SyntheticProfile::Structured) {
        for (std::uint64_t i = 1; i <= spec.m; ++i) {
            Step out{sat_mul(s, sat_pow(i, spec.a)), Solution(synthetic_solution(i)), false};
            co_yield std::move(out);
        }
    } else {
        if (s > 0) {
            Step setup{s, std::nullopt, false};
            co_yield std::move(setup);
        }
        for (std::uint64_t i = 1; i <= spec.m; ++i) {
            Step out{1, Solution(synthetic_solution(i)), false};
            co_yield std::move(out);
        }
    }
    if (spec.postcomputation > 0) {
        Step tail{spec.postcomputation, std::nullopt, false};
        co_yield std::move(tail);
    }
}

}  // namespace

SteppedEnumerator synthetic_enum(const SyntheticSpec& spec) {
    spec.validate();
    return from_generator(synthetic_run(spec));
}

BudgetSchedule synthetic_cap_schedule(const SyntheticSpec& spec) {
    const Cost s = spec.scale();
    const Cost c = spec.profile == SyntheticProfile::Structured
                       ? sat_add(sat_mul(2, s), spec.postcomputation)
                       : sat_add(sat_add(s, 1), spec.postcomputation);
    return BudgetSchedule::constant(std::max<Cost>(c, 1), spec.a + 1);
}

}  // namespace stepenum
