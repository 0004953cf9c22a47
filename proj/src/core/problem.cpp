#include "stepenum/problem.hpp"

#include <algorithm>
#include <stdexcept>

#include "stepenum/errors.hpp"

namespace stepenum {

SearchSpace ProblemDescriptor::search_space(std::string_view x) const {
    const std::size_t bound = length_bound(x.size());
    if (!narrow_search) return SearchSpace{alphabet, bound};

    SearchSpace s = narrow_search(x);
    if (s.max_length > bound) {
        throw std::logic_error(name + ": narrowed search exceeds the declared length bound");
    }
    for (const char c : s.symbols) {
        if (alphabet.find(c) == std::string::npos) {
            throw std::logic_error(name + ": narrowed search uses a symbol outside the alphabet");
        }
    }
    return s;
}

Instance::Instance(const ProblemDescriptor& problem, std::string raw)
    : raw_(std::move(raw)), param_(problem.parametrisation(raw_)) {}

Instance::Instance(const ProblemDescriptor& problem, std::string raw, std::uint64_t param)
    : raw_(std::move(raw)), param_(param) {
    if (problem.parametrisation(raw_) != param_) {
        throw std::invalid_argument("Instance: cached parameter does not match kappa(x)");
    }
}

const char* to_string(VerdictReason r) noexcept {
    switch (r) {
        case VerdictReason::None: return "none";
        case VerdictReason::NotASolution: return "not-a-solution";
        case VerdictReason::Duplicate: return "duplicate";
        case VerdictReason::TooLong: return "too-long";
    }
    return "?";
}

Verdict verify_solutions(const ProblemDescriptor& problem, const Instance& x,
                         std::span<const Solution> solutions) {
    const Cost bound = problem.length_bound(x.size());
    const Checker check = problem.make_checker(x.raw());
    SolutionSet seen;
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        const auto& y = solutions[i];
        if (y.size() > bound) return {false, i, VerdictReason::TooLong};
        if (!check(y.bytes())) return {false, i, VerdictReason::NotASolution};
        if (!seen.insert(y).second) return {false, i, VerdictReason::Duplicate};
    }
    return {};
}

Cost candidate_count(const SearchSpace& space) noexcept {
    Cost total = 0;
    Cost layer = 1;
    for (std::size_t len = 0; len <= space.max_length; ++len) {
        total = sat_add(total, layer);
        layer = sat_mul(layer, space.symbols.size());
        if (layer == 0) break;
    }
    return total;
}

std::vector<Solution> brute_force_enum(const ProblemDescriptor& problem, const Instance& x,
                                       Cost cap) {
    SearchSpace space = problem.search_space(x.raw());
    std::sort(space.symbols.begin(), space.symbols.end());
    space.symbols.erase(std::unique(space.symbols.begin(), space.symbols.end()),
                        space.symbols.end());
    if (candidate_count(space) > cap) throw BudgetExhausted(cap);

    const Checker check = problem.make_checker(x.raw());
    std::vector<Solution> out;
    const std::size_t radix = space.symbols.size();
    std::vector<std::size_t> digits;
    std::string candidate;
    for (std::size_t len = 0; len <= space.max_length; ++len) {
        if (len > 0 && radix == 0) break;
        digits.assign(len, 0);
        candidate.assign(len, radix ? space.symbols[0] : '\0');
        for (;;) {
            if (check(candidate)) out.emplace_back(candidate);
            // odometer increment, least significant digit last
            std::size_t pos = len;
            while (pos > 0) {
                --pos;
                if (++digits[pos] < radix) {
                    candidate[pos] = space.symbols[digits[pos]];
                    break;
                }
                digits[pos] = 0;
                candidate[pos] = space.symbols[0];
                if (pos == 0) {
                    pos = len + 1;  // wrapped around
                    break;
                }
            }
            if (len == 0 || pos == len + 1) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace stepenum
