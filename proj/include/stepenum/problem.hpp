#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stepenum/arith.hpp"
#include "stepenum/solution.hpp"

namespace stepenum {

/// Membership test for one fixed instance: candidate bytes -> is a solution.
using Checker = std::function<bool(std::string_view)>;

/// Candidate strings a brute-force search must try for one instance.
struct SearchSpace {
    std::string symbols;
    std::size_t max_length = 0;
};

/// A parametrised enumeration problem.
///
/// `make_checker(x)` prepares the (deterministic, total) solution check for
/// instance x once, so exhaustive searches do not re-parse x per candidate.
/// Every solution y of x satisfies |y| <= length_bound(|x|) and uses only
/// `alphabet` symbols. `narrow_search`, when set, returns a search space that
/// still contains every solution of x; brute force then skips strings that
/// cannot be solutions.
struct ProblemDescriptor {
    std::string name;
    std::function<Checker(std::string_view)> make_checker;
    Polynomial length_bound;
    std::function<std::uint64_t(std::string_view)> parametrisation;
    std::string alphabet;
    std::function<SearchSpace(std::string_view)> narrow_search;

    bool check(std::string_view x, std::string_view y) const { return make_checker(x)(y); }
    SearchSpace search_space(std::string_view x) const;
};

/// An instance x together with its size |x| and parameter kappa(x).
class Instance {
public:
    Instance(const ProblemDescriptor& problem, std::string raw);
    /// Throws std::invalid_argument if `param` differs from kappa(raw).
    Instance(const ProblemDescriptor& problem, std::string raw, std::uint64_t param);

    const std::string& raw() const noexcept { return raw_; }
    std::uint64_t size() const noexcept { return raw_.size(); }
    std::uint64_t param() const noexcept { return param_; }

private:
    std::string raw_;
    std::uint64_t param_;
};

enum class VerdictReason { None, NotASolution, Duplicate, TooLong };

const char* to_string(VerdictReason r) noexcept;

struct Verdict {
    bool pass = true;
    std::size_t index = 0;
    VerdictReason reason = VerdictReason::None;
};

/// Pass iff every entry is a solution within the length bound and no entry
/// repeats; otherwise the first offending index. For one entry the checks run
/// in the order length, membership, duplicate.
Verdict verify_solutions(const ProblemDescriptor& problem, const Instance& x,
                         std::span<const Solution> solutions);

/// Ground truth: every string in the instance's search space that passes the
/// check, sorted. Throws BudgetExhausted if the space exceeds `cap` candidates.
std::vector<Solution> brute_force_enum(const ProblemDescriptor& problem, const Instance& x,
                                       Cost cap = kDefaultCostCap);

/// Number of strings of length <= max_length over `symbols` (saturating).
Cost candidate_count(const SearchSpace& space) noexcept;

}  // namespace stepenum
