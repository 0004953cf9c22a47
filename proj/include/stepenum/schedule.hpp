#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "stepenum/arith.hpp"

namespace stepenum {

/// A computable function t: parameter -> natural, given as a constant, a
/// lookup table, an arithmetic formula over `k`, or an opaque closure.
///
/// Formulas accept natural literals, `k`, `+`, `*`, `^` and parentheses,
/// e.g. `3*2^k` or `(k+1)^2`. Evaluation saturates.
class ParamFunction {
public:
    ParamFunction() = default;  ///< the constant 1

    static ParamFunction constant(Cost value);
    static ParamFunction table(std::vector<Cost> values);
    static ParamFunction formula(std::string source);
    static ParamFunction closure(std::function<Cost(std::uint64_t)> fn);

    /// Throws std::out_of_range for a table lookup past its end.
    Cost operator()(std::uint64_t k) const;

    /// Writes the `t_const` / `t_table` / `t_formula` member into `obj`.
    /// Closures are not serialisable and throw std::logic_error.
    void to_json(nlohmann::json& obj) const;
    /// Reads whichever of `t_const`, `t_table`, `t_formula` is present.
    static ParamFunction from_json(const nlohmann::json& obj);

    struct Node;

private:
    enum class Kind { Constant, Table, Formula, Closure };

    Kind kind_ = Kind::Constant;
    Cost constant_ = 1;
    std::vector<Cost> table_;
    std::string source_;
    std::shared_ptr<const Node> expr_;
    std::function<Cost(std::uint64_t)> closure_;
};

/// B(k, n, i) = t(k) * p(n) * i^exponent, with 0^0 = 1.
struct BudgetSchedule {
    ParamFunction t_of_k;
    Polynomial p;
    unsigned exponent = 0;

    /// t(k) * p(n)
    Cost scale(std::uint64_t k, std::uint64_t n) const { return sat_mul(t_of_k(k), p(n)); }
    Cost at(std::uint64_t k, std::uint64_t n, std::uint64_t i) const {
        return sat_mul(scale(k, n), sat_pow(i, exponent));
    }

    nlohmann::json to_json() const;
    static BudgetSchedule from_json(const nlohmann::json& j);

    /// Constant schedule c * i^exponent.
    static BudgetSchedule constant(Cost c, unsigned exponent);
};

}  // namespace stepenum
