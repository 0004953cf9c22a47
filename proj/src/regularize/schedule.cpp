#include "stepenum/schedule.hpp"

#include <cctype>
#include <stdexcept>

#include "stepenum/errors.hpp"

namespace stepenum {

struct ParamFunction::Node {
    enum class Op { Literal, Var, Add, Mul, Pow } op;
    Cost value = 0;
    std::shared_ptr<const Node> lhs, rhs;

    Cost eval(std::uint64_t k) const {
        switch (op) {
            case Op::Literal: return value;
            case Op::Var: return k;
            case Op::Add: return sat_add(lhs->eval(k), rhs->eval(k));
            case Op::Mul: return sat_mul(lhs->eval(k), rhs->eval(k));
            case Op::Pow: {
                const Cost e = rhs->eval(k);
                return sat_pow(lhs->eval(k), e > 4096 ? 4096u : static_cast<unsigned>(e));
            }
        }
        return 0;
    }
};

namespace {

using NodePtr = std::shared_ptr<const ParamFunction::Node>;
using Op = ParamFunction::Node::Op;

// expr   := term ('+' term)*
// term   := factor ('*' factor)*
// factor := atom ('^' factor)?
// atom   := number | 'k' | '(' expr ')'
class FormulaParser {
public:
    explicit FormulaParser(std::string_view src) : src_(src) {}

    NodePtr parse() {
        NodePtr e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    NodePtr expr() {
        NodePtr lhs = term();
        while (accept('+')) lhs = binary(Op::Add, lhs, term());
        return lhs;
    }
    NodePtr term() {
        NodePtr lhs = factor();
        while (accept('*')) lhs = binary(Op::Mul, lhs, factor());
        return lhs;
    }
    NodePtr factor() {
        NodePtr base = atom();
        if (accept('^')) return binary(Op::Pow, base, factor());
        return base;
    }
    NodePtr atom() {
        skip_ws();
        if (pos_ >= src_.size()) fail("unexpected end of formula");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            NodePtr e = expr();
            if (!accept(')')) fail("expected ')'");
            return e;
        }
        if (c == 'k') {
            ++pos_;
            auto n = std::make_shared<ParamFunction::Node>();
            n->op = Op::Var;
            return n;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Cost v = 0;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                v = sat_add(sat_mul(v, 10), static_cast<Cost>(src_[pos_] - '0'));
                ++pos_;
            }
            auto n = std::make_shared<ParamFunction::Node>();
            n->op = Op::Literal;
            n->value = v;
            return n;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    static NodePtr binary(Op op, NodePtr lhs, NodePtr rhs) {
        auto n = std::make_shared<ParamFunction::Node>();
        n->op = op;
        n->lhs = std::move(lhs);
        n->rhs = std::move(rhs);
        return n;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(1, pos_ + 1, what); }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace

ParamFunction ParamFunction::constant(Cost value) {
    ParamFunction f;
    f.kind_ = Kind::Constant;
    f.constant_ = value;
    return f;
}

ParamFunction ParamFunction::table(std::vector<Cost> values) {
    if (values.empty()) throw std::invalid_argument("ParamFunction: empty table");
    ParamFunction f;
    f.kind_ = Kind::Table;
    f.table_ = std::move(values);
    return f;
}

ParamFunction ParamFunction::formula(std::string source) {
    ParamFunction f;
    f.kind_ = Kind::Formula;
    f.expr_ = FormulaParser(source).parse();
    f.source_ = std::move(source);
    return f;
}

ParamFunction ParamFunction::closure(std::function<Cost(std::uint64_t)> fn) {
    ParamFunction f;
    f.kind_ = Kind::Closure;
    f.closure_ = std::move(fn);
    return f;
}

Cost ParamFunction::operator()(std::uint64_t k) const {
    switch (kind_) {
        case Kind::Constant: return constant_;
        case Kind::Table:
            if (k >= table_.size()) {
                throw std::out_of_range("ParamFunction: no table entry for k=" + std::to_string(k));
            }
            return table_[k];
        case Kind::Formula: return expr_->eval(k);
        case Kind::Closure: return closure_(k);
    }
    return 0;
}

void ParamFunction::to_json(nlohmann::json& obj) const {
    switch (kind_) {
        case Kind::Constant: obj["t_const"] = constant_; return;
        case Kind::Table: obj["t_table"] = table_; return;
        case Kind::Formula: obj["t_formula"] = source_; return;
        case Kind::Closure: throw std::logic_error("ParamFunction: closures cannot be serialised");
    }
}

ParamFunction ParamFunction::from_json(const nlohmann::json& obj) {
    const int present = static_cast<int>(obj.contains("t_const")) +
                        static_cast<int>(obj.contains("t_table")) +
                        static_cast<int>(obj.contains("t_formula"));
    if (present != 1) {
        throw std::invalid_argument("expected exactly one of t_const, t_table, t_formula");
    }
    if (obj.contains("t_const")) return constant(obj.at("t_const").get<Cost>());
    if (obj.contains("t_table")) return table(obj.at("t_table").get<std::vector<Cost>>());
    return formula(obj.at("t_formula").get<std::string>());
}

nlohmann::json BudgetSchedule::to_json() const {
    nlohmann::json j = nlohmann::json::object();
    t_of_k.to_json(j);
    j["p_coeffs"] = p.coeffs();
    j["exponent"] = exponent;
    return j;
}

BudgetSchedule BudgetSchedule::from_json(const nlohmann::json& j) {
    BudgetSchedule s;
    s.t_of_k = ParamFunction::from_json(j);
    s.p = Polynomial(j.value("p_coeffs", std::vector<Cost>{1}));
    s.exponent = j.at("exponent").get<unsigned>();
    return s;
}

BudgetSchedule BudgetSchedule::constant(Cost c, unsigned exponent) {
    return BudgetSchedule{ParamFunction::constant(c), Polynomial({1}), exponent};
}

}  // namespace stepenum
