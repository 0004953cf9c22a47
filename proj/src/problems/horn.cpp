#include "stepenum/horn.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <memory>
#include <set>
#include <stdexcept>

#include "stepenum/errors.hpp"
#include "stepenum/generator.hpp"

namespace stepenum {

void HornFormula::validate() const {
    for (std::size_t c = 0; c < clauses.size(); ++c) {
        int positives = 0;
        for (const int lit : clauses[c]) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > variable_count) {
                throw std::invalid_argument("clause " + std::to_string(c) +
                                            " references an undeclared variable");
            }
            if (lit > 0) ++positives;
        }
        // a repeated positive literal is still one positive literal
        if (positives > 1) {
            std::set<int> pos;
            for (const int lit : clauses[c])
                if (lit > 0) pos.insert(lit);
            if (pos.size() > 1) throw NotHorn(c);
        }
    }
}

std::string HornFormula::encode() const {
    validate();
    std::string out(variable_count, 'v');
    out += '\n';
    for (const auto& clause : clauses) {
        std::string row(variable_count, '.');
        bool tautology = false;
        for (const int lit : clause) {
            char& cell = row[std::abs(lit) - 1];
            const char mark = lit > 0 ? '+' : '-';
            if (cell != '.' && cell != mark) tautology = true;
            cell = mark;
        }
        if (!tautology) out += row + '\n';
    }
    return out;
}

HornFormula HornFormula::decode(std::string_view raw) {
    HornFormula f;
    std::size_t pos = 0;
    std::size_t line = 0;
    bool header = true;
    while (pos < raw.size()) {
        const auto e = raw.find('\n', pos);
        ++line;
        if (e == std::string_view::npos) throw ParseError(line, 1, "unterminated row");
        const auto row = raw.substr(pos, e - pos);
        pos = e + 1;
        if (header) {
            if (row.find_first_not_of('v') != std::string_view::npos) {
                throw ParseError(line, 1, "header row must consist of 'v'");
            }
            f.variable_count = row.size();
            header = false;
            continue;
        }
        if (row.size() != f.variable_count) throw ParseError(line, 1, "row width differs from header");
        std::vector<int> clause;
        for (std::size_t v = 0; v < row.size(); ++v) {
            const int var = static_cast<int>(v + 1);
            if (row[v] == '+') clause.push_back(var);
            else if (row[v] == '-') clause.push_back(-var);
            else if (row[v] != '.') throw ParseError(line, v + 1, "expected '+', '-' or '.'");
        }
        f.clauses.push_back(std::move(clause));
    }
    if (header) throw ParseError(1, 1, "missing header row");
    try {
        f.validate();
    } catch (const NotHorn&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
    return f;
}

bool HornFormula::satisfied_by(std::string_view bits) const {
    if (bits.size() != variable_count) return false;
    if (bits.find_first_not_of("01") != std::string_view::npos) return false;
    return std::all_of(clauses.begin(), clauses.end(), [&](const std::vector<int>& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](int lit) {
            const bool value = bits[std::abs(lit) - 1] == '1';
            return lit > 0 ? value : !value;
        });
    });
}

HornFormula parse_dimacs(std::string_view text) {
    HornFormula f;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<int> current;
    std::size_t current_line = 0;
    std::size_t line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line;
        std::string_view l = text.substr(start, end - start);
        while (!l.empty() && (l.back() == '\r' || l.back() == ' ' || l.back() == '\t')) l.remove_suffix(1);
        const auto first = l.find_first_not_of(" \t");
        if (first != std::string_view::npos && l[first] != 'c' && l[first] != '%') {
            if (l[first] == 'p') {
                if (have_header) throw ParseError(line, first + 1, "duplicate header");
                // p cnf V C
                std::size_t i = first + 1;
                auto word = [&](std::size_t& at) {
                    while (at < l.size() && (l[at] == ' ' || l[at] == '\t')) ++at;
                    const auto b = at;
                    while (at < l.size() && l[at] != ' ' && l[at] != '\t') ++at;
                    return std::pair{l.substr(b, at - b), b + 1};
                };
                const auto [fmt, fcol] = word(i);
                if (fmt != "cnf") throw ParseError(line, fcol, "expected 'cnf'");
                std::uint64_t nums[2];
                for (auto& n : nums) {
                    const auto [w, col] = word(i);
                    const auto [p, ec] = std::from_chars(w.data(), w.data() + w.size(), n);
                    if (w.empty() || ec != std::errc{} || p != w.data() + w.size()) {
                        throw ParseError(line, col, "expected a natural number");
                    }
                }
                if (!word(i).first.empty()) throw ParseError(line, i, "trailing header input");
                f.variable_count = nums[0];
                declared_clauses = nums[1];
                have_header = true;
            } else {
                if (!have_header) throw ParseError(line, first + 1, "clause before 'p cnf' header");
                std::size_t i = first;
                while (i < l.size()) {
                    while (i < l.size() && (l[i] == ' ' || l[i] == '\t')) ++i;
                    if (i >= l.size()) break;
                    long long lit = 0;
                    const auto [p, ec] = std::from_chars(l.data() + i, l.data() + l.size(), lit);
                    const std::size_t col = i + 1;
                    if (ec != std::errc{}) throw ParseError(line, col, "expected an integer literal");
                    i = static_cast<std::size_t>(p - l.data());
                    if (i < l.size() && l[i] != ' ' && l[i] != '\t') throw ParseError(line, i + 1, "unexpected character");
                    if (lit == 0) {
                        f.clauses.push_back(std::move(current));
                        current.clear();
                        continue;
                    }
                    if (static_cast<std::uint64_t>(std::llabs(lit)) > f.variable_count) {
                        throw ParseError(line, col, "literal references an undeclared variable");
                    }
                    if (current.empty()) current_line = line;
                    current.push_back(static_cast<int>(lit));
                }
            }
        }
        if (end == text.size()) break;
        start = end + 1;
    }
    if (!have_header) throw ParseError(line, 1, "missing 'p cnf' header");
    if (!current.empty()) throw ParseError(current_line, 1, "clause not terminated by 0");
    if (f.clauses.size() != declared_clauses) {
        throw ParseError(line, 1, "header declares " + std::to_string(declared_clauses) +
                                      " clauses, found " + std::to_string(f.clauses.size()));
    }
    f.validate();
    return f;
}

const ProblemDescriptor& horn_sat_problem() {
    static const ProblemDescriptor d = [] {
        ProblemDescriptor p;
        p.name = "horn-sat";
        p.make_checker = [](std::string_view x) -> Checker {
            auto f = std::make_shared<const HornFormula>(HornFormula::decode(x));
            return [f](std::string_view y) { return f->satisfied_by(y); };
        };
        p.length_bound = Polynomial({0, 1});
        p.parametrisation = [](std::string_view) -> std::uint64_t { return 1; };
        p.alphabet = "01";
        p.narrow_search = [](std::string_view x) {
            return SearchSpace{"01", HornFormula::decode(x).variable_count};
        };
        return p;
    }();
    return d;
}

namespace {

struct HornState {
    HornFormula f;
    std::vector<signed char> value;  // -1 unassigned
    std::vector<std::size_t> trail;

    void assign(std::size_t var, signed char v) {
        value[var] = v;
        trail.push_back(var);
    }
    void undo_to(std::size_t mark) {
        while (trail.size() > mark) {
            value[trail.back()] = -1;
            trail.pop_back();
        }
    }

    // Fixpoint of unit propagation. Returns {conflict, clause visits}.
    std::pair<bool, Cost> propagate() {
        Cost visits = 0;
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& clause : f.clauses) {
                ++visits;
                bool satisfied = false;
                int unassigned = 0;
                int last = 0;
                for (const int lit : clause) {
                    const auto v = value[std::abs(lit) - 1];
                    if (v < 0) {
                        ++unassigned;
                        last = lit;
                    } else if ((v == 1) == (lit > 0)) {
                        satisfied = true;
                        break;
                    }
                }
                if (satisfied) continue;
                if (unassigned == 0) return {true, visits};
                if (unassigned == 1) {
                    assign(std::abs(last) - 1, last > 0 ? 1 : 0);
                    changed = true;
                }
            }
        }
        return {false, visits};
    }

    std::string bits() const {
        std::string s(value.size(), '0');
        for (std::size_t i = 0; i < value.size(); ++i) s[i] = value[i] == 1 ? '1' : '0';
        return s;
    }
};

Generator<Step> horn_descend(HornState& st, std::size_t from) {
    std::size_t var = from;
    while (var < st.value.size() && st.value[var] >= 0) ++var;
    if (var == st.value.size()) {
        Step out{1, Solution(st.bits()), false};
        co_yield std::move(out);
        co_return;
    }
    for (const signed char v : {0, 1}) {
        const std::size_t mark = st.trail.size();
        st.assign(var, v);
        const auto [conflict, visits] = st.propagate();
        Step out{1 + visits, std::nullopt, false};
        co_yield std::move(out);
        if (!conflict) {
            auto sub = horn_descend(st, var + 1);
            while (auto s = sub.next()) co_yield std::move(*s);
        }
        st.undo_to(mark);
    }
}

Generator<Step> horn_search(HornFormula f) {
    HornState st{std::move(f), {}, {}};
    st.value.assign(st.f.variable_count, -1);
    const auto [conflict, visits] = st.propagate();
    Step out{1 + visits, std::nullopt, false};
    co_yield std::move(out);
    if (conflict) co_return;
    auto root = horn_descend(st, 0);
    while (auto s = root.next()) co_yield std::move(*s);
}

}  // namespace

SteppedEnumerator horn_sat_enum(const HornFormula& f) {
    return from_generator(horn_search(HornFormula::decode(f.encode())));
}

BudgetSchedule horn_sat_bound() {
    return BudgetSchedule{ParamFunction::constant(1), Polynomial({4, 4, 4}), 1};
}

}  // namespace stepenum
