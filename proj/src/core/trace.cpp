#include "stepenum/trace.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "stepenum/errors.hpp"

namespace stepenum {

DelayTrace DelayTrace::from_events(std::span<const EnumeratorEvent> events) {
    DelayTrace t;
    Cost last = 0;
    bool finished = false;
    for (const auto& ev : events) {
        if (finished) throw std::invalid_argument("DelayTrace: event after Finished");
        if (const auto* e = std::get_if<Emitted>(&ev)) {
            t.delays.push_back(e->at_cost - last);
            t.emit_costs.push_back(e->at_cost);
            last = e->at_cost;
        } else {
            const auto& f = std::get<Finished>(ev);
            t.delays.push_back(f.at_cost - last);
            t.total_cost = f.at_cost;
            finished = true;
        }
    }
    if (!finished) throw std::invalid_argument("DelayTrace: event stream has no Finished");
    return t;
}

RunResult run_to_completion(SteppedEnumerator& enumerator, Cost cap) {
    if (enumerator.cost_consumed() != 0 || enumerator.finished()) {
        throw std::logic_error("run_to_completion: enumerator is not fresh");
    }
    if (cap == 0) throw std::invalid_argument("run_to_completion: cap must be >= 1");

    const auto events = enumerator.advance(cap);
    if (!enumerator.finished()) throw BudgetExhausted(cap);

    RunResult r;
    r.trace = DelayTrace::from_events(events);
    for (const auto& ev : events) {
        if (const auto* e = std::get_if<Emitted>(&ev)) r.solutions.push_back(e->solution);
    }
    return r;
}

void write_trace_csv(std::ostream& out, const DelayTrace& trace) {
    out << "i,delay,cum_cost\n";
    Cost cum = 0;
    for (std::size_t i = 0; i < trace.delays.size(); ++i) {
        cum += trace.delays[i];
        out << i << ',' << trace.delays[i] << ',' << cum << '\n';
    }
}

namespace {

Cost parse_field(std::string_view field, std::size_t line, std::size_t column) {
    Cost v = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc{} || ptr != field.data() + field.size() || field.empty()) {
        throw ParseError(line, column, "expected a natural number");
    }
    return v;
}

}  // namespace

DelayTrace read_trace_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError(1, 1, "empty trace file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "i,delay,cum_cost") throw ParseError(1, 1, "expected header i,delay,cum_cost");

    DelayTrace t;
    std::vector<Cost> cums;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos) throw ParseError(lineno, 1, "expected three fields");
        const std::string_view sv(line);
        const Cost idx = parse_field(sv.substr(0, c1), lineno, 1);
        const Cost delay = parse_field(sv.substr(c1 + 1, c2 - c1 - 1), lineno, c1 + 2);
        const Cost cum = parse_field(sv.substr(c2 + 1), lineno, c2 + 2);
        if (idx != t.delays.size()) throw ParseError(lineno, 1, "row index out of sequence");
        const Cost prev = cums.empty() ? 0 : cums.back();
        if (cum != prev + delay) throw ParseError(lineno, c2 + 2, "cum_cost is not a running sum");
        t.delays.push_back(delay);
        cums.push_back(cum);
    }
    if (t.delays.empty()) throw ParseError(lineno, 1, "trace has no rows");
    t.emit_costs.assign(cums.begin(), cums.end() - 1);
    t.total_cost = cums.back();
    return t;
}

}  // namespace stepenum
