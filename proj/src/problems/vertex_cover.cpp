#include "stepenum/vertex_cover.hpp"

#include <algorithm>
#include <charconv>
#include <memory>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "stepenum/errors.hpp"
#include "stepenum/generator.hpp"

namespace stepenum {

char vertex_symbol(std::uint32_t v) noexcept { return static_cast<char>('a' + v); }

void GraphInstance::validate() const {
    if (vertices > kMaxVertices) {
        throw std::invalid_argument("graph: at most " + std::to_string(kMaxVertices) + " vertices");
    }
    if (k > vertices) throw std::invalid_argument("graph: k exceeds the vertex count");
    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    for (auto [u, v] : edges) {
        if (u >= vertices || v >= vertices) throw std::invalid_argument("graph: endpoint out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop");
        if (!seen.insert(std::minmax(u, v)).second) throw std::invalid_argument("graph: duplicate edge");
    }
}

std::string GraphInstance::encode() const {
    validate();
    std::vector<std::string> rows(vertices, std::string(vertices, '0'));
    for (auto [u, v] : edges) rows[u][v] = rows[v][u] = '1';
    std::string out = std::to_string(k) + "\n";
    for (const auto& r : rows) out += r + "\n";
    return out;
}

GraphInstance GraphInstance::decode(std::string_view raw) {
    GraphInstance g;
    std::size_t line = 1;
    const auto nl = raw.find('\n');
    if (nl == std::string_view::npos) throw ParseError(1, 1, "missing k line");
    const auto head = raw.substr(0, nl);
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), g.k);
    if (ec != std::errc{} || ptr != head.data() + head.size()) throw ParseError(1, 1, "bad k");

    std::vector<std::string_view> rows;
    std::size_t pos = nl + 1;
    while (pos < raw.size()) {
        const auto e = raw.find('\n', pos);
        if (e == std::string_view::npos) throw ParseError(line + rows.size() + 1, 1, "unterminated row");
        rows.push_back(raw.substr(pos, e - pos));
        pos = e + 1;
    }
    g.vertices = rows.size();
    for (std::size_t u = 0; u < rows.size(); ++u) {
        if (rows[u].size() != rows.size()) throw ParseError(u + 2, 1, "row length differs from vertex count");
        for (std::size_t v = 0; v < rows.size(); ++v) {
            const char c = rows[u][v];
            if (c != '0' && c != '1') throw ParseError(u + 2, v + 1, "expected 0 or 1");
            if (c != rows[v][u]) throw ParseError(u + 2, v + 1, "matrix not symmetric");
            if (c == '1' && u == v) throw ParseError(u + 2, v + 1, "self-loop");
            if (c == '1' && u < v) g.edges.emplace_back(u, v);
        }
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(1, 1, e.what());
    }
    return g;
}

namespace {

// Splits text into whitespace-separated naturals, tracking line/column.
struct Token {
    std::uint64_t value;
    std::size_t line, column;
};

std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
    std::vector<std::vector<Token>> lines;
    std::size_t line = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++line;
        std::vector<Token> toks;
        std::size_t i = start;
        while (i < end) {
            while (i < end && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
            if (i >= end) break;
            std::uint64_t v = 0;
            const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, v);
            if (ec != std::errc{}) throw ParseError(line, i - start + 1, "expected a natural number");
            toks.push_back({v, line, i - start + 1});
            i = static_cast<std::size_t>(ptr - text.data());
            if (i < end && text[i] != ' ' && text[i] != '\t' && text[i] != '\r') {
                throw ParseError(line, i - start + 1, "unexpected character");
            }
        }
        if (!toks.empty()) lines.push_back(std::move(toks));
        if (end == text.size()) break;
        start = end + 1;
    }
    return lines;
}

}  // namespace

GraphInstance parse_edge_list(std::string_view text, std::size_t k) {
    const auto lines = tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, 1, "missing 'V E' header");
    if (lines[0].size() != 2) throw ParseError(lines[0][0].line, 1, "header must be 'V E'");
    GraphInstance g;
    g.vertices = lines[0][0].value;
    const std::uint64_t e = lines[0][1].value;
    if (lines.size() - 1 != e) {
        throw ParseError(lines.back().back().line, 1,
                         "expected " + std::to_string(e) + " edge lines, found " +
                             std::to_string(lines.size() - 1));
    }
    g.k = k;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& l = lines[i];
        if (l.size() != 2) throw ParseError(l[0].line, 1, "edge line must be 'u v'");
        for (const auto& t : l) {
            if (t.value >= g.vertices) throw ParseError(t.line, t.column, "vertex id out of range");
        }
        g.edges.emplace_back(static_cast<std::uint32_t>(l[0].value), static_cast<std::uint32_t>(l[1].value));
    }
    try {
        g.validate();
    } catch (const std::invalid_argument& ex) {
        throw ParseError(1, 1, ex.what());
    }
    return g;
}

const ProblemDescriptor& vertex_cover_problem() {
    static const ProblemDescriptor d = [] {
        ProblemDescriptor p;
        p.name = "vertex-cover";
        p.make_checker = [](std::string_view x) -> Checker {
            auto g = std::make_shared<const GraphInstance>(GraphInstance::decode(x));
            return [g](std::string_view y) {
                if (y.size() > g->k) return false;
                std::vector<bool> in(g->vertices, false);
                int prev = -1;
                for (const char c : y) {
                    const int v = static_cast<unsigned char>(c) - 'a';
                    if (v < 0 || static_cast<std::size_t>(v) >= g->vertices || v <= prev) return false;
                    in[v] = true;
                    prev = v;
                }
                return std::all_of(g->edges.begin(), g->edges.end(),
                                   [&](auto e) { return in[e.first] || in[e.second]; });
            };
        };
        p.length_bound = Polynomial({0, 1});
        p.parametrisation = [](std::string_view x) -> std::uint64_t {
            return GraphInstance::decode(x).k;
        };
        for (std::size_t v = 0; v < GraphInstance::kMaxVertices; ++v) p.alphabet += vertex_symbol(v);
        p.narrow_search = [](std::string_view x) {
            const auto g = GraphInstance::decode(x);
            SearchSpace s;
            for (std::size_t v = 0; v < g.vertices; ++v) s.symbols += vertex_symbol(v);
            s.max_length = g.k;
            return s;
        };
        return p;
    }();
    return d;
}

namespace {

struct CoverContext {
    GraphInstance g;
    std::vector<bool> in;
    std::size_t size = 0;
    std::unordered_set<std::string> emitted;
};

std::string cover_string(const std::vector<bool>& in) {
    std::string s;
    for (std::size_t v = 0; v < in.size(); ++v)
        if (in[v]) s += vertex_symbol(v);
    return s;
}

// All supersets of the current cover with at most k vertices, by increasing
// number of added vertices and lexicographic choice of the added ones.
Generator<Step> supersets(CoverContext& ctx) {
    std::vector<std::uint32_t> free;
    for (std::uint32_t v = 0; v < ctx.g.vertices; ++v)
        if (!ctx.in[v]) free.push_back(v);
    const std::size_t room = std::min(ctx.g.k - ctx.size, free.size());
    for (std::size_t add = 0; add <= room; ++add) {
        std::vector<std::size_t> pick(add);
        for (std::size_t j = 0; j < add; ++j) pick[j] = j;
        for (;;) {
            std::vector<bool> in = ctx.in;
            for (auto j : pick) in[free[j]] = true;
            std::string s = cover_string(in);
            Step out{1, std::nullopt, false};
            if (ctx.emitted.insert(s).second) out.emit = Solution(std::move(s));
            co_yield std::move(out);

            // next combination of `add` out of free.size()
            std::size_t j = add;
            while (j > 0 && pick[j - 1] == free.size() - add + (j - 1)) --j;
            if (j == 0) break;
            ++pick[j - 1];
            for (std::size_t t = j; t < add; ++t) pick[t] = pick[t - 1] + 1;
        }
    }
}

Generator<Step> branch(CoverContext& ctx) {
    const auto it = std::find_if(ctx.g.edges.begin(), ctx.g.edges.end(), [&](auto e) {
        return !ctx.in[e.first] && !ctx.in[e.second];
    });
    Step out{1, std::nullopt, false};
    co_yield std::move(out);
    if (it == ctx.g.edges.end()) {
        auto leaf = supersets(ctx);
        while (auto s = leaf.next()) co_yield std::move(*s);
        co_return;
    }
    if (ctx.size == ctx.g.k) co_return;
    for (const std::uint32_t u : {it->first, it->second}) {
        ctx.in[u] = true;
        ++ctx.size;
        auto sub = branch(ctx);
        while (auto s = sub.next()) co_yield std::move(*s);
        ctx.in[u] = false;
        --ctx.size;
    }
}

Generator<Step> vertex_cover_search(GraphInstance g) {
    CoverContext ctx{std::move(g), {}, 0, {}};
    ctx.in.assign(ctx.g.vertices, false);
    auto root = branch(ctx);
    while (auto s = root.next()) co_yield std::move(*s);
}

}  // namespace

SteppedEnumerator vertex_cover_enum(const GraphInstance& g) {
    g.validate();
    return from_generator(vertex_cover_search(g));
}

BudgetSchedule vertex_cover_bound() {
    return BudgetSchedule{ParamFunction::formula("3*2^k"), Polynomial({1}), 1};
}

}  // namespace stepenum
