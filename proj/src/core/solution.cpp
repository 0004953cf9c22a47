#include "stepenum/solution.hpp"

#include <algorithm>
#include <istream>
#include <ostream>

#include "stepenum/errors.hpp"

namespace stepenum {

namespace {

constexpr char kHex[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string escape_bytes(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    for (const char ch : bytes) {
        const auto u = static_cast<unsigned char>(ch);
        if (ch == '\\') {
            out += "\\\\";
        } else if (u >= 0x20 && u < 0x7f) {
            out += ch;
        } else {
            out += "\\x";
            out += kHex[u >> 4];
            out += kHex[u & 0xf];
        }
    }
    return out;
}

std::string unescape_bytes(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '\\') {
            out += text[i];
            continue;
        }
        if (i + 1 < text.size() && text[i + 1] == '\\') {
            out += '\\';
            ++i;
            continue;
        }
        if (i + 3 < text.size() && text[i + 1] == 'x') {
            const int hi = hex_value(text[i + 2]);
            const int lo = hex_value(text[i + 3]);
            if (hi >= 0 && lo >= 0) {
                out += static_cast<char>((hi << 4) | lo);
                i += 3;
                continue;
            }
        }
        throw ParseError(1, i + 1, "malformed escape sequence");
    }
    return out;
}

void write_solutions(std::ostream& out, std::span<const Solution> solutions) {
    for (const auto& s : solutions) out << escape_bytes(s.bytes()) << '\n';
}

std::vector<Solution> read_solutions(std::istream& in) {
    std::vector<Solution> out;
    std::string line;
    while (std::getline(in, line)) out.emplace_back(unescape_bytes(line));
    return out;
}

std::vector<Solution> sorted(std::vector<Solution> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace stepenum
