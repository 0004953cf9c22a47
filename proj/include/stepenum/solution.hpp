#pragma once

#include <compare>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace stepenum {

/// A solution in its canonical byte encoding. Two equal solutions have
/// byte-identical encodings, so set operations are plain byte comparisons.
/// Ordering is unsigned lexicographic byte order.
class Solution {
public:
    Solution() = default;
    explicit Solution(std::string bytes) : bytes_(std::move(bytes)) {}

    const std::string& bytes() const noexcept { return bytes_; }
    std::size_t size() const noexcept { return bytes_.size(); }

    friend bool operator==(const Solution&, const Solution&) = default;
    friend std::strong_ordering operator<=>(const Solution& a, const Solution& b) noexcept {
        const int c = a.bytes_.compare(b.bytes_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    std::string bytes_;
};

struct SolutionHash {
    std::size_t operator()(const Solution& s) const noexcept {
        return std::hash<std::string>{}(s.bytes());
    }
};

using SolutionSet = std::unordered_set<Solution, SolutionHash>;

/// Escapes a canonical byte string for line-oriented output: printable ASCII
/// is kept, backslash becomes `\\`, everything else becomes `\xHH`.
std::string escape_bytes(std::string_view bytes);
/// Inverse of escape_bytes. Throws ParseError on malformed escapes.
std::string unescape_bytes(std::string_view text);

void write_solutions(std::ostream& out, std::span<const Solution> solutions);
std::vector<Solution> read_solutions(std::istream& in);

/// Sorted copy, handy for comparing solution sets.
std::vector<Solution> sorted(std::vector<Solution> v);

}  // namespace stepenum
