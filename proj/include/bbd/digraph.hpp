#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bbd {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Rejected input: bad vertex, malformed text, parameter outside its documented domain.
class InputError : public Error {
public:
    using Error::Error;
};

// Request exceeds a documented size limit; the message names the limit.
class CapacityError : public Error {
public:
    using Error::Error;
};

class ParseError : public InputError {
public:
    ParseError(int line, const std::string& message);
    int line() const noexcept { return line_; }

private:
    int line_;
};

enum class Side : std::uint8_t { V1 = 0, V2 = 1 };

constexpr Side opposite(Side s) noexcept {
    return s == Side::V1 ? Side::V2 : Side::V1;
}

// One endpoint: x<index> on V1, y<index> on V2.
struct VertexRef {
    Side side;
    int index;

    friend constexpr bool operator==(const VertexRef&, const VertexRef&) = default;
    friend constexpr auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

constexpr VertexRef x(int index) noexcept { return {Side::V1, index}; }
constexpr VertexRef y(int index) noexcept { return {Side::V2, index}; }

std::string vertex_name(VertexRef v);

enum class PairKind : std::uint8_t { Dominating, Dominated };

// Unordered same-side pair, stored with u < v. Dominating: common out-neighbor;
// dominated: common in-neighbor.
struct VertexPair {
    VertexRef u, v;
    PairKind kind;

    friend constexpr bool operator==(const VertexPair&, const VertexPair&) = default;
};

enum class ArcDir : std::uint8_t { Out, In };

// Balanced bipartite digraph on V1 = {x0..x(a-1)} and V2 = {y0..y(a-1)}.
// Arcs only cross sides; loops and same-side arcs are unrepresentable.
// Neighbor sets are 64-bit masks over opposite-side indices, so a <= 64.
class Digraph {
public:
    static constexpr int kMaxA = 64;

    explicit Digraph(int a);
    static Digraph complete(int a);

    int a() const noexcept { return a_; }
    int vertex_count() const noexcept { return 2 * a_; }
    int arc_count() const noexcept;

    bool has_arc(VertexRef from, VertexRef to) const;
    void add_arc(VertexRef from, VertexRef to);
    void remove_arc(VertexRef from, VertexRef to);

    // Bit i of out_mask(v) marks the arc v -> (opposite side, i); in_mask likewise.
    std::uint64_t out_mask(VertexRef v) const;
    std::uint64_t in_mask(VertexRef v) const;

    // Low a bits set; the index universe of either side.
    std::uint64_t side_mask() const noexcept;

    void check_vertex(VertexRef v) const;

    friend bool operator==(const Digraph&, const Digraph&) = default;

private:
    int a_;
    // out_[side][i]: out-neighbors of vertex i on `side`; in_ is the transpose.
    std::array<std::vector<std::uint64_t>, 2> out_, in_;
};

Digraph reversed(const Digraph& d);

struct Degrees {
    int out, in, total;
};

Degrees degree(const Digraph& d, VertexRef v);

// N+(S) or N-(S); members of S must share one side, the result lies on the other.
std::vector<VertexRef> neighborhood(const Digraph& d, std::span<const VertexRef> s, ArcDir dir);

// All dominating (or dominated) pairs, each once, lexicographically ordered.
// Bipartiteness puts both members of any such pair on the same side.
std::vector<VertexPair> vertex_pairs(const Digraph& d, PairKind kind);

bool is_strong(const Digraph& d);

// BBD text format:
//   line 1          "a <n>"
//   lines 2..a+1    rows of '0'/'1', row i = arcs x_i -> y_j
//   line a+2        empty
//   lines a+3..2a+2 rows of '0'/'1', row i = arcs y_i -> x_j
// Trailing newline required; anything else raises ParseError with a 1-based line.
std::string render_bbd(const Digraph& d);
Digraph parse_bbd(std::string_view text);

// The 2a^2-bit arc-matrix integer: bit i*a+j = x_i -> y_j, bit a^2+i*a+j = y_i -> x_j,
// packed little-endian into 64-bit words.
std::vector<std::uint64_t> arc_code_words(const Digraph& d);

// Numeric order on the arc-matrix integer (orders of different a compare by a first).
bool arc_code_less(const Digraph& lhs, const Digraph& rhs);

// Inverse of arc_code_words for digraphs whose code fits one word (2a^2 <= 64).
Digraph digraph_from_code(int a, std::uint64_t code);

}  // namespace bbd
