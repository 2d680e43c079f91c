#include "bbd/digraph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>

namespace bbd {

ParseError::ParseError(int line, const std::string& message)
    : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

std::string vertex_name(VertexRef v) {
    return (v.side == Side::V1 ? "x" : "y") + std::to_string(v.index);
}

Digraph::Digraph(int a) : a_(a) {
    if (a < 1)
        throw InputError("digraph order a must be at least 1");
    if (a > kMaxA)
        throw CapacityError("digraph order a exceeds the supported maximum of 64");
    for (auto* m : {&out_, &in_}) {
        (*m)[0].assign(static_cast<std::size_t>(a), 0);
        (*m)[1].assign(static_cast<std::size_t>(a), 0);
    }
}

Digraph Digraph::complete(int a) {
    Digraph d(a);
    const std::uint64_t full = d.side_mask();
    for (auto* m : {&d.out_, &d.in_}) {
        std::ranges::fill((*m)[0], full);
        std::ranges::fill((*m)[1], full);
    }
    return d;
}

int Digraph::arc_count() const noexcept {
    int n = 0;
    for (int s = 0; s < 2; ++s)
        for (std::uint64_t row : out_[s])
            n += std::popcount(row);
    return n;
}

void Digraph::check_vertex(VertexRef v) const {
    if (v.index < 0 || v.index >= a_)
        throw InputError("vertex " + vertex_name(v) + " out of range for a=" + std::to_string(a_));
}

static void check_arc_endpoints(const Digraph& d, VertexRef from, VertexRef to) {
    d.check_vertex(from);
    d.check_vertex(to);
    if (from.side == to.side)
        throw InputError("arc endpoints " + vertex_name(from) + " and " + vertex_name(to) +
                         " lie on the same side");
}

bool Digraph::has_arc(VertexRef from, VertexRef to) const {
    check_arc_endpoints(*this, from, to);
    return (out_[static_cast<int>(from.side)][from.index] >> to.index) & 1;
}

void Digraph::add_arc(VertexRef from, VertexRef to) {
    check_arc_endpoints(*this, from, to);
    out_[static_cast<int>(from.side)][from.index] |= std::uint64_t{1} << to.index;
    in_[static_cast<int>(to.side)][to.index] |= std::uint64_t{1} << from.index;
}

void Digraph::remove_arc(VertexRef from, VertexRef to) {
    check_arc_endpoints(*this, from, to);
    out_[static_cast<int>(from.side)][from.index] &= ~(std::uint64_t{1} << to.index);
    in_[static_cast<int>(to.side)][to.index] &= ~(std::uint64_t{1} << from.index);
}

std::uint64_t Digraph::out_mask(VertexRef v) const {
    check_vertex(v);
    return out_[static_cast<int>(v.side)][v.index];
}

std::uint64_t Digraph::in_mask(VertexRef v) const {
    check_vertex(v);
    return in_[static_cast<int>(v.side)][v.index];
}

std::uint64_t Digraph::side_mask() const noexcept {
    return a_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a_) - 1;
}

Digraph reversed(const Digraph& d) {
    Digraph r(d.a());
    for (int s = 0; s < 2; ++s) {
        const Side side = static_cast<Side>(s);
        for (int i = 0; i < d.a(); ++i) {
            // Reversal swaps the roles of the out and in matrices.
            for (std::uint64_t m = d.in_mask({side, i}); m; m &= m - 1)
                r.add_arc({side, i}, {opposite(side), std::countr_zero(m)});
        }
    }
    return r;
}

Degrees degree(const Digraph& d, VertexRef v) {
    d.check_vertex(v);
    const int out = std::popcount(d.out_mask(v));
    const int in = std::popcount(d.in_mask(v));
    return {out, in, out + in};
}

std::vector<VertexRef> neighborhood(const Digraph& d, std::span<const VertexRef> s, ArcDir dir) {
    if (s.empty())
        return {};
    const Side side = s.front().side;
    std::uint64_t acc = 0;
    for (VertexRef v : s) {
        d.check_vertex(v);
        if (v.side != side)
            throw InputError("neighborhood input mixes sides");
        acc |= dir == ArcDir::Out ? d.out_mask(v) : d.in_mask(v);
    }
    std::vector<VertexRef> result;
    for (std::uint64_t m = acc; m; m &= m - 1)
        result.push_back({opposite(side), std::countr_zero(m)});
    return result;
}

std::vector<VertexPair> vertex_pairs(const Digraph& d, PairKind kind) {
    std::vector<VertexPair> pairs;
    for (int s = 0; s < 2; ++s) {
        const Side side = static_cast<Side>(s);
        for (int i = 0; i < d.a(); ++i) {
            const std::uint64_t mi =
                kind == PairKind::Dominating ? d.out_mask({side, i}) : d.in_mask({side, i});
            for (int j = i + 1; j < d.a(); ++j) {
                const std::uint64_t mj =
                    kind == PairKind::Dominating ? d.out_mask({side, j}) : d.in_mask({side, j});
                if (mi & mj)
                    pairs.push_back({{side, i}, {side, j}, kind});
            }
        }
    }
    return pairs;
}

bool is_strong(const Digraph& d) {
    const std::uint64_t full = d.side_mask();
    // Strong iff x0 reaches every vertex and every vertex reaches x0.
    for (ArcDir dir : {ArcDir::Out, ArcDir::In}) {
        std::uint64_t r1 = 1, r2 = 0;
        for (;;) {
            std::uint64_t n1 = r1, n2 = r2;
            for (std::uint64_t m = r1; m; m &= m - 1) {
                const VertexRef v = x(std::countr_zero(m));
                n2 |= dir == ArcDir::Out ? d.out_mask(v) : d.in_mask(v);
            }
            for (std::uint64_t m = r2; m; m &= m - 1) {
                const VertexRef v = y(std::countr_zero(m));
                n1 |= dir == ArcDir::Out ? d.out_mask(v) : d.in_mask(v);
            }
            if (n1 == r1 && n2 == r2)
                break;
            r1 = n1;
            r2 = n2;
        }
        if (r1 != full || r2 != full)
            return false;
    }
    return true;
}

std::string render_bbd(const Digraph& d) {
    std::string text = "a " + std::to_string(d.a()) + "\n";
    for (int s = 0; s < 2; ++s) {
        if (s == 1)
            text += "\n";
        for (int i = 0; i < d.a(); ++i) {
            const std::uint64_t row = d.out_mask({static_cast<Side>(s), i});
            for (int j = 0; j < d.a(); ++j)
                text += ((row >> j) & 1) ? '1' : '0';
            text += "\n";
        }
    }
    return text;
}

namespace {

struct Line {
    std::string_view content;
    bool terminated;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t start = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\n') {
            lines.push_back({text.substr(start, i - start), true});
            start = i + 1;
        }
    }
    if (start < text.size())
        lines.push_back({text.substr(start), false});
    return lines;
}

const Line& expect_line(const std::vector<Line>& lines, int number) {
    if (static_cast<std::size_t>(number) > lines.size())
        throw ParseError(number, "unexpected end of file");
    const Line& line = lines[static_cast<std::size_t>(number) - 1];
    if (!line.terminated)
        throw ParseError(number, "missing trailing newline");
    return line;
}

std::uint64_t parse_row(const Line& line, int number, int a) {
    if (line.content.size() != static_cast<std::size_t>(a))
        throw ParseError(number, "expected a row of exactly " + std::to_string(a) + " characters");
    std::uint64_t row = 0;
    for (int j = 0; j < a; ++j) {
        const char c = line.content[static_cast<std::size_t>(j)];
        if (c == '1')
            row |= std::uint64_t{1} << j;
        else if (c != '0')
            throw ParseError(number, std::string("invalid character '") + c + "' in arc row");
    }
    return row;
}

}  // namespace

Digraph parse_bbd(std::string_view text) {
    const std::vector<Line> lines = split_lines(text);
    const Line& header = expect_line(lines, 1);
    if (header.content.size() < 3 || header.content.substr(0, 2) != "a ")
        throw ParseError(1, "expected header \"a <n>\"");
    const std::string_view num = header.content.substr(2);
    int a = 0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), a);
    if (ec != std::errc{} || ptr != num.data() + num.size() || (num.size() > 1 && num[0] == '0'))
        throw ParseError(1, "expected header \"a <n>\"");
    if (a < 1 || a > Digraph::kMaxA)
        throw ParseError(1, "order a must be between 1 and 64");

    Digraph d(a);
    for (int s = 0; s < 2; ++s) {
        if (s == 1) {
            const Line& blank = expect_line(lines, a + 2);
            if (!blank.content.empty())
                throw ParseError(a + 2, "expected an empty separator line");
        }
        const int base = s == 0 ? 2 : a + 3;
        for (int i = 0; i < a; ++i) {
            const std::uint64_t row = parse_row(expect_line(lines, base + i), base + i, a);
            for (std::uint64_t m = row; m; m &= m - 1)
                d.add_arc({static_cast<Side>(s), i},
                          {opposite(static_cast<Side>(s)), std::countr_zero(m)});
        }
    }
    if (lines.size() > static_cast<std::size_t>(2 * a + 2))
        throw ParseError(2 * a + 3, "expected end of file");
    return d;
}

std::vector<std::uint64_t> arc_code_words(const Digraph& d) {
    const int a = d.a();
    const int bits = 2 * a * a;
    std::vector<std::uint64_t> words(static_cast<std::size_t>((bits + 63) / 64), 0);
    for (int s = 0; s < 2; ++s)
        for (int i = 0; i < a; ++i) {
            const std::uint64_t row = d.out_mask({static_cast<Side>(s), i});
            for (std::uint64_t m = row; m; m &= m - 1) {
                const int j = std::countr_zero(m);
                const int bit = s * a * a + i * a + j;
                words[static_cast<std::size_t>(bit / 64)] |= std::uint64_t{1} << (bit % 64);
            }
        }
    return words;
}

bool arc_code_less(const Digraph& lhs, const Digraph& rhs) {
    if (lhs.a() != rhs.a())
        return lhs.a() < rhs.a();
    const auto lw = arc_code_words(lhs), rw = arc_code_words(rhs);
    for (std::size_t i = lw.size(); i-- > 0;)
        if (lw[i] != rw[i])
            return lw[i] < rw[i];
    return false;
}

Digraph digraph_from_code(int a, std::uint64_t code) {
    Digraph d(a);
    if (2 * a * a > 64)
        throw CapacityError("arc code for a=" + std::to_string(a) + " does not fit 64 bits");
    for (int bit = 0; bit < 2 * a * a; ++bit) {
        if ((code >> bit) & 1) {
            const int s = bit / (a * a);
            const int i = (bit % (a * a)) / a;
            const int j = bit % a;
            d.add_arc({static_cast<Side>(s), i}, {opposite(static_cast<Side>(s)), j});
        }
    }
    return d;
}

}  // namespace bbd
