#pragma once

// Builders and independent oracles shared by the test binaries. The oracles
// deliberately use naive algorithms with no code in common with the library,
// so agreement is evidence rather than tautology.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bbd/cycle.hpp"
#include "bbd/digraph.hpp"

namespace helpers {

inline bbd::Digraph from_arcs(int a,
                              const std::vector<std::pair<bbd::VertexRef, bbd::VertexRef>>& arcs) {
    bbd::Digraph d(a);
    for (const auto& [from, to] : arcs) d.add_arc(from, to);
    return d;
}

// x0 y0 x1 y1 ... x(a-1) y(a-1) back to x0; hamiltonian, all degrees 2.
inline bbd::Digraph single_cycle(int a) {
    bbd::Digraph d(a);
    for (int i = 0; i < a; ++i) {
        d.add_arc(bbd::x(i), bbd::y(i));
        d.add_arc(bbd::y(i), bbd::x((i + 1) % a));
    }
    return d;
}

// Exchanges the roles of the two sides: x_i -> y_j becomes y_i -> x_j and back.
inline bbd::Digraph mirror(const bbd::Digraph& d) {
    bbd::Digraph m(d.a());
    for (int i = 0; i < d.a(); ++i)
        for (int j = 0; j < d.a(); ++j) {
            if (d.has_arc(bbd::x(i), bbd::y(j))) m.add_arc(bbd::y(i), bbd::x(j));
            if (d.has_arc(bbd::y(i), bbd::x(j))) m.add_arc(bbd::x(i), bbd::y(j));
        }
    return m;
}

// Strong-connectivity oracle by Warshall closure over an explicit boolean matrix.
inline bool strong_by_closure(const bbd::Digraph& d) {
    const int n = d.vertex_count();
    const auto id = [&](bbd::VertexRef v) {
        return (v.side == bbd::Side::V1 ? 0 : d.a()) + v.index;
    };
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i) reach[i][i] = true;
    for (int i = 0; i < d.a(); ++i)
        for (int j = 0; j < d.a(); ++j) {
            if (d.has_arc(bbd::x(i), bbd::y(j))) reach[id(bbd::x(i))][id(bbd::y(j))] = true;
            if (d.has_arc(bbd::y(i), bbd::x(j))) reach[id(bbd::y(i))][id(bbd::x(j))] = true;
        }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!reach[i][j]) return false;
    return true;
}

// One state per cross pair (i, j): 0 puts x_i -> y_j, 1 puts y_j -> x_i, 2 both.
// Walking all 3^(a^2) state vectors walks all semicomplete digraphs of order a.
inline bbd::Digraph semicomplete_from_states(int a, const std::vector<int>& states) {
    bbd::Digraph d(a);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            const int s = states[static_cast<std::size_t>(i * a + j)];
            if (s == 0 || s == 2) d.add_arc(bbd::x(i), bbd::y(j));
            if (s == 1 || s == 2) d.add_arc(bbd::y(j), bbd::x(i));
        }
    return d;
}

// Longest-cycle oracle: enumerates every cycle as an explicit vertex sequence,
// anchored at its smallest V1 vertex, and keeps the lexicographically smallest
// among the longest. Factorial in a; meant for a <= 3.
inline std::optional<bbd::Cycle> brute_longest_cycle(const bbd::Digraph& d) {
    const int a = d.a();
    std::optional<bbd::Cycle> best;
    for (int len = a; len >= 1 && !best; --len) {
        for (std::uint64_t s1 = 0; s1 < (std::uint64_t{1} << a); ++s1) {
            if (std::popcount(s1) != len) continue;
            for (std::uint64_t s2 = 0; s2 < (std::uint64_t{1} << a); ++s2) {
                if (std::popcount(s2) != len) continue;
                std::vector<int> xs, ys;
                for (int i = 0; i < a; ++i) {
                    if (s1 >> i & 1) xs.push_back(i);
                    if (s2 >> i & 1) ys.push_back(i);
                }
                // first V1 vertex stays fixed so each cycle appears exactly once
                do {
                    do {
                        bool ok = true;
                        for (int i = 0; i < len && ok; ++i) {
                            ok = d.has_arc(bbd::x(xs[static_cast<std::size_t>(i)]),
                                           bbd::y(ys[static_cast<std::size_t>(i)])) &&
                                 d.has_arc(bbd::y(ys[static_cast<std::size_t>(i)]),
                                           bbd::x(xs[static_cast<std::size_t>((i + 1) % len)]));
                        }
                        if (!ok) continue;
                        bbd::Cycle c;
                        for (int i = 0; i < len; ++i) {
                            c.vertices.push_back(bbd::x(xs[static_cast<std::size_t>(i)]));
                            c.vertices.push_back(bbd::y(ys[static_cast<std::size_t>(i)]));
                        }
                        if (!best || best->length() < c.length() ||
                            (best->length() == c.length() && c.vertices < best->vertices))
                            best = c;
                    } while (std::next_permutation(ys.begin(), ys.end()));
                } while (std::next_permutation(xs.begin() + 1, xs.end()));
            }
        }
    }
    return best;
}

// The B_k pattern quantified over dominated pairs instead of dominating ones;
// reversal maps one onto the other.
inline bool bk_over_dominated_pairs(const bbd::Digraph& d, int k) {
    const int a = d.a();
    for (int s = 0; s < 2; ++s) {
        const auto side = static_cast<bbd::Side>(s);
        for (int i = 0; i < a; ++i)
            for (int j = i + 1; j < a; ++j) {
                if (!(d.in_mask({side, i}) & d.in_mask({side, j}))) continue;
                const int du = bbd::degree(d, {side, i}).total;
                const int dv = bbd::degree(d, {side, j}).total;
                if (!((du >= 2 * a - k && dv >= a + k) || (dv >= 2 * a - k && du >= a + k)))
                    return false;
            }
    }
    return true;
}

}  // namespace helpers
