#include "bbd/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "bbd/conditions.hpp"
#include "bbd/ham.hpp"

namespace bbd {

std::string exception_name(ExceptionName n) {
    switch (n) {
        case ExceptionName::H1: return "h1";
        case ExceptionName::H2: return "h2";
        case ExceptionName::H2X: return "h2x";
        case ExceptionName::H3: return "h3";
    }
    throw Error("unknown exception name");
}

std::optional<ExceptionName> exception_from_name(std::string_view s) {
    for (ExceptionName n : kAllExceptions)
        if (s == exception_name(n)) return n;
    return std::nullopt;
}

namespace {

Digraph from_rows(int a, const std::vector<std::vector<int>>& m1_rows,
                  const std::vector<std::vector<int>>& m2_rows) {
    Digraph d(a);
    for (int i = 0; i < a; ++i) {
        for (int j : m1_rows[i]) d.add_arc(x(i), y(j));
        for (int j : m2_rows[i]) d.add_arc(y(i), x(j));
    }
    return d;
}

Digraph build_unchecked(ExceptionName name) {
    switch (name) {
        case ExceptionName::H1:
            return from_rows(2, {{0}, {0, 1}}, {{0, 1}, {1}});
        case ExceptionName::H2:
            return from_rows(3, {{0}, {0}, {1, 2}}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
        case ExceptionName::H2X:
            return from_rows(3, {{0}, {0}, {0, 1, 2}}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}});
        case ExceptionName::H3:
            return from_rows(3, {{1, 2}, {0, 2}, {0, 1}}, {{0, 2}, {1, 2}, {0, 1}});
    }
    throw Error("unknown exception name");
}

}  // namespace

Digraph build_exception(ExceptionName name) {
    Digraph d = build_unchecked(name);
    if (!is_strong(d) || !satisfies_sharp_premise(d).holds || is_hamiltonian(d))
        throw Error("catalog entry " + exception_name(name) + " failed its self-check");
    return d;
}

namespace {

// (out, in) degree pairs for one side, in vertex order.
std::vector<std::pair<int, int>> side_profile(const Digraph& d, Side s) {
    std::vector<std::pair<int, int>> prof(d.a());
    for (int i = 0; i < d.a(); ++i) {
        Degrees deg = degree(d, VertexRef{s, i});
        prof[i] = {deg.out, deg.in};
    }
    return prof;
}

bool same_multiset(std::vector<std::pair<int, int>> a, std::vector<std::pair<int, int>> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

// Whether x_i -> y_{sigma[i]}, y_j -> x_{tau[j]} (or the side-preserving analogue)
// carries every arc and non-arc of lhs onto rhs.
bool mapping_works(const Digraph& lhs, const Digraph& rhs, const std::vector<int>& sigma,
                   const std::vector<int>& tau, bool swapped) {
    const int a = lhs.a();
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            VertexRef xi = swapped ? y(sigma[i]) : x(sigma[i]);
            VertexRef yj = swapped ? x(tau[j]) : y(tau[j]);
            if (lhs.has_arc(x(i), y(j)) != rhs.has_arc(xi, yj)) return false;
            if (lhs.has_arc(y(j), x(i)) != rhs.has_arc(yj, xi)) return false;
        }
    return true;
}

std::optional<Isomorphism> search_mappings(const Digraph& lhs, const Digraph& rhs, bool swapped) {
    Side img1 = swapped ? Side::V2 : Side::V1;
    Side img2 = swapped ? Side::V1 : Side::V2;
    if (!same_multiset(side_profile(lhs, Side::V1), side_profile(rhs, img1))) return std::nullopt;
    if (!same_multiset(side_profile(lhs, Side::V2), side_profile(rhs, img2))) return std::nullopt;

    std::vector<int> sigma(lhs.a()), tau(lhs.a());
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
        std::iota(tau.begin(), tau.end(), 0);
        do {
            if (mapping_works(lhs, rhs, sigma, tau, swapped))
                return Isomorphism{swapped, sigma, tau};
        } while (std::next_permutation(tau.begin(), tau.end()));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return std::nullopt;
}

}  // namespace

std::optional<Isomorphism> is_isomorphic(const Digraph& lhs, const Digraph& rhs) {
    if (lhs.a() != rhs.a() || lhs.arc_count() != rhs.arc_count()) return std::nullopt;
    if (auto iso = search_mappings(lhs, rhs, false)) return iso;
    return search_mappings(lhs, rhs, true);
}

std::optional<ExceptionName> match_exception(const Digraph& d) {
    if (d.a() != 2 && d.a() != 3) return std::nullopt;
    for (ExceptionName n : kAllExceptions) {
        Digraph h = build_exception(n);
        if (h.a() == d.a() && is_isomorphic(d, h)) return n;
    }
    return std::nullopt;
}

}  // namespace bbd
