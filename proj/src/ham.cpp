#include "bbd/ham.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>

namespace bbd {

namespace {

// Flat vertex numbering for the subset DP: x_i = i, y_j = a + j. V1 numbers sort
// below V2 numbers, so the lowest bit of any cycle's vertex set is its smallest
// V1 vertex; that vertex anchors the canonical sequence.
struct Flat {
    int a = 0, n = 0;
    std::vector<std::uint32_t> out, in;
};

Flat flatten(const Digraph& d) {
    Flat f;
    f.a = d.a();
    f.n = d.vertex_count();
    f.out.resize(static_cast<std::size_t>(f.n));
    f.in.resize(static_cast<std::size_t>(f.n));
    for (int i = 0; i < f.a; ++i) {
        f.out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(d.out_mask(x(i)) << f.a);
        f.in[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(d.in_mask(x(i)) << f.a);
        f.out[static_cast<std::size_t>(f.a + i)] = static_cast<std::uint32_t>(d.out_mask(y(i)));
        f.in[static_cast<std::size_t>(f.a + i)] = static_cast<std::uint32_t>(d.in_mask(y(i)));
    }
    return f;
}

void require_solver_order(const Digraph& d) {
    if (d.a() > kMaxSolverA)
        throw CapacityError("exact cycle search supports a <= " + std::to_string(kMaxSolverA));
}

// ends[mask] = the vertices at which a simple path can end that starts at the
// lowest bit of mask and visits exactly mask. Passing the reversed in-adjacency
// yields the same table for the reversed digraph.
std::vector<std::uint32_t> path_end_sets(int n, const std::vector<std::uint32_t>& in_adj) {
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
    const std::uint32_t total = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < total; ++mask) {
        const std::uint32_t rest = mask & (mask - 1);  // mask minus its anchor bit
        if (rest == 0) {
            ends[mask] = mask;
            continue;
        }
        std::uint32_t e = 0;
        for (std::uint32_t m = rest; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            if (ends[mask ^ (std::uint32_t{1} << v)] & in_adj[static_cast<std::size_t>(v)])
                e |= std::uint32_t{1} << v;
        }
        ends[mask] = e;
    }
    return ends;
}

VertexRef unflatten(int a, int v) {
    return v < a ? x(v) : y(v - a);
}

// Lexicographically smallest cycle over exactly the vertex set M, built greedily;
// each extension is validated against the reversed-path table, which tells whether
// the remaining vertices can still be covered and closed back to the anchor.
Cycle reconstruct_lex_min(const Flat& f, std::uint32_t M,
                          const std::vector<std::uint32_t>& rev_ends) {
    const int c = std::countr_zero(M);
    const int length = std::popcount(M);
    std::uint32_t used = std::uint32_t{1} << c;
    Cycle cycle;
    cycle.vertices.push_back(unflatten(f.a, c));
    int cur = c;
    for (int step = 1; step < length; ++step) {
        bool advanced = false;
        for (std::uint32_t m = f.out[static_cast<std::size_t>(cur)] & M & ~used; m; m &= m - 1) {
            const int w = std::countr_zero(m);
            const std::uint32_t rem =
                (M & ~used & ~(std::uint32_t{1} << w)) | (std::uint32_t{1} << c);
            if (rev_ends[rem] & f.out[static_cast<std::size_t>(w)]) {
                cycle.vertices.push_back(unflatten(f.a, w));
                used |= std::uint32_t{1} << w;
                cur = w;
                advanced = true;
                break;
            }
        }
        if (!advanced)
            throw Error("cycle reconstruction lost a feasible extension (internal)");
    }
    return cycle;
}

}  // namespace

std::optional<Cycle> is_hamiltonian(const Digraph& d) {
    require_solver_order(d);
    const Flat f = flatten(d);
    const std::uint32_t full = (std::uint32_t{1} << f.n) - 1;
    {
        const auto ends = path_end_sets(f.n, f.in);
        if (!(ends[full] & f.in[0]))
            return std::nullopt;
    }
    const auto rev_ends = path_end_sets(f.n, f.out);
    return reconstruct_lex_min(f, full, rev_ends);
}

namespace {

int longest_cycle_scan(const Flat& f, const std::vector<std::uint32_t>& ends,
                       std::vector<std::uint32_t>* candidates) {
    const std::uint32_t total = std::uint32_t{1} << f.n;
    int best = 0;
    for (std::uint32_t mask = 3; mask < total; ++mask) {
        const int len = std::popcount(mask);
        if (len < 2 || len < best)
            continue;
        const int c = std::countr_zero(mask);
        if (!(ends[mask] & f.in[static_cast<std::size_t>(c)]))
            continue;
        if (len > best) {
            best = len;
            if (candidates)
                candidates->clear();
        }
        if (candidates)
            candidates->push_back(mask);
    }
    return best;
}

int longest_cycle_length(const Digraph& d) {
    require_solver_order(d);
    const Flat f = flatten(d);
    const auto ends = path_end_sets(f.n, f.in);
    return longest_cycle_scan(f, ends, nullptr);
}

}  // namespace

std::optional<Cycle> longest_cycle(const Digraph& d) {
    require_solver_order(d);
    const Flat f = flatten(d);
    std::vector<std::uint32_t> candidates;
    int best = 0;
    {
        const auto ends = path_end_sets(f.n, f.in);
        best = longest_cycle_scan(f, ends, &candidates);
    }
    if (best == 0)
        return std::nullopt;

    int min_anchor = INT_MAX;
    for (const std::uint32_t mask : candidates)
        min_anchor = std::min(min_anchor, std::countr_zero(mask));

    const auto rev_ends = path_end_sets(f.n, f.out);
    std::optional<Cycle> result;
    for (const std::uint32_t mask : candidates) {
        if (std::countr_zero(mask) != min_anchor)
            continue;
        Cycle candidate = reconstruct_lex_min(f, mask, rev_ends);
        if (!result || candidate.vertices < result->vertices)
            result = std::move(candidate);
    }
    return result;
}

bool has_cycle_at_least(const Digraph& d, int min_length) {
    if (min_length < 2 || min_length % 2 != 0)
        throw InputError("cycle length bound must be even and at least 2");
    return longest_cycle_length(d) >= min_length;
}

namespace {

std::optional<MergeBoundCheck::Violation> scan_merge_orientation(const Digraph& d,
                                                                 const Cycle& c) {
    std::uint64_t on_cycle_v1 = 0, on_cycle_v2 = 0;
    for (const VertexRef v : c.vertices)
        (v.side == Side::V1 ? on_cycle_v1 : on_cycle_v2) |= std::uint64_t{1} << v.index;
    const int m = c.length() / 2;

    for (int u = 0; u < d.a(); ++u) {
        if ((on_cycle_v1 >> u) & 1)
            continue;
        const std::uint64_t heads = d.out_mask(x(u)) & ~on_cycle_v2;
        if (!heads)
            continue;
        const int in_c = std::popcount(d.in_mask(x(u)) & on_cycle_v2);
        for (std::uint64_t h = heads; h; h &= h - 1) {
            const int v = std::countr_zero(h);
            const int out_c = std::popcount(d.out_mask(y(v)) & on_cycle_v1);
            if (in_c + out_c > m)
                return MergeBoundCheck::Violation{x(u), y(v), in_c, out_c, m};
        }
    }
    return std::nullopt;
}

Cycle reverse_cycle(const Cycle& c) {
    Cycle r;
    r.vertices.push_back(c.vertices.front());
    r.vertices.insert(r.vertices.end(), c.vertices.rbegin(),
                      c.vertices.rend() - 1);
    return r;
}

}  // namespace

MergeBoundCheck check_merge_bound(const Digraph& d) {
    MergeBoundCheck result;
    result.cycle = longest_cycle(d);
    if (!result.cycle)
        return result;  // no cycle at all: nothing to bound

    if (auto violation = scan_merge_orientation(d, *result.cycle)) {
        result.pass = false;
        result.violation = violation;
        return result;
    }

    // Opposite orientation: in the reversed digraph the old V2 side takes the
    // lemma's V1 role, and the reversed cycle is still a longest cycle.
    const Digraph r = reversed(d);
    if (auto violation = scan_merge_orientation(r, reverse_cycle(*result.cycle))) {
        result.pass = false;
        // Map back to an arc of d: reversed arc u->v is d's arc v->u, and the
        // reversed in/out counts swap roles.
        result.violation = MergeBoundCheck::Violation{violation->head, violation->tail,
                                                      violation->out_on_cycle,
                                                      violation->in_on_cycle,
                                                      violation->half_length};
    }
    return result;
}

std::optional<Cycle> is_hamiltonian_bruteforce(const Digraph& d) {
    if (d.a() > kMaxBruteForceA)
        throw CapacityError("brute-force hamiltonicity supports a <= " +
                            std::to_string(kMaxBruteForceA));
    const int a = d.a();
    std::vector<int> xs(static_cast<std::size_t>(a > 0 ? a - 1 : 0));
    std::iota(xs.begin(), xs.end(), 1);
    std::vector<int> ys_start(static_cast<std::size_t>(a));
    std::iota(ys_start.begin(), ys_start.end(), 0);

    do {
        std::vector<int> ys = ys_start;
        do {
            bool ok = true;
            for (int i = 0; ok && i < a; ++i) {
                const int xi = i == 0 ? 0 : xs[static_cast<std::size_t>(i - 1)];
                const int xnext = i == a - 1 ? 0 : xs[static_cast<std::size_t>(i)];
                const int yi = ys[static_cast<std::size_t>(i)];
                ok = d.has_arc(x(xi), y(yi)) && d.has_arc(y(yi), x(xnext));
            }
            if (ok) {
                Cycle cycle;
                for (int i = 0; i < a; ++i) {
                    cycle.vertices.push_back(x(i == 0 ? 0 : xs[static_cast<std::size_t>(i - 1)]));
                    cycle.vertices.push_back(y(ys[static_cast<std::size_t>(i)]));
                }
                return cycle;
            }
        } while (std::next_permutation(ys.begin(), ys.end()));
    } while (std::next_permutation(xs.begin(), xs.end()));
    return std::nullopt;
}

bool is_valid_bypass(const Digraph& d, const Cycle& c, const Bypass& b) {
    const auto& path = b.path;
    if (path.size() < 3)
        return false;
    const auto position = [&](VertexRef v) -> int {
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            if (c.vertices[i] == v)
                return static_cast<int>(i);
        return -1;
    };
    const int entry_pos = position(path.front()), exit_pos = position(path.back());
    if (entry_pos < 0 || exit_pos < 0 || path.front() == path.back())
        return false;
    for (std::size_t i = 1; i + 1 < path.size(); ++i)
        if (position(path[i]) >= 0)
            return false;
    std::vector<VertexRef> sorted = path;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end())
        return false;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i].side == path[i + 1].side || !d.has_arc(path[i], path[i + 1]))
            return false;
    }
    const int gap = (exit_pos - entry_pos + c.length()) % c.length();
    return gap == b.gap;
}

}  // namespace bbd
