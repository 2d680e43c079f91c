#include "bbd/factors.hpp"

#include <algorithm>
#include <bit>

namespace bbd {

bool Matching::perfect() const noexcept {
    return std::ranges::none_of(assignment, [](int t) { return t < 0; });
}

namespace {

std::uint64_t adjacency(const Digraph& d, MatchDirection dir, int source) {
    return d.out_mask({source_side(dir), source});
}

// Kuhn's augmenting-path search; ascending orders keep the result deterministic.
bool augment(const Digraph& d, MatchDirection dir, int source, std::vector<int>& match_of_target,
             std::uint64_t& visited_targets) {
    std::uint64_t m = adjacency(d, dir, source) & ~visited_targets;
    while (m) {
        const int t = std::countr_zero(m);
        visited_targets |= std::uint64_t{1} << t;
        if (match_of_target[static_cast<std::size_t>(t)] < 0 ||
            augment(d, dir, match_of_target[static_cast<std::size_t>(t)], match_of_target,
                    visited_targets)) {
            match_of_target[static_cast<std::size_t>(t)] = source;
            return true;
        }
        m &= ~visited_targets;  // drops t plus anything the recursion visited
    }
    return false;
}

Matching maximum_matching(const Digraph& d, MatchDirection dir) {
    std::vector<int> match_of_target(static_cast<std::size_t>(d.a()), -1);
    for (int s = 0; s < d.a(); ++s) {
        std::uint64_t visited = 0;
        augment(d, dir, s, match_of_target, visited);
    }
    Matching matching{dir, std::vector<int>(static_cast<std::size_t>(d.a()), -1)};
    for (int t = 0; t < d.a(); ++t)
        if (match_of_target[static_cast<std::size_t>(t)] >= 0)
            matching.assignment[static_cast<std::size_t>(match_of_target[static_cast<std::size_t>(t)])] = t;
    return matching;
}

}  // namespace

std::optional<Matching> perfect_matching(const Digraph& d, MatchDirection dir) {
    Matching matching = maximum_matching(d, dir);
    if (!matching.perfect())
        return std::nullopt;
    return matching;
}

std::optional<std::vector<VertexRef>> hall_violation(const Digraph& d, MatchDirection dir) {
    const Matching matching = maximum_matching(d, dir);
    int unmatched = -1;
    for (int s = 0; s < d.a(); ++s)
        if (matching.assignment[static_cast<std::size_t>(s)] < 0) {
            unmatched = s;
            break;
        }
    if (unmatched < 0)
        return std::nullopt;

    std::vector<int> match_of_target(static_cast<std::size_t>(d.a()), -1);
    for (int s = 0; s < d.a(); ++s)
        if (const int t = matching.assignment[static_cast<std::size_t>(s)]; t >= 0)
            match_of_target[static_cast<std::size_t>(t)] = s;

    // Alternating reachability from the unmatched source: every target seen is
    // matched (the matching is maximum), so |N+(S)| = |S| - 1.
    std::uint64_t sources = std::uint64_t{1} << unmatched, targets = 0;
    for (;;) {
        std::uint64_t new_targets = targets;
        for (std::uint64_t m = sources; m; m &= m - 1)
            new_targets |= adjacency(d, dir, std::countr_zero(m));
        std::uint64_t new_sources = sources;
        for (std::uint64_t m = new_targets & ~targets; m; m &= m - 1) {
            const int s = match_of_target[static_cast<std::size_t>(std::countr_zero(m))];
            if (s >= 0)
                new_sources |= std::uint64_t{1} << s;
        }
        if (new_sources == sources && new_targets == targets)
            break;
        sources = new_sources;
        targets = new_targets;
    }
    if (std::popcount(targets) >= std::popcount(sources))
        throw Error("hall_violation: search forest produced a non-violating set");

    std::vector<VertexRef> witness;
    for (std::uint64_t m = sources; m; m &= m - 1)
        witness.push_back({source_side(dir), std::countr_zero(m)});
    return witness;
}

std::optional<CycleFactor> cycle_factor(const Digraph& d) {
    const auto m1 = perfect_matching(d, MatchDirection::V1toV2);
    const auto m2 = perfect_matching(d, MatchDirection::V2toV1);
    if (!m1 || !m2)
        return std::nullopt;

    CycleFactor factor;
    std::vector<bool> visited(static_cast<std::size_t>(d.a()), false);
    for (int start = 0; start < d.a(); ++start) {
        if (visited[static_cast<std::size_t>(start)])
            continue;
        Cycle cycle;
        int i = start;
        do {
            visited[static_cast<std::size_t>(i)] = true;
            const int j = m1->assignment[static_cast<std::size_t>(i)];
            cycle.vertices.push_back(x(i));
            cycle.vertices.push_back(y(j));
            i = m2->assignment[static_cast<std::size_t>(j)];
        } while (i != start);
        factor.cycles.push_back(std::move(cycle));
    }
    return factor;
}

bool is_valid_factor(const Digraph& d, const CycleFactor& f) {
    std::vector<VertexRef> seen;
    for (const Cycle& c : f.cycles) {
        if (!is_valid_cycle(d, c))
            return false;
        seen.insert(seen.end(), c.vertices.begin(), c.vertices.end());
    }
    if (seen.size() != static_cast<std::size_t>(d.vertex_count()))
        return false;
    std::ranges::sort(seen);
    return std::ranges::adjacent_find(seen) == seen.end();
}

std::string render_factor(const CycleFactor& f) {
    std::string text;
    for (const Cycle& c : f.cycles) {
        if (!text.empty())
            text += ' ';
        text += '[' + render_cycle(c) + ']';
    }
    return text;
}

}  // namespace bbd
