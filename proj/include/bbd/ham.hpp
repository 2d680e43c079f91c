#pragma once

#include "bbd/cycle.hpp"
#include "bbd/digraph.hpp"

#include <optional>

namespace bbd {

// The exact solvers run a subset DP over all 2a vertices.
inline constexpr int kMaxSolverA = 12;
// Permutation-oracle guard.
inline constexpr int kMaxBruteForceA = 6;

// Hamiltonian cycle anchored at x0, or absent. When one exists, the returned
// sequence is the lexicographically smallest.
std::optional<Cycle> is_hamiltonian(const Digraph& d);

// Maximum-length cycle; absent iff the digraph is acyclic. Length ties break to
// the lexicographically smallest vertex sequence, so the result is deterministic.
std::optional<Cycle> longest_cycle(const Digraph& d);

// True iff the longest cycle has length >= min_length; min_length must be even
// and >= 2 (cycles here always have even length).
bool has_cycle_at_least(const Digraph& d, int min_length);

struct MergeBoundCheck {
    struct Violation {
        VertexRef tail, head;  // the outside arc tail -> head
        int in_on_cycle, out_on_cycle, half_length;
    };

    bool pass = true;
    std::optional<Cycle> cycle;  // the longest cycle checked; absent when acyclic
    std::optional<Violation> violation;
};

// For a longest cycle C of half-length m and every arc u -> v with both ends off C,
// d^-_C(u) + d^+_C(v) <= m. Both arc orientations are covered, the second by
// rerunning the first on the reversed digraph with the reversed cycle. A violation
// would mean the checked cycle is not actually maximal.
MergeBoundCheck check_merge_bound(const Digraph& d);

// Independent oracle: tries every vertex order directly (a <= 6).
std::optional<Cycle> is_hamiltonian_bruteforce(const Digraph& d);

// A path of >= 3 vertices meeting a cycle exactly at its two distinct endpoints;
// gap counts the arcs along the cycle from the entry endpoint to the exit endpoint.
struct Bypass {
    std::vector<VertexRef> path;
    int gap;
};

bool is_valid_bypass(const Digraph& d, const Cycle& c, const Bypass& b);

}  // namespace bbd
