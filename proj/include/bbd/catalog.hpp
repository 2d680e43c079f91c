#pragma once

#include "bbd/digraph.hpp"

#include <optional>
#include <string>

namespace bbd {

// The extremal non-hamiltonian digraphs: each is strong and satisfies the sharp
// (2a-2, a+1) premise, yet has no hamiltonian cycle. H2X is the H2 variant with
// the optional arc x2 -> y0 added; the two are kept as separate entries.
enum class ExceptionName : std::uint8_t { H1, H2, H2X, H3 };

inline constexpr ExceptionName kAllExceptions[] = {ExceptionName::H1, ExceptionName::H2,
                                                   ExceptionName::H2X, ExceptionName::H3};

std::string exception_name(ExceptionName n);  // "h1", "h2", "h2x", "h3"
std::optional<ExceptionName> exception_from_name(std::string_view s);

// Builds the named digraph and self-checks its defining properties (strong,
// sharp premise, no hamiltonian cycle) before returning it.
Digraph build_exception(ExceptionName name);

struct Isomorphism {
    // If swapped_sides: x_i -> y_{v1_map[i]} and y_j -> x_{v2_map[j]};
    // otherwise x_i -> x_{v1_map[i]} and y_j -> y_{v2_map[j]}.
    bool swapped_sides;
    std::vector<int> v1_map, v2_map;
};

// Searches side-preserving and side-swapping bijections (strong bipartite digraphs
// determine their sides only up to that swap), with a sorted-degree-sequence
// rejection filter in front of the permutation search.
std::optional<Isomorphism> is_isomorphic(const Digraph& lhs, const Digraph& rhs);

// First catalog entry isomorphic to d, probed in order H1, H2, H2X, H3.
std::optional<ExceptionName> match_exception(const Digraph& d);

}  // namespace bbd
