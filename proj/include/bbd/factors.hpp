#pragma once

#include "bbd/cycle.hpp"
#include "bbd/digraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bbd {

enum class MatchDirection : std::uint8_t { V1toV2, V2toV1 };

constexpr Side source_side(MatchDirection dir) noexcept {
    return dir == MatchDirection::V1toV2 ? Side::V1 : Side::V2;
}

struct Matching {
    MatchDirection direction;
    // assignment[i] = matched opposite-side index of source vertex i, or -1.
    std::vector<int> assignment;

    bool perfect() const noexcept;
};

// A source-side set S with |N+(S)| < |S|, derived from the search forest of a
// maximum matching; present exactly when no perfect matching exists.
std::optional<std::vector<VertexRef>> hall_violation(const Digraph& d, MatchDirection dir);

// A perfect matching of source-side out-arcs, or absent when none exists.
std::optional<Matching> perfect_matching(const Digraph& d, MatchDirection dir);

struct CycleFactor {
    std::vector<Cycle> cycles;
};

// Spanning collection of disjoint cycles, stitched from the two perfect matchings
// by alternating them; cycles are extracted from the smallest unvisited V1 index.
std::optional<CycleFactor> cycle_factor(const Digraph& d);

bool is_valid_factor(const Digraph& d, const CycleFactor& f);

std::string render_factor(const CycleFactor& f);  // "[x0 y1 x1 y2] [x2 y0]"

}  // namespace bbd
