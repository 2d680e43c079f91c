#pragma once

#include "bbd/digraph.hpp"

#include <string>
#include <vector>

namespace bbd {

// Directed cycle given by its vertex sequence; the closing arc back to the first
// vertex is implied. Sides alternate, so the length is even. Sequences start on
// V1; cycles produced by this library start at the smallest V1 index they visit.
struct Cycle {
    std::vector<VertexRef> vertices;

    int length() const noexcept { return static_cast<int>(vertices.size()); }

    friend bool operator==(const Cycle&, const Cycle&) = default;
};

bool is_valid_cycle(const Digraph& d, const Cycle& c);

std::string render_cycle(const Cycle& c);  // "x0 y0 x1 y1"

}  // namespace bbd
