#include "bbd/cycle.hpp"

#include <algorithm>

namespace bbd {

bool is_valid_cycle(const Digraph& d, const Cycle& c) {
    const auto& vs = c.vertices;
    if (vs.size() < 2 || vs.size() % 2 != 0)
        return false;
    if (vs.front().side != Side::V1)
        return false;
    for (VertexRef v : vs)
        if (v.index < 0 || v.index >= d.a())
            return false;
    std::vector<VertexRef> sorted = vs;
    std::ranges::sort(sorted);
    if (std::ranges::adjacent_find(sorted) != sorted.end())
        return false;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const VertexRef from = vs[i], to = vs[(i + 1) % vs.size()];
        if (from.side == to.side || !d.has_arc(from, to))
            return false;
    }
    return true;
}

std::string render_cycle(const Cycle& c) {
    std::string text;
    for (const VertexRef v : c.vertices) {
        if (!text.empty())
            text += ' ';
        text += vertex_name(v);
    }
    return text;
}

}  // namespace bbd
