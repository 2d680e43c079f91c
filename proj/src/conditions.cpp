#include "bbd/conditions.hpp"

#include <bit>

namespace bbd {

std::string condition_name(ConditionId id) {
    switch (id.kind) {
    case ConditionKind::Bk:
        return "b" + std::to_string(id.k);
    case ConditionKind::SharpPremise:
        return "sharp";
    case ConditionKind::NonAdjacent3a:
        return "nonadj3a";
    case ConditionKind::DomPairs3a:
        return "dompairs3a";
    }
    return "?";
}

std::optional<ConditionId> condition_from_name(std::string_view name) {
    if (name == "sharp")
        return ConditionId{ConditionKind::SharpPremise};
    if (name == "nonadj3a")
        return ConditionId{ConditionKind::NonAdjacent3a};
    if (name == "dompairs3a")
        return ConditionId{ConditionKind::DomPairs3a};
    if (name.size() >= 2 && name[0] == 'b') {
        int k = 0;
        for (char c : name.substr(1)) {
            if (c < '0' || c > '9')
                return std::nullopt;
            k = k * 10 + (c - '0');
            if (k > 1000)
                return std::nullopt;
        }
        return ConditionId{ConditionKind::Bk, k};
    }
    return std::nullopt;
}

namespace {

void require_order(const Digraph& d) {
    if (d.a() < 2)
        throw InputError("degree conditions are defined for a >= 2");
}

std::vector<int> totals(const Digraph& d, Side side) {
    std::vector<int> t(static_cast<std::size_t>(d.a()));
    for (int i = 0; i < d.a(); ++i)
        t[static_cast<std::size_t>(i)] = degree(d, {side, i}).total;
    return t;
}

// Shared core of satisfies_bk and satisfies_sharp_premise: every dominating pair
// must fit the (strong_bound, weak_bound) degree pattern one way or the other.
ConditionReport check_dominating_bounds(const Digraph& d, ConditionId id, int strong_bound,
                                        int weak_bound) {
    require_order(d);
    ConditionReport report{id, true, std::nullopt};
    for (int s = 0; s < 2; ++s) {
        const Side side = static_cast<Side>(s);
        const std::vector<int> deg = totals(d, side);
        for (int i = 0; i < d.a(); ++i)
            for (int j = i + 1; j < d.a(); ++j) {
                if (!(d.out_mask({side, i}) & d.out_mask({side, j})))
                    continue;
                const int du = deg[static_cast<std::size_t>(i)];
                const int dv = deg[static_cast<std::size_t>(j)];
                const bool ok = (du >= strong_bound && dv >= weak_bound) ||
                                (dv >= strong_bound && du >= weak_bound);
                if (!ok) {
                    report.holds = false;
                    report.witness =
                        ConditionWitness{{side, i}, {side, j}, PairRelation::Dominating, du, dv};
                    return report;
                }
            }
    }
    return report;
}

}  // namespace

ConditionReport satisfies_bk(const Digraph& d, int k) {
    if (k < 0 || k > 2 * d.a())
        throw InputError("condition B_k needs 0 <= k <= 2a");
    return check_dominating_bounds(d, {ConditionKind::Bk, k}, 2 * d.a() - k, d.a() + k);
}

ConditionReport satisfies_sharp_premise(const Digraph& d) {
    return check_dominating_bounds(d, {ConditionKind::SharpPremise}, 2 * d.a() - 2, d.a() + 1);
}

ConditionReport satisfies_nonadjacent_3a(const Digraph& d) {
    require_order(d);
    ConditionReport report{{ConditionKind::NonAdjacent3a}, true, std::nullopt};
    const int n = d.vertex_count();
    const auto vertex = [&](int v) {
        return v < d.a() ? x(v) : y(v - d.a());
    };
    for (int ui = 0; ui < n; ++ui)
        for (int vi = ui + 1; vi < n; ++vi) {
            const VertexRef u = vertex(ui), v = vertex(vi);
            if (u.side != v.side && (d.has_arc(u, v) || d.has_arc(v, u)))
                continue;
            const int du = degree(d, u).total, dv = degree(d, v).total;
            if (du + dv < 3 * d.a()) {
                report.holds = false;
                report.witness = ConditionWitness{u, v, PairRelation::NonAdjacent, du, dv};
                return report;
            }
        }
    return report;
}

ConditionReport satisfies_dom_pairs_3a(const Digraph& d) {
    require_order(d);
    ConditionReport report{{ConditionKind::DomPairs3a}, true, std::nullopt};
    for (PairKind kind : {PairKind::Dominating, PairKind::Dominated}) {
        for (const VertexPair& p : vertex_pairs(d, kind)) {
            const int du = degree(d, p.u).total, dv = degree(d, p.v).total;
            if (du + dv < 3 * d.a()) {
                report.holds = false;
                report.witness = ConditionWitness{
                    p.u, p.v,
                    kind == PairKind::Dominating ? PairRelation::Dominating
                                                 : PairRelation::Dominated,
                    du, dv};
                return report;
            }
        }
    }
    return report;
}

ConditionReport check_condition(const Digraph& d, ConditionId id) {
    switch (id.kind) {
    case ConditionKind::Bk:
        return satisfies_bk(d, id.k);
    case ConditionKind::SharpPremise:
        return satisfies_sharp_premise(d);
    case ConditionKind::NonAdjacent3a:
        return satisfies_nonadjacent_3a(d);
    case ConditionKind::DomPairs3a:
        return satisfies_dom_pairs_3a(d);
    }
    throw Error("unknown condition kind");
}

}  // namespace bbd
