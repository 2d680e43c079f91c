#include "bbd/report_json.hpp"

#include <json.hpp>

namespace bbd {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) {
    return j.dump(2) + "\n";
}

std::string relation_token(PairRelation r) {
    switch (r) {
        case PairRelation::Dominating: return "dominating";
        case PairRelation::Dominated: return "dominated";
        case PairRelation::NonAdjacent: return "nonadjacent";
    }
    throw Error("unknown pair relation");
}

ordered_json names_of(const std::vector<VertexRef>& vs) {
    ordered_json arr = ordered_json::array();
    for (VertexRef v : vs) arr.push_back(vertex_name(v));
    return arr;
}

ordered_json mode_json(const Mode& m) {
    ordered_json j;
    if (m.kind == Mode::Kind::Exhaustive) {
        j["kind"] = "exhaustive";
    } else {
        j["kind"] = "random";
        j["samples"] = m.samples;
        j["seed"] = m.seed;
        j["probs"] = m.probs;
    }
    return j;
}

}  // namespace

std::string condition_report_json(const Digraph& d, const ConditionReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "condition";
    j["a"] = d.a();
    j["condition"] = condition_name(r.id);
    j["holds"] = r.holds;
    if (r.witness) {
        j["witness"] = {{"u", vertex_name(r.witness->u)},
                        {"v", vertex_name(r.witness->v)},
                        {"relation", relation_token(r.witness->relation)},
                        {"degree_u", r.witness->degree_u},
                        {"degree_v", r.witness->degree_v}};
    }
    return dump(j);
}

std::string hamilton_report_json(const Digraph& d, const std::optional<Cycle>& ham_cycle,
                                 const std::optional<Cycle>& longest) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "hamilton";
    j["a"] = d.a();
    j["hamiltonian"] = ham_cycle.has_value();
    if (ham_cycle) {
        j["cycle"] = render_cycle(*ham_cycle);
    } else if (longest) {
        j["longest_cycle"] = render_cycle(*longest);
        j["longest_length"] = longest->length();
    }
    return dump(j);
}

std::string factor_report_json(const Digraph& d, const std::optional<CycleFactor>& factor) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "factor";
    j["a"] = d.a();
    j["factor_exists"] = factor.has_value();
    if (factor) {
        j["factor"] = render_factor(*factor);
    } else {
        for (MatchDirection dir : {MatchDirection::V1toV2, MatchDirection::V2toV1}) {
            auto set = hall_violation(d, dir);
            if (!set) continue;
            std::vector<VertexRef> refs(set->begin(), set->end());
            j["violation"] = {
                {"direction", dir == MatchDirection::V1toV2 ? "v1_to_v2" : "v2_to_v1"},
                {"set", names_of(refs)},
                {"out_neighborhood", names_of(neighborhood(d, refs, ArcDir::Out))}};
            break;
        }
    }
    return dump(j);
}

std::string catalog_report_json(ExceptionName name, const Digraph& d) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "catalog";
    j["name"] = exception_name(name);
    j["a"] = d.a();
    j["bbd"] = render_bbd(d);
    return dump(j);
}

std::string verification_report_json(const VerificationReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "verification";
    j["theorem"] = theorem_name(r.theorem);
    j["a"] = r.a;
    j["mode"] = mode_json(r.mode);
    j["generated"] = r.generated;
    j["strong"] = r.strong_count;
    j["premise"] = r.premise_count;
    j["checked"] = r.checked;
    j["ok"] = r.ok();
    ordered_json cx = ordered_json::array();
    for (const Counterexample& c : r.counterexamples)
        cx.push_back({{"bbd", render_bbd(c.digraph)}, {"detail", c.detail}});
    j["counterexamples"] = cx;
    if (!r.exception_matches.empty()) {
        ordered_json em;
        for (const auto& [name, n] : r.exception_matches) em[name] = n;
        j["exception_matches"] = em;
    }
    return dump(j);
}

std::string exploration_report_json(const ExplorationReport& r) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "exploration";
    j["a"] = r.a;
    j["k"] = r.k;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    j["profile"] = profile_name(r.profile);
    j["generated"] = r.generated;
    j["strong"] = r.strong_count;
    j["bk"] = r.bk_count;
    ordered_json found = ordered_json::array();
    for (const Digraph& d : r.found) found.push_back(render_bbd(d));
    j["found"] = found;
    return dump(j);
}

}  // namespace bbd
