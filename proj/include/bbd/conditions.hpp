#pragma once

#include "bbd/digraph.hpp"

#include <optional>
#include <string>

namespace bbd {

enum class ConditionKind : std::uint8_t { Bk, SharpPremise, NonAdjacent3a, DomPairs3a };

struct ConditionId {
    ConditionKind kind;
    int k = 0;  // meaningful for Bk only

    friend bool operator==(const ConditionId&, const ConditionId&) = default;
};

// "b<k>", "sharp", "nonadj3a", "dompairs3a"; the same tokens the CLI accepts.
std::string condition_name(ConditionId id);
std::optional<ConditionId> condition_from_name(std::string_view name);

enum class PairRelation : std::uint8_t { Dominating, Dominated, NonAdjacent };

// First violating pair in lexicographic order, with the degrees that break the bound.
struct ConditionWitness {
    VertexRef u, v;
    PairRelation relation;
    int degree_u, degree_v;
};

struct ConditionReport {
    ConditionId id;
    bool holds;
    std::optional<ConditionWitness> witness;  // present iff !holds
};

// All four checkers require a >= 2 and hold vacuously when nothing quantified over
// exists (no dominating pair, no non-adjacent pair).

// Every dominating pair {u,v} satisfies d(u) >= 2a-k with d(v) >= a+k under one of
// the two assignments. k ranges over [0, 2a]; for k > a the a+k leg is unsatisfiable,
// so the condition can hold only vacuously.
ConditionReport satisfies_bk(const Digraph& d, int k);

// The (2a-2, a+1) pattern over dominating pairs.
ConditionReport satisfies_sharp_premise(const Digraph& d);

// d(u) + d(v) >= 3a for every non-adjacent pair; same-side pairs, which are always
// non-adjacent, are included.
ConditionReport satisfies_nonadjacent_3a(const Digraph& d);

// d(u) + d(v) >= 3a for every dominating pair and every dominated pair.
ConditionReport satisfies_dom_pairs_3a(const Digraph& d);

// Dispatches on id.kind; id.k feeds the B_k checker.
ConditionReport check_condition(const Digraph& d, ConditionId id);

}  // namespace bbd
