#pragma once

#include "bbd/catalog.hpp"
#include "bbd/conditions.hpp"
#include "bbd/cycle.hpp"
#include "bbd/factors.hpp"
#include "bbd/search.hpp"

#include <optional>
#include <string>

namespace bbd {

// Canonical JSON renderings: schema tag 1, fixed key order, two-space indent,
// trailing newline. Equal report values produce identical bytes; wall-clock
// fields are deliberately left out so reruns compare clean.

std::string condition_report_json(const Digraph& d, const ConditionReport& r);

// `ham_cycle` drives the verdict; `longest` is attached when no hamiltonian
// cycle exists (absent in turn only for acyclic digraphs).
std::string hamilton_report_json(const Digraph& d, const std::optional<Cycle>& ham_cycle,
                                 const std::optional<Cycle>& longest);

// When no factor exists the report carries the side whose Hall condition broke
// and the witnessing set with its out-neighborhood.
std::string factor_report_json(const Digraph& d, const std::optional<CycleFactor>& factor);

std::string catalog_report_json(ExceptionName name, const Digraph& d);

std::string verification_report_json(const VerificationReport& r);

std::string exploration_report_json(const ExplorationReport& r);

}  // namespace bbd
