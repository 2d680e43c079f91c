#include "bbd/search.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <thread>
#include <utility>

#include "bbd/catalog.hpp"
#include "bbd/conditions.hpp"
#include "bbd/factors.hpp"
#include "bbd/ham.hpp"

namespace bbd {

Enumeration::Enumeration(int a) : a_(a) {
    if (a < 1) throw InputError("enumeration needs a >= 1");
    if (a > kMaxEnumerationA)
        throw CapacityError("exhaustive enumeration is limited to a <= " +
                            std::to_string(kMaxEnumerationA) +
                            "; use random sampling for larger orders");
}

Digraph Enumeration::at(std::uint64_t code) const {
    if (code >= total()) throw InputError("arc code out of range");
    return digraph_from_code(a_, code);
}

Digraph random_digraph(int a, double p, std::uint64_t seed) {
    if (a < 2) throw InputError("random sampling needs a >= 2");
    if (!(p >= 0.0 && p <= 1.0)) throw InputError("arc probability must lie in [0, 1]");
    const auto threshold = static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    std::mt19937_64 eng(seed);
    Digraph d(a);
    for (Side s : {Side::V1, Side::V2})
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j)
                if ((eng() >> 11) < threshold) d.add_arc({s, i}, {opposite(s), j});
    return d;
}

std::string theorem_name(TheoremId id) {
    switch (id) {
        case TheoremId::Main: return "main";
        case TheoremId::Sharp: return "sharp";
        case TheoremId::Adamus3a: return "adamus3a";
        case TheoremId::Prop1: return "prop1";
        case TheoremId::Lemma1: return "lemma1";
        case TheoremId::Lemma3: return "lemma3";
    }
    throw Error("unknown theorem id");
}

std::optional<TheoremId> theorem_from_name(std::string_view name) {
    for (TheoremId id : kAllTheorems)
        if (name == theorem_name(id)) return id;
    return std::nullopt;
}

Mode Mode::exhaustive() {
    return Mode{};
}

Mode Mode::random(std::uint64_t samples, std::uint64_t seed) {
    return random(samples, seed, default_probs());
}

Mode Mode::random(std::uint64_t samples, std::uint64_t seed, std::vector<double> probs) {
    Mode m;
    m.kind = Kind::Random;
    m.samples = samples;
    m.seed = seed;
    m.probs = std::move(probs);
    return m;
}

std::vector<double> default_probs() {
    return {0.3, 0.5, 0.7, 0.9};
}

std::string profile_name(GeneratorProfile p) {
    switch (p) {
        case GeneratorProfile::Mixed: return "mixed";
        case GeneratorProfile::ArcSweep: return "sweep";
        case GeneratorProfile::BiasedDeletion: return "biased";
    }
    throw Error("unknown generator profile");
}

std::optional<GeneratorProfile> profile_from_name(std::string_view name) {
    for (GeneratorProfile p : {GeneratorProfile::Mixed, GeneratorProfile::ArcSweep,
                               GeneratorProfile::BiasedDeletion})
        if (name == profile_name(p)) return p;
    return std::nullopt;
}

namespace {

// splitmix64 finalizer; decorrelates per-sample seeds from (seed, index).
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

struct Evaluation {
    bool premise = false;
    bool conclusion = false;
    std::string detail;  // set when the conclusion fails
    std::optional<ExceptionName> matched;
};

// Premise and conclusion for one digraph whose strongness is already known.
// h2/h2x may carry prebuilt catalog copies for the Lemma1 exclusion; they are
// built on the spot when null.
Evaluation evaluate_strong(TheoremId t, const Digraph& d, const Digraph* h2, const Digraph* h2x) {
    Evaluation e;
    switch (t) {
        case TheoremId::Main:
            e.premise = satisfies_bk(d, 1).holds;
            if (!e.premise) return e;
            e.conclusion = is_hamiltonian(d).has_value();
            if (!e.conclusion) e.detail = "no hamiltonian cycle";
            return e;
        case TheoremId::Sharp:
            e.premise = satisfies_sharp_premise(d).holds;
            if (!e.premise) return e;
            if (is_hamiltonian(d)) {
                e.conclusion = true;
            } else if (auto m = match_exception(d)) {
                e.conclusion = true;
                e.matched = m;
            } else {
                e.detail = "no hamiltonian cycle and no catalog match";
            }
            return e;
        case TheoremId::Adamus3a:
            e.premise = satisfies_nonadjacent_3a(d).holds;
            if (!e.premise) return e;
            e.conclusion = is_hamiltonian(d).has_value();
            if (!e.conclusion) e.detail = "no hamiltonian cycle";
            return e;
        case TheoremId::Prop1:
            e.premise = satisfies_dom_pairs_3a(d).holds;
            if (!e.premise) return e;
            e.conclusion = cycle_factor(d).has_value();
            if (!e.conclusion) e.detail = "no cycle factor";
            return e;
        case TheoremId::Lemma1: {
            e.premise = satisfies_sharp_premise(d).holds;
            if (!e.premise) return e;
            if (d.a() == 3) {
                std::optional<Digraph> own_h2, own_h2x;
                if (!h2) h2 = &own_h2.emplace(build_exception(ExceptionName::H2));
                if (!h2x) h2x = &own_h2x.emplace(build_exception(ExceptionName::H2X));
                if (is_isomorphic(d, *h2) || is_isomorphic(d, *h2x)) {
                    e.premise = false;
                    return e;
                }
            }
            const bool m1 = perfect_matching(d, MatchDirection::V1toV2).has_value();
            const bool m2 = perfect_matching(d, MatchDirection::V2toV1).has_value();
            e.conclusion = m1 && m2 && cycle_factor(d).has_value();
            if (!e.conclusion)
                e.detail = !m1   ? "no perfect matching from V1 to V2"
                           : !m2 ? "no perfect matching from V2 to V1"
                                 : "no cycle factor";
            return e;
        }
        case TheoremId::Lemma3:
            e.premise = satisfies_sharp_premise(d).holds;
            if (!e.premise) return e;
            e.conclusion = has_cycle_at_least(d, 4);
            if (!e.conclusion) e.detail = "no cycle of length at least 4";
            return e;
    }
    throw Error("unknown theorem id");
}

int clamp_workers(int workers, std::uint64_t items) {
    const std::uint64_t cap = std::max<std::uint64_t>(items, 1);
    return static_cast<int>(std::min(static_cast<std::uint64_t>(workers), cap));
}

void sort_unique_counterexamples(std::vector<Counterexample>& cx) {
    std::sort(cx.begin(), cx.end(), [](const Counterexample& l, const Counterexample& r) {
        return arc_code_less(l.digraph, r.digraph);
    });
    cx.erase(std::unique(cx.begin(), cx.end(),
                         [](const Counterexample& l, const Counterexample& r) {
                             return l.digraph == r.digraph;
                         }),
             cx.end());
}

}  // namespace

VerificationReport verify(TheoremId theorem, int a, const Mode& mode, int workers) {
    if (a < 2) throw InputError("verification needs a >= 2");
    if (theorem == TheoremId::Lemma3 && a < 3)
        throw InputError("the cycle-length lemma is stated for a >= 3");
    if (workers < 1) throw InputError("worker count must be >= 1");

    std::uint64_t total = 0;
    if (mode.kind == Mode::Kind::Exhaustive) {
        total = Enumeration(a).total();  // validates the a <= 3 cap
    } else {
        if (a > kMaxSolverA)
            throw CapacityError("random verification is limited to a <= " +
                                std::to_string(kMaxSolverA));
        if (mode.probs.empty()) throw InputError("random mode needs a non-empty probability grid");
        for (double p : mode.probs)
            if (!(p >= 0.0 && p <= 1.0)) throw InputError("arc probability must lie in [0, 1]");
        total = mode.samples;
    }

    const auto started = std::chrono::steady_clock::now();
    const int nw = clamp_workers(workers, total);
    std::vector<VerificationReport> parts(nw);
    {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int w = 0; w < nw; ++w)
            pool.emplace_back([&, w] {
                VerificationReport& part = parts[w];
                std::optional<Digraph> h2, h2x;
                if (theorem == TheoremId::Lemma1 && a == 3) {
                    h2 = build_exception(ExceptionName::H2);
                    h2x = build_exception(ExceptionName::H2X);
                }
                for (std::uint64_t i = w; i < total; i += nw) {
                    Digraph d = mode.kind == Mode::Kind::Exhaustive
                                    ? digraph_from_code(a, i)
                                    : random_digraph(a, mode.probs[i % mode.probs.size()],
                                                     mix_seed(mode.seed, i));
                    ++part.generated;
                    if (!is_strong(d)) continue;
                    ++part.strong_count;
                    Evaluation e = evaluate_strong(theorem, d, h2 ? &*h2 : nullptr,
                                                   h2x ? &*h2x : nullptr);
                    if (!e.premise) continue;
                    ++part.premise_count;
                    ++part.checked;
                    if (e.matched) ++part.exception_matches[exception_name(*e.matched)];
                    if (!e.conclusion)
                        part.counterexamples.push_back({std::move(d), std::move(e.detail)});
                }
            });
        for (auto& t : pool) t.join();
    }

    VerificationReport rep;
    rep.theorem = theorem;
    rep.a = a;
    rep.mode = mode;
    for (VerificationReport& part : parts) {
        rep.generated += part.generated;
        rep.strong_count += part.strong_count;
        rep.premise_count += part.premise_count;
        rep.checked += part.checked;
        for (const auto& [name, n] : part.exception_matches) rep.exception_matches[name] += n;
        std::move(part.counterexamples.begin(), part.counterexamples.end(),
                  std::back_inserter(rep.counterexamples));
    }
    sort_unique_counterexamples(rep.counterexamples);
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

bool reverify_counterexample(TheoremId theorem, const Digraph& d) {
    if (d.a() < 2) return false;
    if (theorem == TheoremId::Lemma3 && d.a() < 3) return false;
    if (!is_strong(d)) return false;
    Evaluation e = evaluate_strong(theorem, d, nullptr, nullptr);
    return e.premise && !e.conclusion;
}

namespace {

// Deletes arcs of the complete digraph in seeded shuffled order, keeping each
// deletion only when strongness and B_k both survive it. Lands on digraphs that
// satisfy B_k tightly, the region where a counterexample would have to live.
Digraph biased_deletion(int a, int k, std::uint64_t sample_seed) {
    std::mt19937_64 eng(sample_seed);
    Digraph d = Digraph::complete(a);
    std::vector<std::pair<VertexRef, VertexRef>> arcs;
    arcs.reserve(static_cast<std::size_t>(2 * a * a));
    for (Side s : {Side::V1, Side::V2})
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < a; ++j) arcs.push_back({{s, i}, {opposite(s), j}});
    // Fisher-Yates spelled out; std::shuffle's draw sequence is not portable.
    for (std::size_t i = arcs.size() - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(eng() % (i + 1));
        std::swap(arcs[i], arcs[j]);
    }
    for (const auto& [from, to] : arcs) {
        d.remove_arc(from, to);
        if (!is_strong(d) || !satisfies_bk(d, k).holds) d.add_arc(from, to);
    }
    return d;
}

}  // namespace

ExplorationReport explore_problem1(int a, int k, std::uint64_t samples, std::uint64_t seed,
                                   GeneratorProfile profile, int workers) {
    if (a < 4) throw InputError("the exploration range starts at a = 4");
    if (a > kMaxSolverA)
        throw CapacityError("exploration is limited to a <= " + std::to_string(kMaxSolverA) +
                            " by the exact solver");
    if (k < 2 || 2 * k > a) throw InputError("the exploration range is 2 <= k <= a/2");
    if (workers < 1) throw InputError("worker count must be >= 1");

    const auto started = std::chrono::steady_clock::now();
    const std::vector<double> grid = default_probs();
    const int nw = clamp_workers(workers, samples);
    std::vector<ExplorationReport> parts(nw);
    {
        std::vector<std::thread> pool;
        pool.reserve(nw);
        for (int w = 0; w < nw; ++w)
            pool.emplace_back([&, w] {
                ExplorationReport& part = parts[w];
                for (std::uint64_t i = w; i < samples; i += nw) {
                    const bool biased = profile == GeneratorProfile::BiasedDeletion ||
                                        (profile == GeneratorProfile::Mixed && i % 2 == 1);
                    const std::uint64_t sample_seed = mix_seed(seed, i);
                    const std::uint64_t sweep_index =
                        profile == GeneratorProfile::Mixed ? i / 2 : i;
                    Digraph d = biased ? biased_deletion(a, k, sample_seed)
                                       : random_digraph(a, grid[sweep_index % grid.size()],
                                                        sample_seed);
                    ++part.generated;
                    if (!is_strong(d)) continue;
                    ++part.strong_count;
                    if (!satisfies_bk(d, k).holds) continue;
                    ++part.bk_count;
                    if (!is_hamiltonian(d)) part.found.push_back(std::move(d));
                }
            });
        for (auto& t : pool) t.join();
    }

    ExplorationReport rep;
    rep.a = a;
    rep.k = k;
    rep.samples = samples;
    rep.seed = seed;
    rep.profile = profile;
    for (ExplorationReport& part : parts) {
        rep.generated += part.generated;
        rep.strong_count += part.strong_count;
        rep.bk_count += part.bk_count;
        std::move(part.found.begin(), part.found.end(), std::back_inserter(rep.found));
    }
    std::sort(rep.found.begin(), rep.found.end(), arc_code_less);
    rep.found.erase(std::unique(rep.found.begin(), rep.found.end()), rep.found.end());
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return rep;
}

bool reverify_candidate(int k, const Digraph& d) {
    if (d.a() < 2) return false;
    return is_strong(d) && satisfies_bk(d, k).holds && !is_hamiltonian(d);
}

}  // namespace bbd
