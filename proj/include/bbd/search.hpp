#pragma once

#include "bbd/digraph.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bbd {

// Exhaustive enumeration walks all 2^(2a^2) arc codes.
inline constexpr int kMaxEnumerationA = 3;

// All balanced bipartite digraphs of order a, indexed by their arc-matrix
// integer; at(c) is the digraph with code c, for c in [0, total()).
class Enumeration {
public:
    explicit Enumeration(int a);

    int a() const noexcept { return a_; }
    std::uint64_t total() const noexcept { return std::uint64_t{1} << (2 * a_ * a_); }
    Digraph at(std::uint64_t code) const;

private:
    int a_;
};

// Each of the 2a^2 possible arcs is drawn independently with probability p,
// in m1-then-m2 row-major order, from mt19937_64(seed); an arc is present iff
// (next() >> 11) < floor(p * 2^53). Identical output on every platform.
Digraph random_digraph(int a, double p, std::uint64_t seed);

// The statements the verification harness can test. Every premise below starts
// with "strong"; the rest is:
//   Main      B_1 holds                 => hamiltonian
//   Sharp     (2a-2, a+1) pattern       => hamiltonian or isomorphic to a catalog entry
//   Adamus3a  nonadjacent pairs sum 3a  => hamiltonian
//   Prop1     dom pairs sum 3a          => cycle factor exists
//   Lemma1    (2a-2, a+1), not H2/H2X   => perfect matchings both ways + cycle factor
//   Lemma3    (2a-2, a+1), a >= 3       => a cycle of length >= 4
enum class TheoremId : std::uint8_t { Main, Sharp, Adamus3a, Prop1, Lemma1, Lemma3 };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::Main,   TheoremId::Sharp,
                                             TheoremId::Adamus3a, TheoremId::Prop1,
                                             TheoremId::Lemma1, TheoremId::Lemma3};

// "main", "sharp", "adamus3a", "prop1", "lemma1", "lemma3"; the CLI tokens.
std::string theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);

struct Mode {
    enum class Kind : std::uint8_t { Exhaustive, Random };

    Kind kind = Kind::Exhaustive;
    std::uint64_t samples = 0;  // random only
    std::uint64_t seed = 0;     // random only
    std::vector<double> probs;  // random only; sample i draws with probs[i % size]

    static Mode exhaustive();
    static Mode random(std::uint64_t samples, std::uint64_t seed);
    static Mode random(std::uint64_t samples, std::uint64_t seed, std::vector<double> probs);
};

std::vector<double> default_probs();  // {0.3, 0.5, 0.7, 0.9}

struct Counterexample {
    Digraph digraph;
    std::string detail;  // the conclusion clause that failed
};

struct VerificationReport {
    TheoremId theorem;
    int a = 0;
    Mode mode;
    // Funnel: generated >= strong_count >= premise_count >= checked. The premise
    // includes every clause (for Lemma1 also the catalog exclusion), and every
    // premise-satisfier has its conclusion checked, so checked == premise_count.
    std::uint64_t generated = 0;
    std::uint64_t strong_count = 0;
    std::uint64_t premise_count = 0;
    std::uint64_t checked = 0;
    // Premise-satisfiers whose conclusion failed, sorted by arc code, deduplicated.
    std::vector<Counterexample> counterexamples;
    // Sharp only: how often each catalog entry absorbed a non-hamiltonian
    // premise-satisfier, keyed by exception name.
    std::map<std::string, std::uint64_t> exception_matches;
    // Wall-clock time; informational only, never serialized.
    double elapsed_seconds = 0.0;

    bool ok() const noexcept { return counterexamples.empty(); }
};

// Runs the premise/conclusion sweep for one theorem at one order. Exhaustive
// mode needs a <= 3 (CapacityError points at random mode); random mode needs
// a <= 12 and a seeded sample plan. Lemma3 needs a >= 3. Work is sharded over
// `workers` threads by index residue; the report does not depend on the count.
VerificationReport verify(TheoremId theorem, int a, const Mode& mode, int workers = 1);

// Premise holds and conclusion fails, recomputed from scratch on this digraph.
bool reverify_counterexample(TheoremId theorem, const Digraph& d);

// How explorer samples are produced: random draws over an arc-density grid,
// arc deletion from the complete digraph while strongness and B_k survive,
// or alternating both.
enum class GeneratorProfile : std::uint8_t { Mixed, ArcSweep, BiasedDeletion };

std::string profile_name(GeneratorProfile p);  // "mixed", "sweep", "biased"
std::optional<GeneratorProfile> profile_from_name(std::string_view name);

struct ExplorationReport {
    int a = 0;
    int k = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    GeneratorProfile profile = GeneratorProfile::Mixed;
    std::uint64_t generated = 0;
    std::uint64_t strong_count = 0;
    std::uint64_t bk_count = 0;  // strong and B_k holds
    // Strong, B_k holds, yet no hamiltonian cycle; sorted by arc code, deduplicated.
    // Candidate answers to an open question; the report asserts nothing beyond that.
    std::vector<Digraph> found;
    double elapsed_seconds = 0.0;  // informational only, never serialized
};

// Hunts for strong non-hamiltonian digraphs satisfying B_k, in the open range
// a >= 4, 2 <= k <= a/2 (orders 2 and 3 are settled). Same sharding and
// determinism contract as verify; a is capped by the exact solver (a <= 12).
ExplorationReport explore_problem1(int a, int k, std::uint64_t samples, std::uint64_t seed,
                                   GeneratorProfile profile = GeneratorProfile::Mixed,
                                   int workers = 1);

// Strong, B_k holds, not hamiltonian, recomputed from scratch.
bool reverify_candidate(int k, const Digraph& d);

}  // namespace bbd
