#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bbd/ham.hpp"
#include "bbd/report_json.hpp"

namespace {

using namespace bbd;

struct GlobalOpts {
    bool json = false;
    bool quiet = false;
};

void emit(const GlobalOpts& g, const std::string& text) {
    if (!g.quiet) std::cout << text;
}

std::string read_text(const std::string& path) {
    std::ostringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in) throw InputError("cannot open file: " + path);
        buf << in.rdbuf();
    }
    return buf.str();
}

int default_workers() {
    if (const char* env = std::getenv("BBD_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

std::string format_seconds(double s) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f", s);
    return buf;
}

std::string join_names(const std::vector<VertexRef>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ", ";
        out += vertex_name(vs[i]);
    }
    return out + "}";
}

std::string relation_word(PairRelation r) {
    switch (r) {
        case PairRelation::Dominating: return "dominating";
        case PairRelation::Dominated: return "dominated";
        case PairRelation::NonAdjacent: return "nonadjacent";
    }
    return "?";
}

std::string describe_failure(const Digraph& d, const ConditionReport& r) {
    const ConditionWitness& w = *r.witness;
    const int a = d.a();
    std::string text = relation_word(w.relation) + " pair " + join_names({w.u, w.v}) + " has d(" +
                       vertex_name(w.u) + ") = " + std::to_string(w.degree_u) + ", d(" +
                       vertex_name(w.v) + ") = " + std::to_string(w.degree_v);
    switch (r.id.kind) {
        case ConditionKind::Bk:
            return text + "; neither assignment meets (" + std::to_string(2 * a - r.id.k) + ", " +
                   std::to_string(a + r.id.k) + ")";
        case ConditionKind::SharpPremise:
            return text + "; neither assignment meets (" + std::to_string(2 * a - 2) + ", " +
                   std::to_string(a + 1) + ")";
        case ConditionKind::NonAdjacent3a:
        case ConditionKind::DomPairs3a:
            return text + "; sum " + std::to_string(w.degree_u + w.degree_v) + " < " +
                   std::to_string(3 * a);
    }
    return text;
}

int run_check(const GlobalOpts& g, const std::string& file, const std::string& condition) {
    const auto id = condition_from_name(condition);
    if (!id)
        throw InputError("unknown condition: " + condition +
                         " (expected b<k>, sharp, nonadj3a, or dompairs3a)");
    const Digraph d = parse_bbd(read_text(file));
    const ConditionReport rep = check_condition(d, *id);
    if (g.json)
        emit(g, condition_report_json(d, rep));
    else if (rep.holds)
        emit(g, condition_name(rep.id) + " holds\n");
    else
        emit(g, condition_name(rep.id) + " fails: " + describe_failure(d, rep) + "\n");
    return rep.holds ? 0 : 1;
}

int run_hamilton(const GlobalOpts& g, const std::string& file) {
    const Digraph d = parse_bbd(read_text(file));
    const auto cycle = is_hamiltonian(d);
    std::optional<Cycle> longest;
    if (!cycle) longest = longest_cycle(d);
    if (g.json) {
        emit(g, hamilton_report_json(d, cycle, longest));
    } else if (cycle) {
        emit(g, "hamiltonian cycle: " + render_cycle(*cycle) + "\n");
    } else {
        std::string text = "no hamiltonian cycle\n";
        if (longest)
            text += "longest cycle: " + render_cycle(*longest) + " (length " +
                    std::to_string(longest->length()) + ")\n";
        emit(g, text);
    }
    return cycle ? 0 : 1;
}

int run_factor(const GlobalOpts& g, const std::string& file) {
    const Digraph d = parse_bbd(read_text(file));
    const auto factor = cycle_factor(d);
    if (g.json) {
        emit(g, factor_report_json(d, factor));
    } else if (factor) {
        emit(g, "cycle factor: " + render_factor(*factor) + "\n");
    } else {
        std::string text = "no cycle factor";
        for (MatchDirection dir : {MatchDirection::V1toV2, MatchDirection::V2toV1}) {
            const auto set = hall_violation(d, dir);
            if (!set) continue;
            text += ": " + std::string(dir == MatchDirection::V1toV2 ? "V1" : "V2") + " set " +
                    join_names(*set) + " has out-neighborhood " +
                    join_names(neighborhood(d, *set, ArcDir::Out));
            break;
        }
        emit(g, text + "\n");
    }
    return factor ? 0 : 1;
}

int run_catalog(const GlobalOpts& g, const std::string& name, const std::string& out) {
    const auto n = exception_from_name(name);
    if (!n) throw InputError("unknown catalog name: " + name + " (expected h1, h2, h2x, or h3)");
    const Digraph d = build_exception(*n);
    const std::string payload = g.json ? catalog_report_json(*n, d) : render_bbd(d);
    if (!out.empty()) {
        std::ofstream ofs(out, std::ios::binary);
        if (!ofs) throw InputError("cannot write file: " + out);
        ofs << payload;
    } else {
        emit(g, payload);
    }
    return 0;
}

std::string human_verification(const VerificationReport& r) {
    std::string text;
    text += "theorem: " + theorem_name(r.theorem) + "\n";
    text += "a: " + std::to_string(r.a) + "\n";
    if (r.mode.kind == Mode::Kind::Exhaustive) {
        text += "mode: exhaustive\n";
    } else {
        text += "mode: random samples=" + std::to_string(r.mode.samples) +
                " seed=" + std::to_string(r.mode.seed) + " probs=";
        for (std::size_t i = 0; i < r.mode.probs.size(); ++i) {
            if (i) text += ",";
            char buf[32];
            std::snprintf(buf, sizeof(buf), "%g", r.mode.probs[i]);
            text += buf;
        }
        text += "\n";
    }
    text += "generated: " + std::to_string(r.generated) + "\n";
    text += "strong: " + std::to_string(r.strong_count) + "\n";
    text += "premise: " + std::to_string(r.premise_count) + "\n";
    text += "checked: " + std::to_string(r.checked) + "\n";
    if (!r.exception_matches.empty()) {
        text += "exception matches:";
        for (const auto& [name, n] : r.exception_matches)
            text += " " + name + "=" + std::to_string(n);
        text += "\n";
    }
    text += "counterexamples: " + std::to_string(r.counterexamples.size()) + "\n";
    for (const Counterexample& c : r.counterexamples)
        text += "counterexample (" + c.detail + "):\n" + render_bbd(c.digraph);
    text += "elapsed: " + format_seconds(r.elapsed_seconds) + " s\n";
    text += r.ok() ? "result: ok\n" : "result: COUNTEREXAMPLES FOUND\n";
    return text;
}

int run_verify(const GlobalOpts& g, const std::string& theorem, int a, bool exhaustive,
               std::uint64_t samples, std::uint64_t seed, const std::vector<double>& probs,
               int workers) {
    const auto id = theorem_from_name(theorem);
    if (!id)
        throw InputError("unknown theorem: " + theorem +
                         " (expected main, sharp, adamus3a, prop1, lemma1, or lemma3)");
    const Mode mode = exhaustive ? Mode::exhaustive()
                      : probs.empty() ? Mode::random(samples, seed)
                                      : Mode::random(samples, seed, probs);
    const VerificationReport rep = verify(*id, a, mode, workers);
    if (g.json)
        emit(g, verification_report_json(rep));
    else
        emit(g, human_verification(rep));
    return rep.ok() ? 0 : 1;
}

std::string human_exploration(const ExplorationReport& r) {
    std::string text;
    text += "a: " + std::to_string(r.a) + "\n";
    text += "k: " + std::to_string(r.k) + "\n";
    text += "samples: " + std::to_string(r.samples) + "\n";
    text += "seed: " + std::to_string(r.seed) + "\n";
    text += "profile: " + profile_name(r.profile) + "\n";
    text += "generated: " + std::to_string(r.generated) + "\n";
    text += "strong: " + std::to_string(r.strong_count) + "\n";
    text += "bk: " + std::to_string(r.bk_count) + "\n";
    text += "candidates: " + std::to_string(r.found.size()) + "\n";
    for (const Digraph& d : r.found)
        text += "candidate (strong, b" + std::to_string(r.k) +
                " holds, no hamiltonian cycle):\n" + render_bbd(d);
    text += "elapsed: " + format_seconds(r.elapsed_seconds) + " s\n";
    return text;
}

int run_explore(const GlobalOpts& g, int a, int k, std::uint64_t samples, std::uint64_t seed,
                const std::string& profile, int workers) {
    const auto p = profile_from_name(profile);
    if (!p)
        throw InputError("unknown generator profile: " + profile +
                         " (expected mixed, sweep, or biased)");
    const ExplorationReport rep = explore_problem1(a, k, samples, seed, *p, workers);
    if (g.json)
        emit(g, exploration_report_json(rep));
    else
        emit(g, human_exploration(rep));
    return rep.found.empty() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"balanced bipartite digraphs: degree conditions, matchings, cycle factors,"
                 " hamiltonicity, theorem sweeps",
                 "bbd"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit machine-readable JSON reports");
    app.add_flag("--quiet", g.quiet, "suppress output; communicate through the exit code");

    std::string check_file, check_condition;
    auto* check = app.add_subcommand("check", "evaluate a degree condition on a digraph");
    check->fallthrough();
    check->add_option("--condition", check_condition, "b<k>, sharp, nonadj3a, dompairs3a")
        ->required();
    check->add_option("file", check_file, "BBD file, or - for stdin")->required();

    std::string hamilton_file;
    auto* hamilton = app.add_subcommand("hamilton", "find a hamiltonian cycle");
    hamilton->fallthrough();
    hamilton->add_option("file", hamilton_file, "BBD file, or - for stdin")->required();

    std::string factor_file;
    auto* factor = app.add_subcommand("factor", "find a spanning set of disjoint cycles");
    factor->fallthrough();
    factor->add_option("file", factor_file, "BBD file, or - for stdin")->required();

    std::string catalog_name_arg, catalog_out;
    auto* catalog = app.add_subcommand("catalog", "emit an extremal digraph in BBD format");
    catalog->fallthrough();
    catalog->add_option("name", catalog_name_arg, "h1, h2, h2x, h3")->required();
    catalog->add_option("-o,--output", catalog_out, "write to this file instead of stdout");

    std::string verify_theorem;
    int verify_a = 0;
    bool verify_exhaustive = false;
    std::uint64_t verify_samples = 0, verify_seed = 0;
    std::vector<double> verify_probs;
    int verify_workers = default_workers();
    auto* verify_cmd =
        app.add_subcommand("verify", "sweep a theorem premise and conclusion over digraphs");
    verify_cmd->fallthrough();
    verify_cmd
        ->add_option("--theorem", verify_theorem,
                     "main, sharp, adamus3a, prop1, lemma1, lemma3")
        ->required();
    verify_cmd->add_option("--a", verify_a, "side size")->required();
    auto* exh_flag = verify_cmd->add_flag("--exhaustive", verify_exhaustive,
                                          "walk all 2^(2a^2) digraphs (a <= 3)");
    auto* samples_opt =
        verify_cmd->add_option("--samples", verify_samples, "random mode: sample count");
    auto* seed_opt = verify_cmd->add_option("--seed", verify_seed, "random mode: seed");
    auto* probs_opt =
        verify_cmd->add_option("--probs", verify_probs, "random mode: arc density grid")
            ->delimiter(',');
    verify_cmd->add_option("--workers", verify_workers,
                           "worker threads (default: BBD_WORKERS or hardware)");
    exh_flag->excludes(samples_opt)->excludes(seed_opt)->excludes(probs_opt);

    int explore_a = 0, explore_k = 0;
    std::uint64_t explore_samples = 0, explore_seed = 0;
    std::string explore_profile = "mixed";
    int explore_workers = default_workers();
    auto* explore =
        app.add_subcommand("explore", "hunt for open-problem counterexample candidates");
    explore->fallthrough();
    explore->add_option("--a", explore_a, "side size, >= 4")->required();
    explore->add_option("--k", explore_k, "condition index, 2 <= k <= a/2")->required();
    explore->add_option("--samples", explore_samples, "sample count")->required();
    explore->add_option("--seed", explore_seed, "seed");
    explore->add_option("--profile", explore_profile, "mixed, sweep, biased");
    explore->add_option("--workers", explore_workers,
                        "worker threads (default: BBD_WORKERS or hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (check->parsed()) return run_check(g, check_file, check_condition);
        if (hamilton->parsed()) return run_hamilton(g, hamilton_file);
        if (factor->parsed()) return run_factor(g, factor_file);
        if (catalog->parsed()) return run_catalog(g, catalog_name_arg, catalog_out);
        if (verify_cmd->parsed()) {
            if (!verify_exhaustive && samples_opt->count() == 0)
                throw InputError("verify needs --exhaustive or --samples <n>");
            return run_verify(g, verify_theorem, verify_a, verify_exhaustive, verify_samples,
                              verify_seed, verify_probs, verify_workers);
        }
        if (explore->parsed())
            return run_explore(g, explore_a, explore_k, explore_samples, explore_seed,
                               explore_profile, explore_workers);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
