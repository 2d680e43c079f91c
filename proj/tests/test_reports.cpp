#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "bbd/catalog.hpp"
#include "bbd/conditions.hpp"
#include "bbd/factors.hpp"
#include "bbd/ham.hpp"
#include "bbd/report_json.hpp"
#include "bbd/search.hpp"
#include "helpers.hpp"

using namespace bbd;
using nlohmann::json;

TEST_CASE("condition report fields") {
    const Digraph h1 = build_exception(ExceptionName::H1);
    const auto text = condition_report_json(h1, check_condition(h1, {ConditionKind::Bk, 1}));
    const json j = json::parse(text);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "condition");
    CHECK(j["condition"] == "b1");
    CHECK(j["a"] == 2);
    CHECK(j["holds"] == false);
    CHECK(j["witness"]["u"] == "x0");
    CHECK(j["witness"]["v"] == "x1");
    CHECK(j["witness"]["relation"] == "dominating");
    CHECK(j["witness"]["degree_u"] == 2);
    CHECK(j["witness"]["degree_v"] == 4);
    CHECK(text.back() == '\n');

    const auto holds = condition_report_json(h1, check_condition(h1, {ConditionKind::DomPairs3a}));
    const json jh = json::parse(holds);
    CHECK(jh["holds"] == true);
    CHECK(!jh.contains("witness"));
}

TEST_CASE("hamilton report fields") {
    const Digraph h3 = build_exception(ExceptionName::H3);
    const auto text = hamilton_report_json(h3, is_hamiltonian(h3), longest_cycle(h3));
    const json j = json::parse(text);
    CHECK(j["kind"] == "hamilton");
    CHECK(j["hamiltonian"] == false);
    CHECK(!j.contains("cycle"));
    CHECK(j["longest_cycle"] == "x0 y1 x1 y0");
    CHECK(j["longest_length"] == 4);

    const Digraph k2 = Digraph::complete(2);
    const json jk = json::parse(hamilton_report_json(k2, is_hamiltonian(k2), std::nullopt));
    CHECK(jk["hamiltonian"] == true);
    CHECK(jk["cycle"] == "x0 y0 x1 y1");
    CHECK(!jk.contains("longest_cycle"));
}

TEST_CASE("factor report fields") {
    const Digraph h2 = build_exception(ExceptionName::H2);
    const json j = json::parse(factor_report_json(h2, cycle_factor(h2)));
    CHECK(j["kind"] == "factor");
    CHECK(j["factor_exists"] == false);
    CHECK(j["violation"]["direction"] == "v1_to_v2");
    CHECK(j["violation"]["set"] == json::array({"x0", "x1"}));
    CHECK(j["violation"]["out_neighborhood"] == json::array({"y0"}));

    const Digraph h3 = build_exception(ExceptionName::H3);
    const json jf = json::parse(factor_report_json(h3, cycle_factor(h3)));
    CHECK(jf["factor_exists"] == true);
    CHECK(jf["factor"] == "[x0 y1 x1 y2] [x2 y0]");
    CHECK(!jf.contains("violation"));
}

TEST_CASE("catalog report fields") {
    const Digraph h1 = build_exception(ExceptionName::H1);
    const json j = json::parse(catalog_report_json(ExceptionName::H1, h1));
    CHECK(j["kind"] == "catalog");
    CHECK(j["name"] == "h1");
    CHECK(j["a"] == 2);
    CHECK(j["bbd"] == "a 2\n10\n11\n\n11\n01\n");
}

TEST_CASE("verification report serialization") {
    const auto r = verify(TheoremId::Sharp, 2, Mode::exhaustive());
    const auto text = verification_report_json(r);
    const json j = json::parse(text);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "verification");
    CHECK(j["theorem"] == "sharp");
    CHECK(j["a"] == 2);
    CHECK(j["mode"] == json{{"kind", "exhaustive"}});
    CHECK(j["generated"] == 256);
    CHECK(j["strong"] == 35);
    CHECK(j["premise"] == 35);
    CHECK(j["checked"] == 35);
    CHECK(j["ok"] == true);
    CHECK(j["counterexamples"] == json::array());
    CHECK(j["exception_matches"]["h1"] == 4);
    CHECK(text.find("elapsed") == std::string::npos);
    CHECK(text.find("worker") == std::string::npos);

    const auto rm = verify(TheoremId::Main, 4, Mode::random(50, 3, {0.5, 0.9}));
    const json jm = json::parse(verification_report_json(rm));
    CHECK(jm["mode"]["kind"] == "random");
    CHECK(jm["mode"]["samples"] == 50);
    CHECK(jm["mode"]["seed"] == 3);
    CHECK(jm["mode"]["probs"] == json::array({0.5, 0.9}));
    CHECK(!jm.contains("exception_matches"));  // nothing matched outside sharp
}

TEST_CASE("exploration report serialization") {
    const auto r = explore_problem1(4, 2, 40, 11, GeneratorProfile::ArcSweep);
    const auto text = exploration_report_json(r);
    const json j = json::parse(text);
    CHECK(j["schema"] == 1);
    CHECK(j["kind"] == "exploration");
    CHECK(j["a"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["samples"] == 40);
    CHECK(j["seed"] == 11);
    CHECK(j["profile"] == "sweep");
    CHECK(j["generated"] == 40);
    CHECK(j["found"].is_array());
    CHECK(text.find("elapsed") == std::string::npos);
}

TEST_CASE("one full byte-for-byte golden report") {
    const Digraph h1 = build_exception(ExceptionName::H1);
    const std::string expected =
        "{\n"
        "  \"schema\": 1,\n"
        "  \"kind\": \"catalog\",\n"
        "  \"name\": \"h1\",\n"
        "  \"a\": 2,\n"
        "  \"bbd\": \"a 2\\n10\\n11\\n\\n11\\n01\\n\"\n"
        "}\n";
    CHECK(catalog_report_json(ExceptionName::H1, h1) == expected);
}
