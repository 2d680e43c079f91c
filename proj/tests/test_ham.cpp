#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bbd/catalog.hpp"
#include "bbd/ham.hpp"
#include "bbd/search.hpp"
#include "helpers.hpp"

using namespace bbd;

TEST_CASE("catalog entries are not hamiltonian, simple circulants are") {
    for (ExceptionName n : kAllExceptions) {
        const Digraph d = build_exception(n);
        CHECK(!is_hamiltonian(d).has_value());
        CHECK(!is_hamiltonian_bruteforce(d).has_value());
    }

    for (int a : {2, 3, 4}) {
        const auto c = is_hamiltonian(helpers::single_cycle(a));
        REQUIRE(c.has_value());
        CHECK(c->length() == 2 * a);
        CHECK(is_valid_cycle(helpers::single_cycle(a), *c));
    }

    const auto k = is_hamiltonian(Digraph::complete(3));
    REQUIRE(k.has_value());
    CHECK(render_cycle(*k) == "x0 y0 x1 y1 x2 y2");  // lexicographically smallest
}

TEST_CASE("longest cycles on the catalog") {
    const Digraph h1 = build_exception(ExceptionName::H1);
    const auto c1 = longest_cycle(h1);
    REQUIRE(c1.has_value());
    CHECK(c1->length() == 2);
    CHECK(render_cycle(*c1) == "x0 y0");

    const Digraph h2 = build_exception(ExceptionName::H2);
    const auto c2 = longest_cycle(h2);
    REQUIRE(c2.has_value());
    CHECK(c2->length() == 4);
    CHECK(render_cycle(*c2) == "x0 y0 x2 y1");
    CHECK(is_valid_cycle(h2, *c2));

    const Digraph h3 = build_exception(ExceptionName::H3);
    const auto c3 = longest_cycle(h3);
    REQUIRE(c3.has_value());
    CHECK(c3->length() == 4);
    CHECK(render_cycle(*c3) == "x0 y1 x1 y0");
    CHECK(is_valid_cycle(h3, *c3));
}

TEST_CASE("acyclic digraphs have no cycle at all") {
    Digraph d(3);  // all arcs one way
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d.add_arc(x(i), y(j));
    CHECK(!longest_cycle(d).has_value());
    CHECK(!is_hamiltonian(d).has_value());
    CHECK(!has_cycle_at_least(d, 2));
}

TEST_CASE("cycle length threshold") {
    const Digraph h1 = build_exception(ExceptionName::H1);
    CHECK(has_cycle_at_least(h1, 2));
    CHECK(!has_cycle_at_least(h1, 4));

    const Digraph h3 = build_exception(ExceptionName::H3);
    CHECK(has_cycle_at_least(h3, 4));
    CHECK(!has_cycle_at_least(h3, 6));

    CHECK_THROWS_AS(has_cycle_at_least(h3, 3), InputError);
    CHECK_THROWS_AS(has_cycle_at_least(h3, 0), InputError);
}

TEST_CASE("subset solver agrees with the permutation oracle") {
    for (std::uint64_t code = 0; code < 256; ++code) {
        const Digraph d = digraph_from_code(2, code);
        const auto fast = is_hamiltonian(d);
        const auto slow = is_hamiltonian_bruteforce(d);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(is_valid_cycle(d, *fast));
            CHECK(fast->vertices == slow->vertices);
        }
    }
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const Digraph d = random_digraph(4, 0.4 + 0.001 * static_cast<double>(seed), seed);
        const auto fast = is_hamiltonian(d);
        const auto slow = is_hamiltonian_bruteforce(d);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(is_valid_cycle(d, *fast));
            CHECK(fast->length() == 8);
        }
    }
}

TEST_CASE("longest cycle agrees with the exhaustive enumerator") {
    for (std::uint64_t code = 0; code < 256; ++code) {
        const Digraph d = digraph_from_code(2, code);
        const auto fast = longest_cycle(d);
        const auto slow = helpers::brute_longest_cycle(d);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->length() == slow->length());
            CHECK(fast->vertices == slow->vertices);  // same tie-break
        }
    }
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const Digraph d = random_digraph(3, 0.45, seed);
        const auto fast = longest_cycle(d);
        const auto slow = helpers::brute_longest_cycle(d);
        CHECK(fast.has_value() == slow.has_value());
        if (fast) {
            CHECK(fast->length() == slow->length());
            CHECK(fast->vertices == slow->vertices);
        }
    }
}

TEST_CASE("solver capacity guards") {
    CHECK_THROWS_AS(is_hamiltonian(Digraph(13)), CapacityError);
    CHECK_THROWS_AS(longest_cycle(Digraph(13)), CapacityError);
    CHECK_THROWS_AS(is_hamiltonian_bruteforce(Digraph(7)), CapacityError);
}

TEST_CASE("merge bound holds wherever a longest cycle exists") {
    // the bound is a consequence of maximality, so it can never fire
    for (std::uint64_t code = 0; code < 256; ++code) {
        const Digraph d = digraph_from_code(2, code);
        const auto r = check_merge_bound(d);
        CHECK(r.pass);
        CHECK(!r.violation.has_value());
        CHECK(r.cycle.has_value() == longest_cycle(d).has_value());
    }
    int strong_seen = 0;
    for (std::uint64_t seed = 0; strong_seen < 200 && seed < 4000; ++seed) {
        const Digraph d = random_digraph(4, 0.35, seed);
        if (!is_strong(d)) continue;
        ++strong_seen;
        CHECK(check_merge_bound(d).pass);
    }
    CHECK(strong_seen == 200);

    const auto r2 = check_merge_bound(build_exception(ExceptionName::H2));
    CHECK(r2.pass);
    REQUIRE(r2.cycle.has_value());
    CHECK(r2.cycle->length() == 4);

    CHECK(check_merge_bound(Digraph::complete(4)).pass);
}

TEST_CASE("bypass validation") {
    const Digraph h3 = build_exception(ExceptionName::H3);
    const Cycle c{{x(0), y(1), x(1), y(0)}};
    REQUIRE(is_valid_cycle(h3, c));

    // y1 -> x2 -> y0 leaves the cycle at y1 and rejoins two arcs later
    Bypass good{{y(1), x(2), y(0)}, 2};
    CHECK(is_valid_bypass(h3, c, good));

    Bypass wrong_gap = good;
    wrong_gap.gap = 1;
    CHECK(!is_valid_bypass(h3, c, wrong_gap));

    Bypass interior_on_cycle{{y(1), x(1), y(0)}, 2};  // x1 lies on the cycle
    CHECK(!is_valid_bypass(h3, c, interior_on_cycle));

    Bypass closed{{y(1), x(2), y(1)}, 0};  // endpoints must differ
    CHECK(!is_valid_bypass(h3, c, closed));

    Bypass too_short{{y(1), y(0)}, 2};
    CHECK(!is_valid_bypass(h3, c, too_short));

    Bypass missing_arc{{y(0), x(2), y(2), x(1)}, 3};  // x2 -> y2 is not an arc
    CHECK(!is_valid_bypass(h3, c, missing_arc));
}

TEST_CASE("cycle validation rejects malformed sequences") {
    const Digraph c2 = helpers::single_cycle(2);
    CHECK(is_valid_cycle(c2, Cycle{{x(0), y(0), x(1), y(1)}}));
    CHECK(!is_valid_cycle(c2, Cycle{{x(0), y(1), x(1), y(0)}}));  // arcs missing
    CHECK(!is_valid_cycle(c2, Cycle{{x(0), x(1)}}));              // sides must alternate
    CHECK(!is_valid_cycle(c2, Cycle{{x(0)}}));                    // too short
    CHECK(!is_valid_cycle(c2, Cycle{{x(0), y(0), x(0), y(0)}}));  // repeats
    CHECK(!is_valid_cycle(c2, Cycle{{x(0), y(0), x(2), y(1)}}));  // out of range
}
