#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <pushhom/families.hh>
#include <pushhom/hom.hh>
#include <pushhom/isomorphism.hh>

#include <set>

using namespace pushhom;

TEST_CASE("find_hom agrees with the map enumeration oracle")
{
    std::mt19937_64 rng{41};
    for (int i = 0; i < 400; ++i) {
        auto g = oracle::random_graph(2 + i % 5, 0.5, rng);
        auto h = oracle::random_graph(1 + i % 4, 0.8, rng);
        auto r = find_hom(g, h);
        REQUIRE(r.verdict != SearchVerdict::budget_exhausted);
        CHECK((r.verdict == SearchVerdict::found) == oracle::hom_exists(g, h));
        if (r.mapping)
            CHECK(is_homomorphism(g, h, *r.mapping));
    }
}

TEST_CASE("seeded search is deterministic and still correct")
{
    SearchBudget b;
    b.seed = 99;
    auto g = directed_cycle(9);
    auto a = find_hom(g, c3(), b), c = find_hom(g, c3(), b);
    REQUIRE(a.mapping);
    CHECK(a.mapping == c.mapping);
    CHECK(a.nodes == c.nodes);
}

TEST_CASE("budget exhaustion is its own verdict")
{
    SearchBudget tiny;
    tiny.node_limit = 1;
    auto r = find_hom(girth8_witness(), anti_twinned(c3()), tiny);
    CHECK(r.verdict == SearchVerdict::budget_exhausted);
    CHECK(! r.mapping);
    CHECK(to_string(r.verdict) == "exhausted-budget");
}

TEST_CASE("push homomorphism via the double agrees with brute force")
{
    std::mt19937_64 rng{43};
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(2 + i % 5, 0.5, rng);
        auto h = oracle::random_graph(1 + i % 3, 1.0, rng);
        auto fast = find_push_hom(g, h), slow = brute_force_push_hom(g, h);
        CHECK(fast.verdict == slow.verdict);
        CHECK((fast.verdict == SearchVerdict::found) == oracle::push_hom_exists(g, h));
        if (fast.witness)
            CHECK(is_push_hom_witness(g, h, *fast.witness));
    }
}

TEST_CASE("transfer keeps a homomorphism after pushing the target")
{
    std::mt19937_64 rng{47};
    int checked = 0;
    for (int i = 0; checked < 100; ++i) {
        auto g = oracle::random_graph(6, 0.4, rng);
        auto h = oracle::random_graph(4, 0.9, rng);
        auto r = find_hom(g, h);
        if (! r.mapping)
            continue;
        ++checked;
        auto ph = PushVector::from_bits(rng() & 15, 4);
        auto pg = transfer(g, h, *r.mapping, ph);
        CHECK(is_homomorphism(push(g, pg), push(h, ph), *r.mapping));
    }
}

TEST_CASE("tournament counts")
{
    std::vector<std::size_t> expected{1, 1, 1, 2, 4, 12, 56, 456};
    for (int k = 0; k <= 7; ++k)
        CHECK(enumerate_tournaments(k).size() == expected[k]);
    for (int k = 1; k <= 5; ++k) {
        std::set<std::string> classes;
        for (auto & t : oracle::all_orientations_of_complete(k))
            classes.insert(oracle::canonical(t));
        CHECK(classes.size() == expected[k]);
    }
}

TEST_CASE("chromatic numbers of small graphs")
{
    auto c5 = oriented_chromatic_number(directed_cycle(5), 6);
    CHECK(c5.value == 5);
    CHECK(oriented_chromatic_number(c3(), 4).value == 3);
    CHECK(push_chromatic_number(directed_cycle(9), 5).value == 3);
    CHECK(push_chromatic_number(uc4(), 5).value == 4);
    auto two = push_chromatic_number(directed_cycle(4), 5);
    CHECK(two.value == 2);
    REQUIRE(two.witness);
    CHECK(is_push_hom_witness(directed_cycle(4), *two.target, *two.witness));
    CHECK(push_chromatic_number(OrientedGraph{3, {}}, 3).value == 1);
    CHECK(push_chromatic_number(OrientedGraph{0, {}}, 3).value == 0);
}

TEST_CASE("max_k too small leaves the value open")
{
    auto r = oriented_chromatic_number(directed_cycle(5), 4);
    CHECK(! r.value);
    CHECK(! r.budget_exhausted);
}
