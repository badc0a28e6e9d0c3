#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <pushhom/families.hh>
#include <pushhom/isomorphism.hh>

using namespace pushhom;

TEST_CASE("canonical code matches permutation oracle")
{
    std::mt19937_64 rng{3};
    for (int i = 0; i < 300; ++i) {
        int n = 1 + i % 7;
        auto g = oracle::random_graph(n, 0.5, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        CHECK(canonical_code(g) == canonical_code(h));
        auto other = oracle::random_graph(n, 0.5, rng);
        CHECK((canonical_code(g) == canonical_code(other)) == oracle::isomorphic(g, other));
    }
}

TEST_CASE("canonical labelling produces the code")
{
    auto g = b0();
    auto perm = canonical_labelling(g);
    auto again = relabel(relabel(g, perm), canonical_labelling(relabel(g, perm)));
    CHECK(canonical_code(again) == canonical_code(g));
}

TEST_CASE("find_isomorphism certificates verify")
{
    std::mt19937_64 rng{5};
    for (int i = 0; i < 200; ++i) {
        int n = 2 + i % 9;
        auto g = oracle::random_graph(n, 0.4, rng);
        std::vector<Vertex> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto h = relabel(g, perm);
        auto f = find_isomorphism(g, h);
        REQUIRE(f);
        CHECK(is_isomorphism(g, h, f->mapping));
    }
    CHECK(! find_isomorphism(directed_cycle(4), uc4()));
}

TEST_CASE("symmetric graphs do not blow up")
{
    CHECK(canonical_code(OrientedGraph{16, {}}).size() == 1 + 120);
    CHECK(canonical_code(directed_cycle(16)) == canonical_code(relabel(directed_cycle(16), std::vector<Vertex>{5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 0, 1, 2, 3, 4})));
    CHECK_THROWS_AS(canonical_code(OrientedGraph{17, {}}), GraphError);
}

TEST_CASE("refinement separates sources from sinks")
{
    auto c = refine_colours(oriented_path(PathPattern::parse("+")));
    CHECK(c[0] != c[1]);
}
