#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <pushhom/families.hh>
#include <pushhom/graph.hh>

using namespace pushhom;

TEST_CASE("construction rejects loops, opposite arcs and bad endpoints")
{
    CHECK_THROWS_AS((OrientedGraph{3, {{0, 0}}}), GraphError);
    CHECK_THROWS_AS((OrientedGraph{3, {{0, 1}, {1, 0}}}), GraphError);
    CHECK_THROWS_AS((OrientedGraph{3, {{0, 3}}}), GraphError);
    CHECK_THROWS_AS((OrientedGraph{-1, {}}), GraphError);
}

TEST_CASE("duplicates collapse and arcs sort")
{
    OrientedGraph g{3, {{2, 0}, {0, 1}, {2, 0}}};
    CHECK(g.size() == 2);
    CHECK(g.arcs() == std::vector<Arc>{{0, 1}, {2, 0}});
    CHECK(g.out_degree(2) == 1);
    CHECK(g.in_degree(0) == 1);
    CHECK(g.degree(0) == 2);
    CHECK(g.neighbours(0) == std::vector<Vertex>{1, 2});
    CHECK(g.adjacent(1, 0));
    CHECK(! g.has_arc(1, 0));
}

TEST_CASE("homomorphism and isomorphism checks")
{
    auto c = c3();
    CHECK(is_homomorphism(directed_cycle(6), c, VertexMapping{{0, 1, 2, 0, 1, 2}}));
    CHECK(! is_homomorphism(directed_cycle(5), c, VertexMapping{{0, 1, 2, 0, 1}}));
    CHECK(! is_homomorphism(c, c, VertexMapping{{0, 1}}));
    CHECK(is_isomorphism(c, c, VertexMapping{{1, 2, 0}}));
    CHECK(! is_isomorphism(c, c, VertexMapping{{0, 0, 1}}));
    auto f = VertexMapping{{2, 0, 1}};
    CHECK(inverse(f, 3).image == std::vector<Vertex>{1, 2, 0});
}

TEST_CASE("relabel and induced subgraph")
{
    auto g = uc4();
    std::vector<Vertex> perm{3, 2, 1, 0};
    auto r = relabel(g, perm);
    CHECK(is_isomorphism(g, r, VertexMapping{perm}));
    std::vector<Vertex> keep{1, 2, 3};
    auto sub = induced_subgraph(g, keep);
    CHECK(sub.order() == 3);
    CHECK(sub.size() == 2);
}

TEST_CASE("identify vertices")
{
    auto g = oriented_path(PathPattern::parse("+-"));
    auto q = identify_vertices(g, {{0, 2}});
    CHECK(q.order() == 2);
    CHECK(q.size() == 1);
    CHECK_THROWS_AS(identify_vertices(g, {{0, 1}}), GraphError);
    CHECK_THROWS_AS(identify_vertices(oriented_path(PathPattern::parse("++")), {{0, 2}}), GraphError);
    CHECK_THROWS_AS(identify_vertices(directed_cycle(4), {{0, 2}}), GraphError);
}

TEST_CASE("girth agrees with edge-deletion oracle")
{
    CHECK(underlying_girth(directed_cycle(7)) == 7);
    CHECK(! underlying_girth(oriented_path(PathPattern::parse("+-+"))).has_value());
    std::mt19937_64 rng{7};
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(9, 0.25, rng);
        CHECK(underlying_girth(g) == oracle::girth(g));
    }
}

TEST_CASE("mad agrees with subset oracle")
{
    CHECK(max_average_degree(OrientedGraph{3, {}}) == Rational{0});
    CHECK(max_average_degree(c3()) == Rational{2});
    CHECK(max_average_degree(paley_plus()) == Rational{3});
    std::mt19937_64 rng{11};
    for (int i = 0; i < 150; ++i) {
        auto g = oracle::random_graph(10, 0.1 + 0.05 * (i % 8), rng);
        CHECK(max_average_degree(g) == oracle::mad(g));
    }
}

TEST_CASE("oriented graph counts")
{
    std::vector<std::size_t> expected{1, 1, 2, 7, 42, 582};
    for (int n = 0; n <= 5; ++n)
        CHECK(enumerate_oriented_graphs(n).size() == expected[n]);
}

TEST_CASE("disjoint union")
{
    std::vector<OrientedGraph> parts{c3(), uc4()};
    auto u = disjoint_union(parts);
    CHECK(u.order() == 7);
    CHECK(u.size() == 7);
    CHECK(u.has_arc(3, 4));
}
