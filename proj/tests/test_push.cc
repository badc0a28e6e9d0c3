#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <pushhom/families.hh>
#include <pushhom/isomorphism.hh>
#include <pushhom/push.hh>

using namespace pushhom;

TEST_CASE("push vector normalises")
{
    PushVector s{{3, 1, 3}};
    CHECK(s.vertices() == std::vector<Vertex>{1, 3});
    CHECK(s.contains(3));
    CHECK_THROWS_AS(s.mask(3), GraphError);
    CHECK(PushVector::from_bits(0b101, 3).vertices() == std::vector<Vertex>{0, 2});
}

TEST_CASE("pushing a vertex reverses its arcs, and is an involution")
{
    auto g = uc4();
    auto p = push(g, PushVector{{0}});
    CHECK(p.has_arc(1, 0));
    CHECK(p.has_arc(3, 0));
    CHECK(p.has_arc(1, 2));
    CHECK(push(p, PushVector{{0}}) == g);
    // pushing everything changes nothing
    CHECK(push(g, PushVector{{0, 1, 2, 3}}) == g);
}

TEST_CASE("anti-twinned graph has four arcs per arc")
{
    auto r = anti_twinned(c3());
    CHECK(r.order() == 6);
    CHECK(r.size() == 12);
    CHECK(r.has_arc(0, 1));
    CHECK(r.has_arc(3, 4));
    CHECK(r.has_arc(1, 3));
    CHECK(r.has_arc(4, 0));
    CHECK(! r.adjacent(0, 3));
}

TEST_CASE("push equivalence agrees with orbit oracle")
{
    std::mt19937_64 rng{17};
    for (int i = 0; i < 300; ++i) {
        int n = 1 + i % 6;
        auto g = oracle::random_graph(n, 0.5, rng);
        auto h = (i % 3 == 0) ? oracle::random_graph(n, 0.5, rng)
                              : relabel(push(g, PushVector::from_bits(rng() & ((1ull << n) - 1), n)), [&] {
                                    std::vector<Vertex> perm(n);
                                    std::iota(perm.begin(), perm.end(), 0);
                                    std::shuffle(perm.begin(), perm.end(), rng);
                                    return perm;
                                }());
        auto cert = push_equivalent(g, h);
        CHECK(cert.has_value() == oracle::push_equivalent(g, h));
        if (cert)
            CHECK(is_isomorphism(push(g, cert->push_vector), h, cert->isomorphism.mapping));
    }
    CHECK(! push_equivalent(directed_cycle(4), uc4()));
}

TEST_CASE("repair turns any isomorphism of doubles into a twin-respecting one")
{
    std::mt19937_64 rng{23};
    for (int i = 0; i < 100; ++i) {
        int n = 2 + i % 5;
        auto g = oracle::random_graph(n, 0.6, rng);
        auto rg = anti_twinned(g);
        std::vector<Vertex> perm(2 * n);
        std::iota(perm.begin(), perm.end(), 0);
        // find some automorphism of R(g) by scrambling and looking it up
        std::shuffle(perm.begin(), perm.end(), rng);
        auto scrambled = relabel(rg, perm);
        auto back = find_isomorphism(rg, scrambled);
        REQUIRE(back);
        auto f = VertexMapping{std::vector<Vertex>(2 * n)};
        auto inv = inverse(VertexMapping{perm}, 2 * n);
        for (Vertex v = 0; v < 2 * n; ++v)
            f.image[v] = inv(back->mapping(v));
        REQUIRE(is_isomorphism(rg, rg, f));
        auto repaired = repair_isomorphism(g, g, IsoCertificate{f});
        CHECK(respects_anti_twins(repaired.isomorphism.mapping, n));
        CHECK(is_isomorphism(rg, rg, repaired.isomorphism.mapping));
    }
    CHECK_THROWS_AS(repair_isomorphism(c3(), c3(), IsoCertificate{identity_mapping(5)}), GraphError);
}

TEST_CASE("splits")
{
    auto t = uc4();
    auto r = anti_twinned(t);
    auto cert = find_split(r);
    REQUIRE(cert);
    CHECK(is_valid_split(r, *cert));
    CHECK(find_isomorphism(anti_twinned(split_graph(r, *cert)), r));
    CHECK(is_valid_split(r, anti_twin_split(4)));
    CHECK(! find_split(c3()));
    CHECK(find_split(OrientedGraph{0, {}}));
    CHECK(find_split(OrientedGraph{4, {}}));
    CHECK(! find_split(OrientedGraph{3, {}}));
    // the directed 4-cycle is the double of a single arc
    auto c4 = find_split(directed_cycle(4));
    REQUIRE(c4);
    CHECK(split_graph(directed_cycle(4), *c4).size() == 1);
}

TEST_CASE("split detection agrees with doubling oracle on six vertices")
{
    std::set<std::string> doubles;
    for (int n = 0; n <= 3; ++n)
        for (auto & t : enumerate_oriented_graphs(n))
            doubles.insert(oracle::canonical(anti_twinned(t)));
    for (int n : {2, 4, 6})
        for (auto & g : enumerate_oriented_graphs(n))
            if (g.order() <= 6)
                CHECK(find_split(g).has_value() == doubles.contains(oracle::canonical(g)));
}

TEST_CASE("agree and disagree sets are push invariant")
{
    std::mt19937_64 rng{31};
    for (int i = 0; i < 100; ++i) {
        auto g = oracle::random_graph(7, 0.6, rng);
        auto p = push(g, PushVector::from_bits(rng() & 127, 7));
        for (Vertex x = 0; x < 7; ++x)
            for (Vertex y = x + 1; y < 7; ++y) {
                auto a = agree_disagree(g, x, y), b = agree_disagree(p, x, y);
                CHECK(a.max_count == b.max_count);
                CHECK(a.min_count == b.min_count);
                CHECK(a.agree.size() + a.disagree.size() == b.agree.size() + b.disagree.size());
            }
    }
}

TEST_CASE("uc4 is push invariant and its opposite vertices cannot be identified")
{
    CHECK(push_orbit(uc4()).size() == 1);
    // parity of backward arcs is kept: directed, ++--, +-+-
    CHECK(push_orbit(directed_cycle(4)).size() == 3);
    CHECK(in_common_uc4(uc4(), 0, 2));
    CHECK(cannot_identify(uc4(), 1, 3));
    CHECK(! in_common_uc4(directed_cycle(4), 0, 2));
    CHECK_THROWS_AS(in_common_uc4(uc4(), 0, 1), GraphError);
}

TEST_CASE("cannot_identify is sound against exhaustive identification")
{
    std::mt19937_64 rng{37};
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_graph(6, 0.7, rng);
        for (Vertex x = 0; x < 6; ++x)
            for (Vertex y = x + 1; y < 6; ++y) {
                if (! cannot_identify(g, x, y))
                    continue;
                // no presentation lets x and y share an image in any target
                bool merged = false;
                for (unsigned long long s = 0; s < 64 && ! merged; ++s) {
                    try {
                        identify_vertices(push(g, PushVector::from_bits(s, 6)), {{x, y}});
                        merged = true;
                    }
                    catch (const GraphError &) {
                    }
                }
                CHECK(! merged);
            }
    }
}
