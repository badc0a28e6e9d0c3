#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <pushhom/families.hh>
#include <pushhom/isomorphism.hh>
#include <pushhom/sparse_coloring.hh>

using namespace pushhom;

TEST_CASE("path patterns")
{
    auto p = PathPattern::parse("++-");
    CHECK(p.length() == 3);
    CHECK(p.forward_count() == 2);
    CHECK(p.to_string() == "++-");
    CHECK(PathPattern::from_bits(0b011, 3) == p);
    CHECK_THROWS_AS(PathPattern::parse("+x"), FamilyError);
    auto g = oriented_path(p);
    CHECK(g.has_arc(0, 1));
    CHECK(g.has_arc(3, 2));
}

TEST_CASE("small named graphs")
{
    CHECK(c3().size() == 3);
    auto u = uc4();
    CHECK(u.size() == 4);
    CHECK(u.has_arc(0, 3));
    auto p = paley_plus();
    CHECK(p.order() == 4);
    CHECK(p.size() == 6);
    CHECK(p.out_degree(3) == 3);
    CHECK(validate_paley_plus(p).all_pass());
    CHECK(! validate_paley_plus(OrientedGraph{4, {{0, 1}, {1, 2}, {0, 2}, {3, 0}, {3, 1}, {3, 2}}}).all_pass());
}

TEST_CASE("zielonka orders and splits")
{
    for (int k = 2; k <= 5; ++k) {
        auto z = zielonka(k);
        CHECK(z.order() == k * (1 << (k - 1)));
        CHECK(zielonka_half(k).order() == k * (1 << (k - 2)));
        CHECK(is_valid_split(z, zielonka_complement_split(k)));
    }
    CHECK(zielonka_half(3).order() == 6);
    // tournament-free check: star vertices with the same star are non-adjacent
    auto z = zielonka(3);
    CHECK(! z.adjacent(0, 1));
    CHECK_THROWS_AS(zielonka(1), FamilyError);
}

TEST_CASE("zielonka arc rule on an example")
{
    // k = 2: (*, a) and (b, *); x = (*,0) star 0 bits 0, y = (0,*) star 1
    auto z = zielonka(2);
    for (Vertex x = 0; x < z.order(); ++x)
        for (Vertex y = 0; y < z.order(); ++y) {
            auto a = zielonka_vertex(2, x), b = zielonka_vertex(2, y);
            if (a.star == b.star)
                continue;
            int i = a.star, j = b.star;
            bool xj = a.bits >> j & 1, yi = b.bits >> i & 1;
            bool expect = (xj == yi && i < j) || (xj != yi && i > j);
            CHECK(z.has_arc(x, y) == expect);
        }
}

TEST_CASE("b0 and y gadget validate")
{
    CHECK(b0().order() == 8);
    CHECK(b0().size() == 17);
    CHECK(validate_b0(b0()).all_pass());
    CHECK(y_gadget().order() == 11);
    CHECK(validate_y_gadget(y_gadget()).all_pass());
}

TEST_CASE("girth 8 witness")
{
    auto w = girth8_witness();
    CHECK(w.order() == 64);
    CHECK(underlying_girth(w) == 8);
    CHECK(oracle::girth(w) == 8);
}

TEST_CASE("random outerplanar respects girth and is deterministic")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_outerplanar(40, 5, seed);
        CHECK(g.order() <= 60);
        auto girth = underlying_girth(g);
        CHECK((! girth || *girth >= 5));
        CHECK(g == random_outerplanar(40, 5, seed));
        CHECK(max_average_degree(g) < Rational{4});
    }
}

TEST_CASE("random sparse has small mad")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_sparse(80, seed);
        CHECK(max_average_degree(g) < Rational{8, 3});
    }
}

TEST_CASE("generate by name")
{
    CHECK(generate_family("cycle", {5}, 0) == directed_cycle(5));
    CHECK(generate_family("zielonka", {3}, 0).order() == 12);
    CHECK_THROWS_AS(generate_family("no-such", {}, 0), FamilyError);
    CHECK(! family_names().empty());
}
