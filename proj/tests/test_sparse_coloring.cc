#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hh"

#include <pushhom/families.hh>
#include <pushhom/sparse_coloring.hh>

using namespace pushhom;

namespace
{
    auto emit_arcs_key(const OrientedGraph & g) -> std::string
    {
        std::string key;
        for (auto & a : g.arcs())
            key += std::to_string(a.from) + ">" + std::to_string(a.to) + ";";
        return key;
    }
}

TEST_CASE("two-step neighbourhood identities on P3+")
{
    auto p = paley_plus();
    for (Vertex v = 0; v < 4; ++v) {
        auto t = two_step_neighbourhoods(p, v);
        std::set<Vertex> a(t.out_out.begin(), t.out_out.end()), b(t.out_in.begin(), t.out_in.end());
        a.insert(t.in_in.begin(), t.in_in.end());
        b.insert(t.in_out.begin(), t.in_out.end());
        a.insert(v);
        CHECK(a.size() == 4);
        CHECK(t.out_out.end() == std::find(t.out_out.begin(), t.out_out.end(), v));
        CHECK(b.size() == 4);
    }
}

TEST_CASE("path extension agrees with exhaustive search")
{
    for (int m = 1; m <= 6; ++m)
        for (unsigned bits = 0; bits < (1u << m); ++bits) {
            auto p = PathPattern::from_bits(bits, m);
            for (Vertex a = 0; a < 3; ++a)
                for (Vertex b = 0; b < 3; ++b) {
                    auto e = path_extend_to_c3(p, a, b);
                    CHECK(e.has_value() == oracle::path_feasible(p, a, b));
                    if (e) {
                        CHECK(e->mapping(0) == a);
                        CHECK(e->mapping(m) == b);
                        CHECK(! e->interior_pushes.contains(0));
                        CHECK(! e->interior_pushes.contains(m));
                    }
                }
        }
}

TEST_CASE("the stated path examples")
{
    auto p = PathPattern::parse("+++-");
    for (Vertex a = 0; a < 3; ++a)
        CHECK(! path_extend_to_c3(p, a, a));
    for (unsigned bits = 0; bits < 16; ++bits)
        for (Vertex a = 0; a < 3; ++a)
            for (Vertex b = 0; b < 3; ++b)
                if (a != b)
                    CHECK(path_extend_to_c3(PathPattern::from_bits(bits, 4), a, b));
}

TEST_CASE("configuration finder order")
{
    auto c = find_reducible_config(oriented_path(PathPattern::parse("++")));
    REQUIRE(c);
    CHECK(c->kind == ConfigKind::degree_at_most_one);
    CHECK(c->removed == std::vector<Vertex>{0});
    CHECK(c->boundary == std::vector<Vertex>{1});

    auto d = find_reducible_config(directed_cycle(5));
    REQUIRE(d);
    CHECK(d->kind == ConfigKind::adjacent_degree_two_pair);
    CHECK(d->removed == std::vector<Vertex>{0, 1});
    CHECK(d->boundary == std::vector<Vertex>{4, 2});

    CHECK(! find_reducible_config(paley_plus()));
}

TEST_CASE("discharging")
{
    auto r = discharge_audit(paley_plus());
    CHECK(r.minimum == Rational{3});
    CHECK(r.minimum_at_least_eight_thirds);
    // theta graph with long paths: degree-3 vertices give away 1
    auto cyc = discharge_audit(directed_cycle(6));
    CHECK(cyc.minimum == Rational{2});
    CHECK(! cyc.minimum_at_least_eight_thirds);
}

TEST_CASE("configuration-free subgraphs of random graphs have charge at least 8/3")
{
    std::mt19937_64 rng{53};
    for (int i = 0; i < 200; ++i) {
        auto g = oracle::random_graph(12, 0.3, rng);
        if (! find_reducible_config(g) && g.order() > 0 && g.size() > 0) {
            auto r = discharge_audit(g);
            CHECK(r.minimum_at_least_eight_thirds);
            CHECK(max_average_degree(g) >= Rational{8, 3});
        }
    }
}

TEST_CASE("extension tables are complete")
{
    auto t = build_extension_tables();
    CHECK(t.pair.size() == 128);
    CHECK(t.degree_three.size() == 2048);
    CHECK(t.complete());
    CHECK(t.checksum() == extension_tables().checksum());
}

TEST_CASE("P3+ colouring of sparse graphs verifies and replays")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = random_sparse(20 + int(seed) * 7, seed);
        auto cert = push_color_to_paley(g);
        CHECK(verify_certificate(g, cert));
        CHECK(replay_trace(g, cert.trace));
    }
    CHECK_THROWS_AS(push_color_to_paley(paley_plus()), ColoringError);
}

TEST_CASE("replay rejects a tampered trace")
{
    auto g = directed_cycle(7);
    auto cert = push_color_to_paley(g);
    auto trace = cert.trace;
    REQUIRE(! trace.empty());
    trace.pop_back();
    CHECK(! replay_trace(g, trace));
    trace = cert.trace;
    std::swap(trace.front(), trace.back());
    CHECK(! replay_trace(g, trace));
}

TEST_CASE("outerplanar girth 5 colouring into C3")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = random_outerplanar(50, 5, seed);
        auto cert = color_outerplanar_g5(g);
        CHECK(verify_certificate(g, cert));
        CHECK(cert.target.order() == 3);
    }
}

TEST_CASE("interior pushes reach exactly the patterns of equal forward parity")
{
    for (int m = 2; m <= 6; ++m)
        for (unsigned bits = 0; bits < (1u << m); ++bits) {
            auto path = oriented_path(PathPattern::from_bits(bits, m));
            std::set<std::string> reached;
            for (unsigned s = 0; s < (1u << (m - 1)); ++s)
                reached.insert(emit_arcs_key(push(path, PushVector::from_bits(static_cast<unsigned long long>(s) << 1, m + 1))));
            std::set<std::string> same_parity;
            for (unsigned other = 0; other < (1u << m); ++other)
                if (std::popcount(other) % 2 == std::popcount(bits) % 2)
                    same_parity.insert(emit_arcs_key(oriented_path(PathPattern::from_bits(other, m))));
            CHECK(reached == same_parity);
        }
}

TEST_CASE("the girth 8 witness goes to P3+ but not to C3")
{
    auto w = girth8_witness();
    CHECK(max_average_degree(w) < Rational{8, 3});
    auto cert = push_color_to_paley(w);
    CHECK(verify_certificate(w, cert));
    CHECK(find_push_hom(w, c3()).verdict == SearchVerdict::absent);
}

TEST_CASE("subdivided cubic graphs use the degree three reduction")
{
    auto star = OrientedGraph{7, {{0, 1}, {1, 2}, {3, 0}, {3, 4}, {0, 5}, {6, 5}}};
    // centre 0 has three degree-2 neighbours 1, 3, 5 but leaves come first
    auto c = find_reducible_config(star);
    REQUIRE(c);
    CHECK(c->kind == ConfigKind::degree_at_most_one);

    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        auto g = random_subdivided_cubic(6 + 2 * int(seed), seed);
        CHECK(max_average_degree(g) == Rational{12, 5});
        auto first = find_reducible_config(g);
        REQUIRE(first);
        CHECK(first->kind == ConfigKind::degree_three_with_two_degree_two_neighbours);
        auto cert = push_color_to_paley(g);
        CHECK(verify_certificate(g, cert));
        CHECK(replay_trace(g, cert.trace));
    }
}
