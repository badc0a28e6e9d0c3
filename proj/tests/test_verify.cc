#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pushhom/push.hh>
#include <pushhom/verify.hh>

#include <algorithm>

using namespace pushhom;

TEST_CASE("quick suites pass and sort their checks")
{
    for (auto name : {"tournament3", "zielonka", "gadgets-p3", "prop-transfer"}) {
        auto r = run_suite(name);
        CHECK(r.status() == CheckStatus::pass);
        CHECK(std::is_sorted(r.checks.begin(), r.checks.end(), [](auto & a, auto & b) { return a.id < b.id; }));
        auto j = r.to_json();
        CHECK(j["schemaVersion"] == 1);
        CHECK(j["suite"] == name);
    }
}

TEST_CASE("small exhaustive runs")
{
    VerifyOptions o;
    o.max_n = 4;
    CHECK(run_suite("sandwich", o).status() == CheckStatus::pass);
    CHECK(run_suite("theorem-antitwin", o).status() == CheckStatus::pass);
}

TEST_CASE("tiny budgets become exhausted, not failures")
{
    VerifyOptions o;
    o.budget.node_limit = 1;
    CHECK(run_suite("girth8-lower", o).status() == CheckStatus::budget_exhausted);
}

TEST_CASE("unknown suite")
{
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
}

TEST_CASE("constrained tournament search")
{
    CHECK(! constrained_tournament_search().tournament);

    // loosen the agree bounds and survivors appear; they must meet the bounds
    TournamentBounds loose;
    loose.agree_min = 0;
    loose.agree_max = 6;
    loose.disagree_min = 0;
    loose.disagree_max = 6;
    auto r = constrained_tournament_search(loose);
    REQUIRE(r.tournament);
    auto & t = *r.tournament;
    CHECK(t.order() == 9);
    CHECK(t.size() == 36);
    for (Vertex v = 0; v < 8; ++v) {
        CHECK(t.has_arc(8, v));
        CHECK(t.out_degree(v) >= 3);
        CHECK(t.out_degree(v) <= 4);
    }

    // bounds that hold for some 8-vertex tournament are found again
    TournamentBounds wide;
    wide.agree_min = 1;
    wide.agree_max = 5;
    wide.disagree_min = 1;
    wide.disagree_max = 5;
    auto w = constrained_tournament_search(wide);
    REQUIRE(w.tournament);
    for (Vertex x = 0; x < 8; ++x)
        for (Vertex y = x + 1; y < 8; ++y) {
            auto s = agree_disagree(*w.tournament, x, y);
            int agree = int(s.agree.size()) - 1;    // drop the apex
            CHECK(agree >= 1);
            CHECK(agree <= 5);
            CHECK(int(s.disagree.size()) >= 1);
        }
}
