/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/verify.hh>
#include <pushhom/families.hh>
#include <pushhom/io.hh>
#include <pushhom/isomorphism.hh>
#include <pushhom/push.hh>
#include <pushhom/sparse_coloring.hh>

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

using nlohmann::json;
using std::string;
using std::vector;

namespace pushhom
{
    auto to_string(CheckStatus s) -> string
    {
        switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::budget_exhausted: return "exhausted-budget";
        }
        return "unknown";
    }

    auto VerdictReport::status() const -> CheckStatus
    {
        auto any = [&](CheckStatus s) { return std::any_of(checks.begin(), checks.end(), [&](auto & c) { return c.status == s; }); };
        if (any(CheckStatus::fail))
            return CheckStatus::fail;
        if (any(CheckStatus::budget_exhausted))
            return CheckStatus::budget_exhausted;
        return CheckStatus::pass;
    }

    auto VerdictReport::to_json() const -> json
    {
        json result{{"schemaVersion", schema_version}, {"suite", suite}, {"status", to_string(status())}, {"summary", summary}};
        result["checks"] = json::array();
        for (auto & c : checks)
            result["checks"].push_back({{"id", c.id}, {"status", to_string(c.status)}, {"detail", c.detail}, {"wallTime", c.wall_time}});
        return result;
    }

    namespace
    {
        // what a check body hands back
        struct Outcome
        {
            CheckStatus status;
            json detail;
        };

        auto verdict(bool ok, json detail = json::object()) -> Outcome
        {
            return {ok ? CheckStatus::pass : CheckStatus::fail, std::move(detail)};
        }

        auto counterexample(const OrientedGraph & g, json params = json::object()) -> json
        {
            return {{"graph", emit_graph(g)}, {"params", std::move(params)}};
        }

        class Suite
        {
        private:
            VerdictReport _report;

        public:
            explicit Suite(string name) { _report.suite = std::move(name); }

            auto check(const string & id, const std::function<Outcome ()> & body) -> void
            {
                auto start = std::chrono::steady_clock::now();
                Outcome outcome;
                try {
                    outcome = body();
                }
                catch (const std::exception & e) {
                    outcome = {CheckStatus::fail, {{"exception", e.what()}}};
                }
                double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                _report.checks.push_back({id, outcome.status, std::move(outcome.detail), elapsed});
            }

            auto summary() -> json & { return _report.summary; }

            auto finish() -> VerdictReport
            {
                std::stable_sort(_report.checks.begin(), _report.checks.end(), [](auto & a, auto & b) { return a.id < b.id; });
                if (_report.summary.is_null())
                    _report.summary = json::object();
                _report.summary["checks"] = _report.checks.size();
                _report.summary["status"] = to_string(_report.status());
                return std::move(_report);
            }
        };

        auto all_graphs_up_to(int max_n) -> vector<OrientedGraph>
        {
            vector<OrientedGraph> result;
            for (int n = 0; n <= max_n; ++n)
                for (auto & g : enumerate_oriented_graphs(n))
                    result.push_back(g);
            return result;
        }

        auto orbit_codes(const OrientedGraph & g) -> std::set<string>
        {
            std::set<string> codes;
            for (unsigned long long s = 0; s < (1ull << g.order()); ++s)
                codes.insert(canonical_code(push(g, PushVector::from_bits(s, g.order()))));
            return codes;
        }

        auto antitwin_suite(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"theorem-antitwin"};
            auto graphs = all_graphs_up_to(o.max_n);

            suite.check("antitwin/exhaustive", [&]() -> Outcome {
                vector<string> code, double_code;
                vector<std::set<string>> orbit;
                for (auto & g : graphs) {
                    code.push_back(canonical_code(g));
                    double_code.push_back(canonical_code(anti_twinned(g)));
                    orbit.push_back(orbit_codes(g));
                }

                long pairs = 0, equivalent = 0;
                for (std::size_t i = 0; i < graphs.size(); ++i)
                    for (std::size_t j = i; j < graphs.size(); ++j) {
                        ++pairs;
                        bool by_orbit = orbit[i].contains(code[j]);
                        bool by_double = double_code[i] == double_code[j];
                        auto cert = push_equivalent(graphs[i], graphs[j]);
                        bool cert_ok = ! cert || is_isomorphism(push(graphs[i], cert->push_vector), graphs[j], cert->isomorphism.mapping);
                        if (by_orbit != by_double || by_orbit != cert.has_value() || ! cert_ok)
                            return verdict(false, {{"g", emit_graph(graphs[i])}, {"h", emit_graph(graphs[j])},
                                {"orbit", by_orbit}, {"doubles", by_double}, {"certificate", cert.has_value()}, {"certificateVerified", cert_ok}});
                        equivalent += by_orbit;
                    }
                return verdict(true, {{"classes", graphs.size()}, {"pairs", pairs}, {"equivalentPairs", equivalent}, {"maxN", o.max_n}});
            });

            suite.check("antitwin/repair-random-automorphisms", [&]() -> Outcome {
                std::mt19937_64 rng{o.seed};
                for (int trial = 0; trial < 200; ++trial) {
                    auto & g = graphs[rng() % graphs.size()];
                    int n = g.order();
                    auto rg = anti_twinned(g);
                    vector<Vertex> perm(2 * n);
                    std::iota(perm.begin(), perm.end(), 0);
                    std::shuffle(perm.begin(), perm.end(), rng);
                    auto h = relabel(rg, perm);
                    auto back = find_isomorphism(h, rg);
                    if (! back)
                        return verdict(false, counterexample(g, {{"trial", trial}}));
                    // an arbitrary automorphism of R(g): perm then back
                    VertexMapping f{vector<Vertex>(2 * n)};
                    for (Vertex v = 0; v < 2 * n; ++v)
                        f.image[v] = back->mapping(perm[v]);
                    auto repaired = repair_isomorphism(g, g, IsoCertificate{f});
                    if (! respects_anti_twins(repaired.isomorphism.mapping, n))
                        return verdict(false, counterexample(g, {{"trial", trial}}));
                }
                return verdict(true, {{"trials", 200}});
            });

            suite.summary() = {{"graphs", graphs.size()}};
            return suite.finish();
        }

        auto reduction_suite(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"lemma-split"};
            auto sources = all_graphs_up_to(o.max_n);
            auto targets = all_graphs_up_to(std::min(3, o.max_n));

            suite.check("lemma/reduction-exhaustive", [&]() -> Outcome {
                long pairs = 0, found = 0;
                for (auto & g : sources)
                    for (auto & h : targets) {
                        ++pairs;
                        auto reduced = find_push_hom(g, h, o.budget);
                        auto direct = find_hom(g, anti_twinned(h), o.budget);
                        auto brute = brute_force_push_hom(g, h, o.budget);
                        if (reduced.verdict == SearchVerdict::budget_exhausted || brute.verdict == SearchVerdict::budget_exhausted
                            || direct.verdict == SearchVerdict::budget_exhausted)
                            return {CheckStatus::budget_exhausted, counterexample(g, {{"target", emit_graph(h)}})};
                        bool a = direct.verdict == SearchVerdict::found, b = brute.verdict == SearchVerdict::found;
                        bool witness_ok = ! reduced.witness || is_push_hom_witness(g, h, *reduced.witness);
                        if (a != b || a != (reduced.verdict == SearchVerdict::found) || ! witness_ok)
                            return verdict(false, counterexample(g, {{"target", emit_graph(h)}, {"viaDouble", a}, {"bruteForce", b}}));
                        found += a;
                    }
                return verdict(true, {{"pairs", pairs}, {"homomorphic", found}});
            });

            // a found split recovers g only up to pushing; the canonical one exactly
            suite.check("lemma/double-splits-back", [&]() -> Outcome {
                for (auto & g : sources) {
                    auto r = anti_twinned(g);
                    auto cert = find_split(r);
                    if (! cert || ! push_equivalent(split_graph(r, *cert), g))
                        return verdict(false, counterexample(g, {{"reason", "found split not push equivalent"}}));
                    if (split_graph(r, anti_twin_split(g.order())) != g)
                        return verdict(false, counterexample(g, {{"reason", "canonical split differs"}}));
                }
                return verdict(true, {{"graphs", sources.size()}});
            });

            return suite.finish();
        }

        auto prop_transfer(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"prop-transfer"};
            suite.check("transfer/random-1000", [&]() -> Outcome {
                std::mt19937_64 rng{o.seed};
                for (int trial = 0; trial < 1000; ++trial) {
                    int m = std::uniform_int_distribution<int>(1, 7)(rng);
                    int n = std::uniform_int_distribution<int>(1, 12)(rng);
                    // random tournament-ish target, then a random map and a
                    // random subgraph of the pulled-back arcs
                    vector<Arc> harcs;
                    for (int i = 0; i < m; ++i)
                        for (int j = i + 1; j < m; ++j)
                            if (rng() % 4)
                                harcs.push_back(rng() % 2 ? Arc{i, j} : Arc{j, i});
                    OrientedGraph h{m, harcs};
                    VertexMapping f{vector<Vertex>(n)};
                    for (auto & x : f.image)
                        x = Vertex(rng() % m);
                    vector<Arc> garcs;
                    for (Vertex u = 0; u < n; ++u)
                        for (Vertex v = 0; v < n; ++v)
                            if (u != v && h.has_arc(f(u), f(v)) && rng() % 2)
                                garcs.push_back({u, v});
                    OrientedGraph g{n, garcs};
                    if (! is_homomorphism(g, h, f))
                        return verdict(false, counterexample(g, {{"target", emit_graph(h)}, {"mapping", f.image}, {"stage", "setup"}}));
                    auto ph = PushVector::from_bits(rng() & ((1ull << m) - 1), m);
                    auto pg = transfer(g, h, f, ph);
                    if (! is_homomorphism(push(g, pg), push(h, ph), f))
                        return verdict(false, counterexample(g, {{"target", emit_graph(h)}, {"mapping", f.image}, {"targetPush", ph.vertices()}}));
                }
                return verdict(true, {{"trials", 1000}});
            });
            return suite.finish();
        }

        auto outerplanar5(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"outerplanar5"};
            int instances = 0, max_order = 0;

            suite.check("outerplanar/random-100", [&]() -> Outcome {
                for (int i = 0; i < 100; ++i) {
                    std::uint64_t seed = o.seed * 1000 + std::uint64_t(i);
                    int n = 5 + int(seed % 56);
                    auto g = random_outerplanar(n, 5, seed);
                    auto girth = underlying_girth(g);
                    if (girth && *girth < 5)
                        return verdict(false, counterexample(g, {{"seed", seed}, {"reason", "girth below 5"}}));
                    auto search = find_push_hom(g, c3(), o.budget);
                    if (search.verdict == SearchVerdict::budget_exhausted)
                        return {CheckStatus::budget_exhausted, counterexample(g, {{"seed", seed}})};
                    if (! search.witness || ! is_push_hom_witness(g, c3(), *search.witness))
                        return verdict(false, counterexample(g, {{"seed", seed}, {"reason", "no push homomorphism to C3"}}));
                    ++instances;
                    max_order = std::max(max_order, g.order());
                }
                return verdict(true, {{"instances", instances}, {"maxOrder", max_order}});
            });

            suite.check("outerplanar/odd-cycle-needs-three", [&]() -> Outcome {
                auto g = directed_cycle(5);
                vector<OrientedGraph> small{OrientedGraph{1, {}}, OrientedGraph{2, {}}, OrientedGraph{2, {{0, 1}}}};
                for (auto & h : small) {
                    auto r = find_push_hom(g, h, o.budget);
                    if (r.verdict != SearchVerdict::absent)
                        return {r.verdict == SearchVerdict::found ? CheckStatus::fail : CheckStatus::budget_exhausted,
                            counterexample(g, {{"target", emit_graph(h)}})};
                }
                auto three = find_push_hom(g, c3(), o.budget);
                return verdict(three.witness.has_value(), {{"cycle", 5}, {"refusedTargets", small.size()}});
            });

            suite.check("path-lemma/exhaustive-length-6", [&]() -> Outcome {
                long cases = 0, feasible = 0;
                for (int m = 1; m <= 6; ++m)
                    for (unsigned bits = 0; bits < (1u << m); ++bits) {
                        auto p = PathPattern::from_bits(bits, m);
                        auto path = oriented_path(p);
                        // every interior push set, every colouring
                        std::array<std::array<bool, 3>, 3> reachable{};
                        for (unsigned s = 0; s < (1u << std::max(0, m - 1)); ++s) {
                            auto pushed = push(path, PushVector::from_bits(static_cast<unsigned long long>(s) << 1, m + 1));
                            int total = 1;
                            for (int i = 0; i <= m; ++i)
                                total *= 3;
                            for (int code = 0; code < total; ++code) {
                                vector<Vertex> f(m + 1);
                                for (int i = 0, r = code; i <= m; ++i, r /= 3)
                                    f[i] = r % 3;
                                if (is_homomorphism(pushed, c3(), VertexMapping{f}))
                                    reachable[f[0]][f[m]] = true;
                            }
                        }
                        for (Vertex a = 0; a < 3; ++a)
                            for (Vertex b = 0; b < 3; ++b) {
                                ++cases;
                                auto e = path_extend_to_c3(p, a, b);
                                if (e.has_value() != reachable[a][b])
                                    return verdict(false, counterexample(path, {{"pattern", p.to_string()}, {"a", a}, {"b", b}}));
                                feasible += e.has_value();
                            }
                    }
                return verdict(true, {{"cases", cases}, {"feasible", feasible}});
            });

            suite.check("path-lemma/stated-examples", [&]() -> Outcome {
                auto p = PathPattern::parse("+++-");
                for (Vertex a = 0; a < 3; ++a)
                    if (path_extend_to_c3(p, a, a))
                        return verdict(false, {{"pattern", "+++-"}, {"a", a}, {"b", a}});
                for (unsigned bits = 0; bits < 16; ++bits)
                    for (Vertex a = 0; a < 3; ++a)
                        for (Vertex b = 0; b < 3; ++b)
                            if (a != b && ! path_extend_to_c3(PathPattern::from_bits(bits, 4), a, b))
                                return verdict(false, {{"pattern", PathPattern::from_bits(bits, 4).to_string()}, {"a", a}, {"b", b}});
                return verdict(true);
            });

            suite.summary() = {{"chiPushOuterplanarGirth5AtLeast", 3}};
            return suite.finish();
        }

        auto zielonka_suite(const VerifyOptions &) -> VerdictReport
        {
            Suite suite{"zielonka"};
            for (int k = 2; k <= 5; ++k)
                suite.check("zielonka/orders-k" + std::to_string(k), [&]() -> Outcome {
                    auto z = zielonka(k);
                    auto half = zielonka_half(k);
                    bool ok = z.order() == k * (1 << (k - 1)) && half.order() == k * (1 << (k - 2));
                    return verdict(ok, {{"k", k}, {"order", z.order()}, {"halfOrder", half.order()}});
                });

            for (int k = 2; k <= 4; ++k)
                suite.check("zielonka/split-k" + std::to_string(k), [&]() -> Outcome {
                    auto z = zielonka(k);
                    auto cert = find_split(z);
                    if (! cert || ! is_valid_split(z, *cert))
                        return verdict(false, counterexample(z, {{"k", k}, {"reason", "no split found"}}));
                    auto iso = find_isomorphism(anti_twinned(zielonka_half(k)), z);
                    if (! iso)
                        return verdict(false, counterexample(z, {{"k", k}, {"reason", "double of the half is not Z_k"}}));
                    return verdict(true, {{"k", k}, {"splitOrder", cert->first_half.size()}});
                });

            json weights = json::array();
            for (int k = 2; k <= 5; ++k) {
                auto s = zielonka_weight_split_status(k);
                weights.push_back({{"k", k}, {"firstPart", s.first_part_size}, {"secondPart", s.second_part_size},
                    {"balanced", s.balanced}, {"complementMapsBetweenParts", s.complement_maps_between_parts}});
            }
            suite.summary() = {{"weightThresholdSplit", weights}};
            return suite.finish();
        }

        auto gadgets_p3(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"gadgets-p3"};
            suite.check("gadgets/uc4-push-orbit", [&] {
                auto orbit = push_orbit(uc4());
                return verdict(orbit.size() == 1, {{"classes", orbit.size()}});
            });

            suite.check("gadgets/paley-plus-two-step", [&] {
                auto report = validate_paley_plus(paley_plus());
                json checks = json::object();
                for (auto & [name, ok] : report.checks)
                    checks[name] = ok;
                return verdict(report.all_pass(), checks);
            });

            suite.check("gadgets/b0-pairwise-uc4", [&]() -> Outcome {
                auto g = b0();
                int pairs = 0;
                for (Vertex x = 0; x < g.order(); ++x)
                    for (Vertex y = x + 1; y < g.order(); ++y) {
                        if (g.adjacent(x, y))
                            continue;
                        ++pairs;
                        if (! in_common_uc4(g, x, y))
                            return verdict(false, counterexample(g, {{"x", x}, {"y", y}}));
                    }
                auto report = validate_b0(g);
                return verdict(report.all_pass(), {{"nonAdjacentPairs", pairs}});
            });

            suite.check("gadgets/b0-push-chromatic-8", [&]() -> Outcome {
                auto g = b0();
                for (Vertex x = 0; x < g.order(); ++x)
                    for (Vertex y = x + 1; y < g.order(); ++y)
                        if (! cannot_identify(g, x, y))
                            return verdict(false, counterexample(g, {{"x", x}, {"y", y}, {"reason", "identifiable pair"}}));
                auto r = push_chromatic_number(g, 8, o.budget);
                if (r.budget_exhausted)
                    return {CheckStatus::budget_exhausted, counterexample(g)};
                bool ok = r.value == 8 && r.lower_bound == 8 && r.witness && r.target && is_push_hom_witness(g, *r.target, *r.witness);
                json detail{{"value", r.value ? json(*r.value) : json(nullptr)}, {"lowerBound", r.lower_bound}, {"targetsTried", r.targets_tried}};
                if (r.target && r.witness)
                    detail["witness"] = witness_json(*r.target, *r.witness);
                return verdict(ok, detail);
            });

            suite.check("gadgets/y-gadget", [&] {
                auto report = validate_y_gadget(y_gadget());
                json checks = json::object();
                for (auto & [name, ok] : report.checks)
                    checks[name] = ok;
                return verdict(report.all_pass(), checks);
            });

            return suite.finish();
        }

        auto girth8_lower(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"girth8-lower"};
            auto w = girth8_witness();
            suite.check("girth8/witness-girth", [&] {
                auto girth = underlying_girth(w);
                return verdict(girth == 8, {{"girth", girth ? json(*girth) : json(nullptr)}, {"order", w.order()}});
            });
            suite.check("girth8/no-push-hom-to-c3", [&]() -> Outcome {
                auto r = find_push_hom(w, c3(), o.budget);
                if (r.verdict == SearchVerdict::budget_exhausted)
                    return {CheckStatus::budget_exhausted, {{"nodes", r.nodes}}};
                if (r.verdict == SearchVerdict::found)
                    return verdict(false, {{"witness", witness_json(c3(), *r.witness)}, {"graph", emit_graph(w)}});
                return verdict(true, {{"verdict", to_string(r.verdict)}, {"nodes", r.nodes}});
            });
            suite.check("girth8/cycle-dp-cross-check", [&]() -> Outcome {
                // the apex stays unpushed and coloured 0 by symmetry; cycle
                // vertex u picks (colour, pushed), its two paths to the apex
                // must extend, and the cycle arcs must map
                auto path_ok = [](string pattern, bool pushed, int colour) {
                    if (pushed)
                        pattern[0] = pattern[0] == '+' ? '-' : '+';
                    return path_extend_to_c3(PathPattern::parse(pattern), colour, 0).has_value();
                };
                vector<int> states;
                for (int s = 0; s < 6; ++s)
                    if (path_ok("++++", s % 2, s / 2) && path_ok("+++-", s % 2, s / 2))
                        states.push_back(s);
                auto arc_ok = [](int s, int t) {
                    bool forward = ((s % 2) ^ (t % 2)) == 0;
                    return forward ? (s / 2 + 1) % 3 == t / 2 : (t / 2 + 1) % 3 == s / 2;
                };
                bool any = false;
                for (int first : states) {
                    std::set<int> at{first};
                    for (int step = 1; step < 9; ++step) {
                        std::set<int> next;
                        for (int s : at)
                            for (int t : states)
                                if (arc_ok(s, t))
                                    next.insert(t);
                        at = next;
                    }
                    for (int s : at)
                        any = any || arc_ok(s, first);
                }
                return verdict(! any, {{"allowedCycleStates", states.size()}});
            });

            suite.summary() = {{"chiPushPlanarGirth8AtLeast", 4}};
            return suite.finish();
        }

        auto strip_configurations(OrientedGraph g) -> OrientedGraph
        {
            while (auto c = find_reducible_config(g)) {
                std::set<Vertex> gone(c->removed.begin(), c->removed.end());
                vector<Vertex> keep;
                for (Vertex v = 0; v < g.order(); ++v)
                    if (! gone.contains(v))
                        keep.push_back(v);
                g = induced_subgraph(g, keep);
            }
            return g;
        }

        auto girth8_upper(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"girth8-upper"};

            suite.check("tables/complete", [&] {
                auto t = build_extension_tables();
                int pair_ok = 0, three_colourings_ok = 0;
                for (int c = 0; c < 16; ++c) {
                    bool all = true;
                    for (int p = 0; p < 8; ++p)
                        all = all && t.pair[c * 8 + p].has_value();
                    pair_ok += all;
                }
                for (int c = 0; c < 64; ++c) {
                    bool all = true;
                    for (int p = 0; p < 32; ++p)
                        all = all && t.degree_three[c * 32 + p].has_value();
                    three_colourings_ok += all;
                }
                return verdict(t.complete() && pair_ok == 16 && three_colourings_ok == 64,
                    {{"pairColourings", pair_ok}, {"degreeThreeColourings", three_colourings_ok}, {"checksum", t.checksum()}});
            });

            suite.check("paley/random-sparse-100", [&]() -> Outcome {
                int largest = 0;
                std::map<string, int> kinds;
                for (int i = 0; i < 100; ++i) {
                    std::uint64_t seed = o.seed * 1000 + std::uint64_t(i);
                    int n = 5 + int((seed * 7919) % 496);
                    auto g = random_sparse(n, seed);
                    auto cert = push_color_to_paley(g);
                    if (! verify_certificate(g, cert) || ! replay_trace(g, cert.trace))
                        return verdict(false, counterexample(g, {{"seed", seed}}));
                    for (auto & step : cert.trace)
                        ++kinds[to_string(step.kind)];
                    largest = std::max(largest, g.order());
                }
                return verdict(true, {{"instances", 100}, {"largest", largest}, {"reductions", kinds}});
            });

            suite.check("paley/subdivided-cubic-20", [&]() -> Outcome {
                long degree_three = 0;
                for (int i = 0; i < 20; ++i) {
                    std::uint64_t seed = o.seed * 1000 + std::uint64_t(i);
                    auto g = random_subdivided_cubic(4 + 2 * (i % 40), seed);
                    auto cert = push_color_to_paley(g);
                    if (! verify_certificate(g, cert) || ! replay_trace(g, cert.trace))
                        return verdict(false, counterexample(g, {{"seed", seed}}));
                    for (auto & step : cert.trace)
                        degree_three += step.kind == ConfigKind::degree_three_with_two_degree_two_neighbours;
                }
                return verdict(degree_three > 0, {{"instances", 20}, {"degreeThreeReductions", degree_three}});
            });

            suite.check("paley/girth8-witness", [&]() -> Outcome {
                auto w = girth8_witness();
                auto cert = push_color_to_paley(w);
                return verdict(verify_certificate(w, cert) && replay_trace(w, cert.trace), witness_json(cert.target, cert.witness));
            });

            suite.check("discharge/config-free-residues", [&]() -> Outcome {
                std::mt19937_64 rng{o.seed};
                int residues = 0;
                for (int i = 0; i < 200; ++i) {
                    int n = 8 + int(rng() % 30);
                    double density = 2.2 / n + 0.02 * double(rng() % 5);
                    std::bernoulli_distribution edge(density), coin(0.5);
                    vector<Arc> arcs;
                    for (int a = 0; a < n; ++a)
                        for (int b = a + 1; b < n; ++b)
                            if (edge(rng))
                                arcs.push_back(coin(rng) ? Arc{a, b} : Arc{b, a});
                    auto residue = strip_configurations(OrientedGraph{n, arcs});
                    if (residue.order() == 0)
                        continue;
                    ++residues;
                    auto audit = discharge_audit(residue);
                    if (! audit.minimum_at_least_eight_thirds || ! (max_average_degree(residue) >= Rational{8, 3}))
                        return verdict(false, counterexample(residue, {{"iteration", i}}));
                }
                return verdict(true, {{"residuesAudited", residues}});
            });

            suite.summary() = {{"chiPushMadBelow8Over3AtMost", 4}};
            return suite.finish();
        }

        auto sandwich(const VerifyOptions & o) -> VerdictReport
        {
            Suite suite{"sandwich"};
            suite.check("sandwich/exhaustive", [&]() -> Outcome {
                long graphs = 0;
                for (int n = 1; n <= o.max_n; ++n)
                    for (auto & g : enumerate_oriented_graphs(n)) {
                        ++graphs;
                        auto p = push_chromatic_number(g, n, o.budget);
                        auto q = oriented_chromatic_number(g, n, o.budget);
                        if (p.budget_exhausted || q.budget_exhausted)
                            return {CheckStatus::budget_exhausted, counterexample(g)};
                        if (! p.value || ! q.value || *p.value > *q.value || *q.value > 2 * *p.value)
                            return verdict(false, counterexample(g, {{"push", p.value ? json(*p.value) : json(nullptr)},
                                {"oriented", q.value ? json(*q.value) : json(nullptr)}}));
                    }
                return verdict(true, {{"graphs", graphs}, {"maxN", o.max_n}});
            });
            return suite.finish();
        }

        auto tournament3(const VerifyOptions &) -> VerdictReport
        {
            Suite suite{"tournament3"};
            suite.check("tournament3/one-push-class", [&]() -> Outcome {
                auto ts = enumerate_tournaments(3);
                std::set<string> classes;
                for (auto & t : ts)
                    classes.insert(*orbit_codes(t).begin());
                auto cert = push_equivalent(ts.at(0), ts.at(1));
                return verdict(ts.size() == 2 && classes.size() == 1 && cert.has_value(),
                    {{"tournaments", ts.size()}, {"pushClasses", classes.size()}});
            });
            return suite.finish();
        }

        auto tournament9(const VerifyOptions &) -> VerdictReport
        {
            Suite suite{"tournament9"};
            suite.check("tournament9/none-survive", [&] {
                auto r = constrained_tournament_search();
                json detail{{"nodes", r.nodes}};
                if (r.tournament)
                    detail["graph"] = emit_graph(*r.tournament);
                return verdict(! r.tournament, detail);
            });
            return suite.finish();
        }

        const std::map<string, std::function<VerdictReport (const VerifyOptions &)>> & registry()
        {
            static const std::map<string, std::function<VerdictReport (const VerifyOptions &)>> suites{
                {"theorem-antitwin", antitwin_suite},
                {"prop-transfer", prop_transfer},
                {"lemma-split", reduction_suite},
                {"outerplanar5", outerplanar5},
                {"zielonka", zielonka_suite},
                {"gadgets-p3", gadgets_p3},
                {"girth8-lower", girth8_lower},
                {"girth8-upper", girth8_upper},
                {"sandwich", sandwich},
                {"tournament3", tournament3},
                {"tournament9", tournament9}};
            return suites;
        }
    }

    auto suite_names() -> vector<string>
    {
        return {"theorem-antitwin", "prop-transfer", "lemma-split", "outerplanar5", "zielonka", "gadgets-p3",
            "girth8-lower", "girth8-upper", "sandwich", "tournament3"};
    }

    auto optional_suite_names() -> vector<string>
    {
        return {"tournament9"};
    }

    auto run_suite(const string & name, const VerifyOptions & options) -> VerdictReport
    {
        auto it = registry().find(name);
        if (it == registry().end())
            throw std::invalid_argument("unknown suite '" + name + "'");
        return it->second(options);
    }

    auto constrained_tournament_search(const TournamentBounds & bounds) -> TournamentSearchResult
    {
        // the eight non-apex vertices; the apex agrees for every pair, so
        // only the residual tournament is searched
        constexpr int n = 8;
        vector<std::pair<int, int>> pairs;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                pairs.push_back({i, j});

        std::array<std::array<int, n>, n> out{};    // out[i][j] = 1 if i -> j, -1 if j -> i, 0 unknown
        std::array<int, n> out_degree{}, decided{};
        TournamentSearchResult result;

        // for pair (x, y): z agrees when x and y see z with the same sense
        auto pair_ok = [&](int x, int y) {
            int agree = 0, disagree = 0, open = 0;
            for (int z = 0; z < n; ++z) {
                if (z == x || z == y)
                    continue;
                if (out[x][z] == 0 || out[y][z] == 0)
                    ++open;
                else if (out[x][z] == out[y][z])
                    ++agree;
                else
                    ++disagree;
            }
            return agree <= bounds.agree_max && disagree <= bounds.disagree_max && agree + open >= bounds.agree_min
                && disagree + open >= bounds.disagree_min;
        };

        auto vertex_ok = [&](int v) {
            int remaining = (n - 1) - decided[v];
            return out_degree[v] <= bounds.out_max && out_degree[v] + remaining >= bounds.out_min;
        };

        std::function<bool (std::size_t)> search = [&](std::size_t e) -> bool {
            ++result.nodes;
            if (e == pairs.size())
                return true;
            auto [i, j] = pairs[e];
            for (int sense : {1, -1}) {
                out[i][j] = sense;
                out[j][i] = -sense;
                ++decided[i];
                ++decided[j];
                ++out_degree[sense == 1 ? i : j];

                bool ok = vertex_ok(i) && vertex_ok(j);
                for (int z = 0; z < n && ok; ++z)
                    if (z != i && z != j)
                        ok = pair_ok(i, z) && pair_ok(j, z);
                ok = ok && pair_ok(i, j);
                if (ok && search(e + 1))
                    return true;

                --out_degree[sense == 1 ? i : j];
                --decided[i];
                --decided[j];
                out[i][j] = out[j][i] = 0;
            }
            return false;
        };

        if (search(0)) {
            vector<Arc> arcs;
            for (int v = 0; v < n; ++v)
                arcs.push_back({n, v});
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (out[i][j] == 1)
                        arcs.push_back({i, j});
            result.tournament = OrientedGraph{n + 1, arcs};
        }
        return result;
    }
}
