/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/families.hh>
#include <pushhom/hom.hh>
#include <pushhom/isomorphism.hh>
#include <pushhom/sparse_coloring.hh>

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <set>

using std::string;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace pushhom
{
    PathPattern::PathPattern(vector<bool> forward) :
        _forward(std::move(forward))
    {
        if (_forward.empty())
            throw FamilyError("a path pattern needs at least one arc");
    }

    auto PathPattern::parse(const string & text) -> PathPattern
    {
        vector<bool> forward;
        for (auto c : text) {
            if (c == '+')
                forward.push_back(true);
            else if (c == '-')
                forward.push_back(false);
            else
                throw FamilyError("path pattern characters must be '+' or '-', got '" + string(1, c) + "'");
        }
        return PathPattern{forward};
    }

    auto PathPattern::from_bits(unsigned bits, int length) -> PathPattern
    {
        vector<bool> forward;
        for (int i = 0; i < length; ++i)
            forward.push_back(bits & (1u << i));
        return PathPattern{forward};
    }

    auto PathPattern::forward_count() const -> int
    {
        return int(std::count(_forward.begin(), _forward.end(), true));
    }

    auto PathPattern::to_string() const -> string
    {
        string result;
        for (auto f : _forward)
            result.push_back(f ? '+' : '-');
        return result;
    }

    auto directed_cycle(int n) -> OrientedGraph
    {
        if (n < 3)
            throw FamilyError("a directed cycle needs at least 3 vertices");
        vector<Arc> arcs;
        for (Vertex v = 0; v < n; ++v)
            arcs.push_back({v, (v + 1) % n});
        return OrientedGraph{n, arcs};
    }

    auto oriented_path(const PathPattern & pattern) -> OrientedGraph
    {
        vector<Arc> arcs;
        for (int i = 0; i < pattern.length(); ++i)
            arcs.push_back(pattern.forward(i) ? Arc{i, i + 1} : Arc{i + 1, i});
        return OrientedGraph{pattern.length() + 1, arcs};
    }

    auto c3() -> OrientedGraph
    {
        return directed_cycle(3);
    }

    auto uc4() -> OrientedGraph
    {
        return OrientedGraph{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}};
    }

    auto paley_plus() -> OrientedGraph
    {
        static const OrientedGraph result = [] {
            OrientedGraph g{4, {{0, 2}, {2, 1}, {1, 0}, {3, 0}, {3, 1}, {3, 2}}};
            auto report = validate_paley_plus(g);
            if (! report.all_pass())
                throw FamilyError("Paley plus construction failed its two-step neighbourhood checks");
            return g;
        }();
        return result;
    }

    auto zielonka_vertex(int k, Vertex v) -> ZielonkaVertex
    {
        int half = 1 << (k - 1);
        ZielonkaVertex result{v / half, 0};
        unsigned packed = unsigned(v % half);
        for (int j = 0, p = 0; j < k; ++j) {
            if (j == result.star)
                continue;
            if (packed & (1u << p))
                result.bits |= 1u << j;
            ++p;
        }
        return result;
    }

    namespace
    {
        auto zielonka_id(int k, const ZielonkaVertex & z) -> Vertex
        {
            unsigned packed = 0;
            for (int j = 0, p = 0; j < k; ++j) {
                if (j == z.star)
                    continue;
                if (z.bits & (1u << j))
                    packed |= 1u << p;
                ++p;
            }
            return z.star * (1 << (k - 1)) + Vertex(packed);
        }

        auto check_zielonka_order(int k) -> void
        {
            if (k < 2 || k > zielonka_limit)
                throw FamilyError("zielonka needs 2 <= k <= " + std::to_string(zielonka_limit) + ", got " + std::to_string(k));
        }
    }

    auto zielonka(int k) -> OrientedGraph
    {
        check_zielonka_order(k);
        int n = k << (k - 1);
        vector<Arc> arcs;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = 0; b < n; ++b) {
                auto x = zielonka_vertex(k, a), y = zielonka_vertex(k, b);
                int i = x.star, j = y.star;
                if (i == j)
                    continue;
                bool same = bool(x.bits & (1u << j)) == bool(y.bits & (1u << i));
                if ((same && i < j) || (! same && i > j))
                    arcs.push_back({a, b});
            }
        return OrientedGraph{n, arcs};
    }

    auto zielonka_complement_split(int k) -> SplitCertificate
    {
        check_zielonka_order(k);
        int n = k << (k - 1);
        unsigned all = (1u << k) - 1;
        SplitCertificate result;
        for (Vertex v = 0; v < n; ++v) {
            auto z = zielonka_vertex(k, v);
            unsigned first = z.star == 0 ? 1 : 0;
            if (z.bits & (1u << first))
                continue;
            ZielonkaVertex complement{z.star, (~z.bits & all) & ~(1u << z.star)};
            result.first_half.push_back(v);
            result.partner.push_back(zielonka_id(k, complement));
        }
        return result;
    }

    auto zielonka_half(int k) -> OrientedGraph
    {
        auto g = zielonka(k);
        auto cert = zielonka_complement_split(k);
        if (! is_valid_split(g, cert))
            throw FamilyError("complementation does not split Z_" + std::to_string(k));
        // split_graph re-checks R(half) against g through the explicit pairing
        return split_graph(g, cert);
    }

    auto zielonka_weight_split_status(int k) -> WeightSplitStatus
    {
        check_zielonka_order(k);
        int n = k << (k - 1);
        int threshold = (k + 1) / 2;
        unsigned all = (1u << k) - 1;
        WeightSplitStatus result{k, 0, 0, false, true};
        for (Vertex v = 0; v < n; ++v) {
            auto z = zielonka_vertex(k, v);
            int weight = std::popcount(z.bits);
            bool first = weight >= threshold;
            (first ? result.first_part_size : result.second_part_size)++;
            int complement_weight = std::popcount((~z.bits & all) & ~(1u << z.star));
            if (first == (complement_weight >= threshold))
                result.complement_maps_between_parts = false;
        }
        result.balanced = result.first_part_size == result.second_part_size;
        return result;
    }

    auto b0() -> OrientedGraph
    {
        static const OrientedGraph result = [] {
            using b0_vertex::x;
            // transcribed: x4 collects from x5, x6, x7 and feeds x1, x2, x3;
            // two directed paths; x8 sends to everything
            OrientedGraph g{8, {
                {x(5), x(4)}, {x(6), x(4)}, {x(7), x(4)},
                {x(4), x(1)}, {x(4), x(2)}, {x(4), x(3)},
                {x(1), x(2)}, {x(2), x(3)},
                {x(5), x(6)}, {x(6), x(7)},
                {x(8), x(1)}, {x(8), x(2)}, {x(8), x(3)}, {x(8), x(4)},
                {x(8), x(5)}, {x(8), x(6)}, {x(8), x(7)}}};
            if (! validate_b0(g).all_pass())
                throw FamilyError("B0 transcription failed its property checks");
            return g;
        }();
        return result;
    }

    auto y_gadget() -> OrientedGraph
    {
        static const OrientedGraph result = [] {
            using namespace y_vertex;
            vector<Arc> arcs;
            for (int i = 0; i < 5; ++i) {
                arcs.push_back({lower[i], lower[(i + 1) % 5]});
                arcs.push_back({upper[i], upper[(i + 1) % 5]});
            }
            for (Vertex w = 3; w <= 10; ++w)
                arcs.push_back({apex, w});
            // x sends to the lower cycle except one vertex, which sends to x;
            // likewise y with the upper cycle
            arcs.insert(arcs.end(), {{x, 3}, {x, 4}, {x, 5}, {x, 7}, {6, x}});
            arcs.insert(arcs.end(), {{y, 7}, {y, 9}, {y, 6}, {y, 8}, {10, y}});
            OrientedGraph g{11, arcs};
            if (! validate_y_gadget(g).all_pass())
                throw FamilyError("Y gadget reconstruction failed its property checks");
            return g;
        }();
        return result;
    }

    auto girth8_witness() -> OrientedGraph
    {
        vector<Arc> arcs;
        for (Vertex u = 0; u < 9; ++u)
            arcs.push_back({u, (u + 1) % 9});
        for (Vertex u = 0; u < 9; ++u) {
            Vertex base = 10 + 6 * u;
            // directed: u -> a -> b -> c -> apex
            arcs.insert(arcs.end(), {{u, base}, {base, base + 1}, {base + 1, base + 2}, {base + 2, girth8_apex}});
            // three forward then one backward: u -> a -> b -> c <- apex
            arcs.insert(arcs.end(), {{u, base + 3}, {base + 3, base + 4}, {base + 4, base + 5}, {girth8_apex, base + 5}});
        }
        return OrientedGraph{64, arcs};
    }

    namespace
    {
        auto random_orientation(int n, const vector<std::pair<Vertex, Vertex>> & edges, std::mt19937_64 & rng) -> OrientedGraph
        {
            vector<Arc> arcs;
            std::bernoulli_distribution coin(0.5);
            for (auto & [u, v] : edges)
                arcs.push_back(coin(rng) ? Arc{u, v} : Arc{v, u});
            return OrientedGraph{n, arcs};
        }

        auto uniform(std::mt19937_64 & rng, int lo, int hi) -> int
        {
            return std::uniform_int_distribution<int>(lo, hi)(rng);
        }
    }

    auto random_outerplanar(int n, int min_girth, uint64_t seed) -> OrientedGraph
    {
        if (min_girth < 3 || n < min_girth)
            throw FamilyError("random_outerplanar needs n >= min_girth >= 3");

        std::mt19937_64 rng(seed);
        vector<std::pair<Vertex, Vertex>> edges;

        // outer boundary of the 2-connected core, in cyclic order; ears go
        // outside an edge between consecutive boundary vertices
        int cycle = uniform(rng, min_girth, std::min(n, min_girth + 3));
        vector<Vertex> boundary;
        for (Vertex v = 0; v < cycle; ++v) {
            boundary.push_back(v);
            edges.emplace_back(v, (v + 1) % cycle);
        }
        int next = cycle;

        while (next < n) {
            int remaining = n - next;
            int ear_interior = min_girth - 2;
            if (remaining >= ear_interior && std::bernoulli_distribution(0.5)(rng)) {
                int interior = uniform(rng, ear_interior, std::min(remaining, ear_interior + 3));
                int at = uniform(rng, 0, int(boundary.size()) - 1);
                Vertex u = boundary[at], w = boundary[(at + 1) % boundary.size()];
                vector<Vertex> path;
                Vertex previous = u;
                for (int i = 0; i < interior; ++i) {
                    path.push_back(next);
                    edges.emplace_back(previous, next);
                    previous = next++;
                }
                edges.emplace_back(previous, w);
                boundary.insert(boundary.begin() + at + 1, path.begin(), path.end());
            }
            else {
                // pendant path hanging in the outer face
                int length = uniform(rng, 1, std::min(remaining, 3));
                Vertex previous = uniform(rng, 0, next - 1);
                for (int i = 0; i < length; ++i) {
                    edges.emplace_back(previous, next);
                    previous = next++;
                }
            }
        }

        return random_orientation(n, edges, rng);
    }

    auto random_subdivided_cubic(int n, uint64_t seed) -> OrientedGraph
    {
        if (n < 4 || n % 2 != 0)
            throw FamilyError("random_subdivided_cubic needs an even n >= 4");

        std::mt19937_64 rng(seed);
        // hamiltonian cycle plus a random perfect matching of chords
        for (int attempt = 0; attempt < 1000; ++attempt) {
            vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::shuffle(order.begin(), order.end(), rng);
            std::set<std::pair<Vertex, Vertex>> used;
            vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex v = 0; v < n; ++v) {
                Vertex w = (v + 1) % n;
                used.insert({std::min(v, w), std::max(v, w)});
                edges.emplace_back(v, w);
            }
            bool simple = true;
            for (int i = 0; i < n && simple; i += 2) {
                Vertex a = order[i], b = order[i + 1];
                simple = used.insert({std::min(a, b), std::max(a, b)}).second;
                edges.emplace_back(a, b);
            }
            if (! simple)
                continue;

            vector<std::pair<Vertex, Vertex>> subdivided;
            Vertex next = n;
            for (auto & [a, b] : edges) {
                subdivided.emplace_back(a, next);
                subdivided.emplace_back(next++, b);
            }
            return random_orientation(next, subdivided, rng);
        }
        throw FamilyError("random_subdivided_cubic: no simple cubic graph found");
    }

    auto random_sparse(int n, uint64_t seed) -> OrientedGraph
    {
        if (n < 1)
            throw FamilyError("random_sparse needs n >= 1");

        std::mt19937_64 rng(seed);
        static const Rational limit{8, 3};
        for (int attempt = 0; attempt < 100; ++attempt) {
            // a share of the vertices goes to subdivided extra edges, each
            // costing 2 or 3 new vertices
            int extras_budget = int(n * std::uniform_real_distribution<double>(0.0, 0.5)(rng));
            vector<std::pair<Vertex, Vertex>> edges;
            vector<int> subdivisions;
            int used = 0;
            while (true) {
                int s = uniform(rng, 2, 3);
                if (used + s > extras_budget || n - used - s < 2)
                    break;
                subdivisions.push_back(s);
                used += s;
            }

            int tree = n - used;
            for (Vertex v = 1; v < tree; ++v)
                edges.emplace_back(uniform(rng, 0, v - 1), v);

            Vertex next = tree;
            for (auto s : subdivisions) {
                Vertex a = uniform(rng, 0, tree - 1), b = uniform(rng, 0, tree - 1);
                if (a == b)
                    b = (a + 1) % tree;
                Vertex previous = a;
                for (int i = 0; i < s; ++i) {
                    edges.emplace_back(previous, next);
                    previous = next++;
                }
                edges.emplace_back(previous, b);
            }

            auto g = random_orientation(n, edges, rng);
            if (max_average_degree(g) < limit)
                return g;
        }
        throw FamilyError("random_sparse: resample limit exceeded for n = " + std::to_string(n));
    }

    auto GadgetReport::all_pass() const -> bool
    {
        return std::all_of(checks.begin(), checks.end(), [](const auto & c) { return c.second; });
    }

    auto validate_paley_plus(const OrientedGraph & g) -> GadgetReport
    {
        GadgetReport report{"paley_plus", {}};
        report.checks.emplace_back("order 4", g.order() == 4);
        report.checks.emplace_back("6 arcs", g.size() == 6);
        if (g.order() != 4)
            return report;

        for (Vertex v = 0; v < g.order(); ++v) {
            auto n2 = two_step_neighbourhoods(g, v);
            std::set<Vertex> same, mixed;
            for (auto list : {&n2.out_out, &n2.in_in})
                same.insert(list->begin(), list->end());
            for (auto list : {&n2.out_in, &n2.in_out})
                mixed.insert(list->begin(), list->end());
            std::set<Vertex> others;
            for (Vertex w = 0; w < g.order(); ++w)
                if (w != v)
                    others.insert(w);
            std::set<Vertex> everything = others;
            everything.insert(v);
            report.checks.emplace_back("N++ u N-- = V - {" + std::to_string(v) + "}", same == others);
            report.checks.emplace_back("N+- u N-+ = V at " + std::to_string(v), mixed == everything);
        }
        return report;
    }

    auto validate_b0(const OrientedGraph & g) -> GadgetReport
    {
        using b0_vertex::x;
        GadgetReport report{"b0", {}};
        report.checks.emplace_back("order 8", g.order() == 8);
        report.checks.emplace_back("17 arcs", g.size() == 17);
        if (g.order() != 8)
            return report;

        bool uc4_everywhere = true, all_forced = true;
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = u + 1; v < 8; ++v) {
                if (! g.adjacent(u, v) && ! in_common_uc4(g, u, v))
                    uc4_everywhere = false;
                if (! cannot_identify(g, u, v))
                    all_forced = false;
            }
        report.checks.emplace_back("every non-adjacent pair lies in a common UC4", uc4_everywhere);
        report.checks.emplace_back("no two vertices can be identified", all_forced);

        // the distinguished partner of x8 is not pinned down; record every one
        bool some_partner = false;
        for (int i = 1; i <= 7; ++i) {
            auto stats = agree_disagree(g, x(i), x(8));
            bool ok = stats.agree.size() >= 3 && stats.disagree.size() >= 3;
            some_partner = some_partner || ok;
            if (ok)
                report.checks.emplace_back("|A|, |D| >= 3 for (x" + std::to_string(i) + ", x8)", true);
        }
        report.checks.emplace_back("some vertex has |A|, |D| >= 3 with x8", some_partner);
        return report;
    }

    auto validate_y_gadget(const OrientedGraph & g) -> GadgetReport
    {
        using namespace y_vertex;
        GadgetReport report{"y_gadget", {}};
        report.checks.emplace_back("order 11", g.order() == 11);
        if (g.order() != 11)
            return report;

        Vertex special[3] = {apex, x, y};
        bool pairwise = true;
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (g.adjacent(special[i], special[j]) || ! in_common_uc4(g, special[i], special[j]))
                    pairwise = false;
        report.checks.emplace_back("v, x, y pairwise in a common UC4", pairwise);

        bool apex_sends = true;
        for (Vertex w = 0; w < 11; ++w) {
            if (w == apex)
                continue;
            if (w == x || w == y ? g.adjacent(apex, w) : ! g.has_arc(apex, w))
                apex_sends = false;
        }
        report.checks.emplace_back("v sends an arc to every vertex except x and y", apex_sends);

        auto c5 = canonical_code(directed_cycle(5));
        for (auto [label, other] : {std::pair{"x", x}, std::pair{"y", y}}) {
            auto stats = agree_disagree(g, apex, other);
            vector<Vertex> common = stats.agree;
            common.insert(common.end(), stats.disagree.begin(), stats.disagree.end());
            std::sort(common.begin(), common.end());
            bool cycle = common.size() == 5 && canonical_code(induced_subgraph(g, common)) == c5;
            report.checks.emplace_back(string("common neighbours of v and ") + label + " induce a directed C5", cycle);

            bool distinct = true;
            for (std::size_t i = 0; i < common.size(); ++i)
                for (std::size_t j = i + 1; j < common.size(); ++j)
                    if (! cannot_identify(g, common[i], common[j]))
                        distinct = false;
            report.checks.emplace_back(string("that C5 is pairwise non-identifiable (") + label + ")", distinct);
            report.checks.emplace_back(string("M(v, ") + label + ") >= 4", stats.max_count >= 4);
        }
        return report;
    }

    auto family_names() -> vector<string>
    {
        return {"cycle", "path", "c3", "uc4", "paley-plus", "zielonka", "zielonka-half", "b0", "y-gadget", "girth8-witness",
            "outerplanar", "sparse", "subdivided-cubic", "tournament"};
    }

    auto generate_family(const string & name, const vector<long> & params, uint64_t seed) -> OrientedGraph
    {
        auto param = [&](std::size_t i, const char * what) -> long {
            if (i >= params.size())
                throw FamilyError("family '" + name + "' needs parameter " + what);
            return params[i];
        };

        if (name == "cycle")
            return directed_cycle(int(param(0, "n")));
        if (name == "path") {
            // pattern given as bits, low bit first
            return oriented_path(PathPattern::from_bits(unsigned(param(1, "bits")), int(param(0, "length"))));
        }
        if (name == "c3")
            return c3();
        if (name == "uc4")
            return uc4();
        if (name == "paley-plus")
            return paley_plus();
        if (name == "zielonka")
            return zielonka(int(param(0, "k")));
        if (name == "zielonka-half")
            return zielonka_half(int(param(0, "k")));
        if (name == "b0")
            return b0();
        if (name == "y-gadget")
            return y_gadget();
        if (name == "girth8-witness")
            return girth8_witness();
        if (name == "outerplanar")
            return random_outerplanar(int(param(0, "n")), int(param(1, "min_girth")), seed);
        if (name == "sparse")
            return random_sparse(int(param(0, "n")), seed);
        if (name == "subdivided-cubic")
            return random_subdivided_cubic(int(param(0, "n")), seed);
        if (name == "tournament") {
            // enumeration index within the isomorphism classes
            auto all = enumerate_tournaments(int(param(0, "k")));
            auto index = std::size_t(params.size() > 1 ? params[1] : 0);
            if (index >= all.size())
                throw FamilyError("tournament index out of range");
            return all[index];
        }
        throw FamilyError("unknown family '" + name + "'");
    }
}
