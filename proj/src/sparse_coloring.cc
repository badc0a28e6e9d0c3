/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/sparse_coloring.hh>
#include <pushhom/io.hh>

#include <algorithm>
#include <mutex>
#include <set>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace pushhom
{
    auto two_step_neighbourhoods(const OrientedGraph & h, Vertex v) -> TwoStepNeighbourhoods
    {
        h.check_vertex(v);
        auto collect = [&](const vector<Vertex> & first, bool second_out) {
            std::set<Vertex> result;
            for (auto c : first)
                for (auto w : second_out ? h.out_neighbours(c) : h.in_neighbours(c))
                    result.insert(w);
            return vector<Vertex>(result.begin(), result.end());
        };
        return TwoStepNeighbourhoods{
            collect(h.out_neighbours(v), true),
            collect(h.in_neighbours(v), false),
            collect(h.out_neighbours(v), false),
            collect(h.in_neighbours(v), true)};
    }

    auto path_extend_to_c3(const PathPattern & pattern, Vertex a, Vertex b) -> optional<PathExtension>
    {
        if (a < 0 || a > 2 || b < 0 || b > 2)
            throw GraphError("path_extend_to_c3 endpoints must be C3 vertices");

        int m = pattern.length();
        // state (position, colour, pushed) -> predecessor state index, or -1
        auto index = [](int colour, int pushed) { return colour * 2 + pushed; };
        vector<std::array<int, 6>> from(m + 1);
        for (auto & row : from)
            row.fill(-2);
        from[0][index(a, 0)] = -1;

        for (int i = 0; i < m; ++i)
            for (int state = 0; state < 6; ++state) {
                if (from[i][state] == -2)
                    continue;
                int colour = state / 2, pushed = state % 2;
                for (int next_pushed = 0; next_pushed < 2; ++next_pushed) {
                    if (next_pushed && i + 1 == m)
                        continue;
                    bool forward = (pattern.forward(i) != bool(pushed)) != bool(next_pushed);
                    int next_colour = forward ? (colour + 1) % 3 : (colour + 2) % 3;
                    auto & slot = from[i + 1][index(next_colour, next_pushed)];
                    if (slot == -2)
                        slot = state;
                }
            }

        if (from[m][index(b, 0)] == -2)
            return std::nullopt;

        vector<int> colour(m + 1);
        vector<Vertex> pushed;
        for (int i = m, state = index(b, 0); i >= 0; --i) {
            colour[i] = state / 2;
            if (state % 2)
                pushed.push_back(i);
            state = from[i][state];
        }

        PathExtension result{PushVector{pushed}, VertexMapping{colour}};
        if (! is_homomorphism(push(oriented_path(pattern), result.interior_pushes), c3(), result.mapping))
            throw GraphError("internal error: path extension failed verification");
        return result;
    }

    auto to_string(ConfigKind k) -> string
    {
        switch (k) {
        case ConfigKind::degree_at_most_one: return "degree-at-most-one";
        case ConfigKind::adjacent_degree_two_pair: return "adjacent-degree-two-pair";
        case ConfigKind::degree_three_with_two_degree_two_neighbours: return "degree-three-with-two-degree-two-neighbours";
        }
        return "unknown";
    }

    namespace
    {
        // the graph that remains after some reductions
        class Remaining
        {
        private:
            vector<vector<Vertex>> _neighbours;
            vector<bool> _alive;
            vector<int> _degree;
            int _count;

        public:
            explicit Remaining(const OrientedGraph & g) :
                _neighbours(g.order()),
                _alive(g.order(), true),
                _degree(g.order()),
                _count(g.order())
            {
                for (Vertex v = 0; v < g.order(); ++v) {
                    _neighbours[v] = g.neighbours(v);
                    _degree[v] = int(_neighbours[v].size());
                }
            }

            auto empty() const -> bool { return _count == 0; }
            auto alive(Vertex v) const -> bool { return v >= 0 && v < int(_alive.size()) && _alive[v]; }
            auto degree(Vertex v) const -> int { return _degree[v]; }

            auto live_neighbours(Vertex v) const -> vector<Vertex>
            {
                vector<Vertex> result;
                for (auto w : _neighbours[v])
                    if (_alive[w])
                        result.push_back(w);
                return result;
            }

            auto other_neighbour(Vertex v, Vertex not_this) const -> Vertex
            {
                for (auto w : _neighbours[v])
                    if (_alive[w] && w != not_this)
                        return w;
                return -1;
            }

            auto remove(const vector<Vertex> & vertices) -> void
            {
                for (auto v : vertices) {
                    _alive[v] = false;
                    --_count;
                    for (auto w : _neighbours[v])
                        --_degree[w];
                }
            }

            auto find() const -> optional<ConfigDescriptor>
            {
                int n = int(_alive.size());
                for (Vertex v = 0; v < n; ++v)
                    if (_alive[v] && _degree[v] <= 1)
                        return ConfigDescriptor{ConfigKind::degree_at_most_one, {v}, live_neighbours(v)};

                for (Vertex v = 0; v < n; ++v) {
                    if (! _alive[v] || _degree[v] != 2)
                        continue;
                    for (auto w : live_neighbours(v))
                        if (_degree[w] == 2)
                            return ConfigDescriptor{ConfigKind::adjacent_degree_two_pair, {v, w},
                                {other_neighbour(v, w), other_neighbour(w, v)}};
                }

                for (Vertex v = 0; v < n; ++v) {
                    if (! _alive[v] || _degree[v] != 3)
                        continue;
                    vector<Vertex> twos, rest;
                    for (auto w : live_neighbours(v))
                        (_degree[w] == 2 && twos.size() < 2 ? twos : rest).push_back(w);
                    if (twos.size() == 2)
                        return ConfigDescriptor{ConfigKind::degree_three_with_two_degree_two_neighbours, {twos[0], twos[1], v},
                            {other_neighbour(twos[0], v), other_neighbour(twos[1], v), rest.at(0)}};
                }
                return std::nullopt;
            }

            // whether the descriptor is a genuine configuration right now
            auto holds(const ConfigDescriptor & c) const -> bool
            {
                for (auto v : c.removed)
                    if (! alive(v))
                        return false;

                switch (c.kind) {
                case ConfigKind::degree_at_most_one: {
                    if (c.removed.size() != 1)
                        return false;
                    auto nbrs = live_neighbours(c.removed[0]);
                    return nbrs.size() <= 1 && nbrs == c.boundary;
                }
                case ConfigKind::adjacent_degree_two_pair: {
                    if (c.removed.size() != 2 || c.boundary.size() != 2)
                        return false;
                    auto v1 = c.removed[0], v2 = c.removed[1];
                    auto n1 = live_neighbours(v1), n2 = live_neighbours(v2);
                    return _degree[v1] == 2 && _degree[v2] == 2 && std::count(n1.begin(), n1.end(), v2) == 1
                        && other_neighbour(v1, v2) == c.boundary[0] && other_neighbour(v2, v1) == c.boundary[1];
                }
                case ConfigKind::degree_three_with_two_degree_two_neighbours: {
                    if (c.removed.size() != 3 || c.boundary.size() != 3)
                        return false;
                    auto v1 = c.removed[0], v2 = c.removed[1], v3 = c.removed[2];
                    if (_degree[v1] != 2 || _degree[v2] != 2 || _degree[v3] != 3)
                        return false;
                    auto n3 = live_neighbours(v3);
                    auto has = [&](Vertex w) { return std::count(n3.begin(), n3.end(), w) == 1; };
                    return has(v1) && has(v2) && has(c.boundary[2]) && c.boundary[2] != v1 && c.boundary[2] != v2
                        && other_neighbour(v1, v3) == c.boundary[0] && other_neighbour(v2, v3) == c.boundary[1];
                }
                }
                return false;
            }
        };
    }

    auto find_reducible_config(const OrientedGraph & g) -> optional<ConfigDescriptor>
    {
        return Remaining{g}.find();
    }

    auto discharge_audit(const OrientedGraph & g) -> DischargeReport
    {
        DischargeReport report;
        for (Vertex v = 0; v < g.order(); ++v) {
            int d = g.degree(v);
            Rational charge{d};
            for (auto w : g.neighbours(v)) {
                if (d == 2 && g.degree(w) >= 3)
                    charge += Rational{1, 3};
                if (d >= 3 && g.degree(w) == 2)
                    charge -= Rational{1, 3};
            }
            report.rows.push_back({v, d, charge});
            if (! report.minimum || charge < *report.minimum)
                report.minimum = charge;
        }
        report.minimum_at_least_eight_thirds = ! report.minimum || *report.minimum >= Rational{8, 3};
        return report;
    }

    namespace
    {
        struct EdgeSpec
        {
            int removed;      // index of the removed endpoint
            int other;        // index of the other endpoint
            bool other_is_boundary;
        };

        // finds colours and pushes for the removed vertices of a configuration
        auto solve_case(const OrientedGraph & target, int removed_count, const vector<EdgeSpec> & edges,
            const vector<int> & boundary_colour, unsigned pattern) -> optional<ExtensionTables::Choice>
        {
            int n = target.order();
            int colourings = 1;
            for (int i = 0; i < removed_count; ++i)
                colourings *= n;

            for (int pushes = 0; pushes < (1 << removed_count); ++pushes)
                for (int code = 0; code < colourings; ++code) {
                    std::array<std::int8_t, 3> colour{0, 0, 0};
                    for (int i = 0, rest = code; i < removed_count; ++i, rest /= n)
                        colour[i] = std::int8_t(rest % n);

                    bool ok = true;
                    for (std::size_t e = 0; e < edges.size() && ok; ++e) {
                        auto & spec = edges[e];
                        bool away = pattern & (1u << e);
                        away ^= bool(pushes & (1 << spec.removed));
                        int other_colour;
                        if (spec.other_is_boundary)
                            other_colour = boundary_colour[spec.other];
                        else {
                            away ^= bool(pushes & (1 << spec.other));
                            other_colour = colour[spec.other];
                        }
                        ok = away ? target.has_arc(colour[spec.removed], other_colour) : target.has_arc(other_colour, colour[spec.removed]);
                    }
                    if (ok) {
                        ExtensionTables::Choice choice{colour, {false, false, false}};
                        for (int i = 0; i < removed_count; ++i)
                            choice.pushed[i] = pushes & (1 << i);
                        return choice;
                    }
                }
            return std::nullopt;
        }

        const vector<EdgeSpec> pair_edges{{0, 0, true}, {0, 1, false}, {1, 1, true}};
        const vector<EdgeSpec> three_edges{{0, 0, true}, {1, 1, true}, {2, 2, true}, {0, 2, false}, {1, 2, false}};
    }

    auto ExtensionTables::complete() const -> bool
    {
        auto full = [](auto & table) { return std::all_of(table.begin(), table.end(), [](auto & c) { return c.has_value(); }); };
        return pair.size() == 16 * 8 && degree_three.size() == 64 * 32 && full(pair) && full(degree_three);
    }

    auto ExtensionTables::checksum() const -> std::uint64_t
    {
        std::uint64_t hash = 14695981039346656037ull;
        auto mix = [&](std::uint64_t byte) {
            hash ^= byte;
            hash *= 1099511628211ull;
        };
        for (auto table : {&pair, &degree_three})
            for (auto & c : *table) {
                if (! c) {
                    mix(0xff);
                    continue;
                }
                for (int i = 0; i < 3; ++i) {
                    mix(std::uint64_t(c->colour[i]));
                    mix(c->pushed[i] ? 1 : 0);
                }
            }
        return hash;
    }

    auto build_extension_tables() -> ExtensionTables
    {
        auto target = paley_plus();
        ExtensionTables tables;
        for (int c1 = 0; c1 < 4; ++c1)
            for (int c2 = 0; c2 < 4; ++c2)
                for (unsigned pattern = 0; pattern < 8; ++pattern)
                    tables.pair.push_back(solve_case(target, 2, pair_edges, {c1, c2}, pattern));

        for (int c1 = 0; c1 < 4; ++c1)
            for (int c2 = 0; c2 < 4; ++c2)
                for (int c3 = 0; c3 < 4; ++c3)
                    for (unsigned pattern = 0; pattern < 32; ++pattern)
                        tables.degree_three.push_back(solve_case(target, 3, three_edges, {c1, c2, c3}, pattern));
        return tables;
    }

    auto extension_tables() -> const ExtensionTables &
    {
        static const ExtensionTables tables = [] {
            auto t = build_extension_tables();
            if (! t.complete())
                throw ColoringError("extension tables are incomplete: a configuration is not reducible into P3+");
            return t;
        }();
        return tables;
    }

    auto verify_certificate(const OrientedGraph & g, const ColoringCertificate & cert) -> bool
    {
        return is_push_hom_witness(g, cert.target, cert.witness);
    }

    auto replay_trace(const OrientedGraph & g, const vector<ConfigDescriptor> & trace) -> bool
    {
        Remaining remaining{g};
        for (auto & step : trace) {
            if (! remaining.holds(step))
                return false;
            remaining.remove(step.removed);
        }
        return remaining.empty();
    }

    auto push_color_to_paley(const OrientedGraph & g) -> ColoringCertificate
    {
        if (! (max_average_degree(g) < Rational{8, 3}))
            throw ColoringError("push_color_to_paley needs maximum average degree below 8/3");

        auto & tables = extension_tables();
        auto target = paley_plus();

        Remaining remaining{g};
        vector<ConfigDescriptor> trace;
        while (! remaining.empty()) {
            auto config = remaining.find();
            if (! config)
                throw ColoringError("no reducible configuration in a non-empty graph of maximum average degree below 8/3");
            remaining.remove(config->removed);
            trace.push_back(*config);
        }

        vector<int> colour(g.order(), -1);
        vector<bool> pushed(g.order(), false);

        // sense of the arc between removed vertex p and q in the current
        // presentation, before p is pushed: true if it points away from p
        auto away = [&](Vertex p, Vertex q, bool q_decided) {
            bool result = g.has_arc(p, q);
            if (q_decided && pushed[q])
                result = ! result;
            return result;
        };

        for (auto step = trace.rbegin(); step != trace.rend(); ++step) {
            auto & r = step->removed;
            auto & b = step->boundary;
            switch (step->kind) {
            case ConfigKind::degree_at_most_one: {
                auto v = r[0];
                if (b.empty()) {
                    colour[v] = 0;
                    break;
                }
                auto u = b[0];
                bool out = away(v, u, true);
                // every P3+ vertex has a neighbour; push v when only the
                // opposite sense is available
                auto & same = out ? target.in_neighbours(colour[u]) : target.out_neighbours(colour[u]);
                auto & flipped = out ? target.out_neighbours(colour[u]) : target.in_neighbours(colour[u]);
                if (! same.empty())
                    colour[v] = same.front();
                else {
                    colour[v] = flipped.front();
                    pushed[v] = true;
                }
                break;
            }
            case ConfigKind::adjacent_degree_two_pair: {
                unsigned pattern = (away(r[0], b[0], true) ? 1u : 0u) | (away(r[0], r[1], false) ? 2u : 0u)
                    | (away(r[1], b[1], true) ? 4u : 0u);
                auto & choice = tables.pair.at((colour[b[0]] * 4 + colour[b[1]]) * 8 + pattern);
                if (! choice)
                    throw ColoringError("extension table miss");
                for (int i = 0; i < 2; ++i) {
                    colour[r[i]] = choice->colour[i];
                    pushed[r[i]] = choice->pushed[i];
                }
                break;
            }
            case ConfigKind::degree_three_with_two_degree_two_neighbours: {
                unsigned pattern = (away(r[0], b[0], true) ? 1u : 0u) | (away(r[1], b[1], true) ? 2u : 0u)
                    | (away(r[2], b[2], true) ? 4u : 0u) | (away(r[0], r[2], false) ? 8u : 0u) | (away(r[1], r[2], false) ? 16u : 0u);
                auto & choice = tables.degree_three.at(((colour[b[0]] * 4 + colour[b[1]]) * 4 + colour[b[2]]) * 32 + pattern);
                if (! choice)
                    throw ColoringError("extension table miss");
                for (int i = 0; i < 3; ++i) {
                    colour[r[i]] = choice->colour[i];
                    pushed[r[i]] = choice->pushed[i];
                }
                break;
            }
            }
        }

        ColoringCertificate cert{target, PushHomWitness{PushVector::from_mask(pushed), VertexMapping{colour}}, std::move(trace)};
        if (! verify_certificate(g, cert))
            throw ColoringError("internal error: P3+ colouring failed verification");
        return cert;
    }

    auto color_outerplanar_g5(const OrientedGraph & g, const SearchBudget & budget) -> ColoringCertificate
    {
        auto target = c3();
        auto search = find_push_hom(g, target, budget);
        if (search.verdict == SearchVerdict::budget_exhausted)
            throw ColoringError("push colouring into C3 ran out of budget after " + std::to_string(search.nodes) + " nodes");
        if (! search.witness)
            throw ColoringError("COUNTEREXAMPLE: no push homomorphism into C3 for\n" + emit_graph(g));
        ColoringCertificate cert{target, *search.witness, {}};
        if (! verify_certificate(g, cert))
            throw ColoringError("internal error: C3 colouring failed verification");
        return cert;
    }
}
