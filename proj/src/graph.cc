/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/graph.hh>
#include <pushhom/isomorphism.hh>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boykov_kolmogorov_max_flow.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

using std::optional;
using std::span;
using std::string;
using std::to_string;
using std::vector;

namespace pushhom
{
    GraphError::GraphError(const string & what) :
        std::invalid_argument(what)
    {
    }

    namespace
    {
        auto checked_order(int n) -> int
        {
            if (n < 0)
                throw GraphError("negative vertex count " + to_string(n));
            return n;
        }
    }

    OrientedGraph::OrientedGraph(int n, span<const Arc> arcs) :
        _order(n),
        _arcs(arcs.begin(), arcs.end()),
        _out(checked_order(n)),
        _in(n)
    {

        for (auto & [u, v] : _arcs) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw GraphError("arc (" + to_string(u) + "," + to_string(v) + ") has an endpoint outside [0," + to_string(n) + ")");
            if (u == v)
                throw GraphError("loop at vertex " + to_string(u));
        }

        std::sort(_arcs.begin(), _arcs.end());
        _arcs.erase(std::unique(_arcs.begin(), _arcs.end()), _arcs.end());

        for (auto & [u, v] : _arcs) {
            if (std::binary_search(_arcs.begin(), _arcs.end(), Arc{v, u}))
                throw GraphError("2-cycle between " + to_string(std::min(u, v)) + " and " + to_string(std::max(u, v)));
            _out[u].push_back(v);
            _in[v].push_back(u);
        }

        for (auto & l : _in)
            std::sort(l.begin(), l.end());
    }

    OrientedGraph::OrientedGraph(int n, std::initializer_list<Arc> arcs) :
        OrientedGraph(n, span<const Arc>{arcs.begin(), arcs.size()})
    {
    }

    auto OrientedGraph::check_vertex(Vertex v) const -> void
    {
        if (v < 0 || v >= _order)
            throw GraphError("vertex " + to_string(v) + " outside [0," + to_string(_order) + ")");
    }

    auto OrientedGraph::out_neighbours(Vertex v) const -> const vector<Vertex> &
    {
        check_vertex(v);
        return _out[v];
    }

    auto OrientedGraph::in_neighbours(Vertex v) const -> const vector<Vertex> &
    {
        check_vertex(v);
        return _in[v];
    }

    auto OrientedGraph::out_degree(Vertex v) const -> int
    {
        return int(out_neighbours(v).size());
    }

    auto OrientedGraph::in_degree(Vertex v) const -> int
    {
        return int(in_neighbours(v).size());
    }

    auto OrientedGraph::degree(Vertex v) const -> int
    {
        return out_degree(v) + in_degree(v);
    }

    auto OrientedGraph::neighbours(Vertex v) const -> vector<Vertex>
    {
        vector<Vertex> result;
        std::merge(_out.at(v).begin(), _out.at(v).end(), _in.at(v).begin(), _in.at(v).end(), std::back_inserter(result));
        return result;
    }

    auto OrientedGraph::has_arc(Vertex u, Vertex v) const -> bool
    {
        if (u < 0 || u >= _order || v < 0 || v >= _order)
            return false;
        return std::binary_search(_out[u].begin(), _out[u].end(), v);
    }

    auto OrientedGraph::adjacent(Vertex u, Vertex v) const -> bool
    {
        return has_arc(u, v) || has_arc(v, u);
    }

    auto new_graph(int n, span<const Arc> arcs) -> OrientedGraph
    {
        return OrientedGraph{n, arcs};
    }

    auto identity_mapping(int n) -> VertexMapping
    {
        VertexMapping result;
        result.image.resize(n);
        std::iota(result.image.begin(), result.image.end(), 0);
        return result;
    }

    auto is_homomorphism(const OrientedGraph & g, const OrientedGraph & h, const VertexMapping & f) -> bool
    {
        if (int(f.image.size()) != g.order())
            return false;
        for (auto w : f.image)
            if (w < 0 || w >= h.order())
                return false;
        for (auto & [u, v] : g.arcs())
            if (! h.has_arc(f.image[u], f.image[v]))
                return false;
        return true;
    }

    auto is_isomorphism(const OrientedGraph & g, const OrientedGraph & h, const VertexMapping & f) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size() || ! is_homomorphism(g, h, f))
            return false;
        vector<bool> seen(h.order(), false);
        for (auto w : f.image) {
            if (seen[w])
                return false;
            seen[w] = true;
        }
        // injective and arc counts equal, so the arc map is onto as well
        return true;
    }

    auto inverse(const VertexMapping & f, int target_order) -> VertexMapping
    {
        VertexMapping result;
        result.image.assign(target_order, -1);
        for (Vertex v = 0; v < int(f.image.size()); ++v)
            result.image.at(f.image[v]) = v;
        return result;
    }

    auto relabel(const OrientedGraph & g, span<const Vertex> perm) -> OrientedGraph
    {
        vector<Arc> arcs;
        arcs.reserve(g.size());
        for (auto & [u, v] : g.arcs())
            arcs.push_back({perm[u], perm[v]});
        return OrientedGraph{g.order(), arcs};
    }

    auto underlying_girth(const OrientedGraph & g) -> optional<int>
    {
        optional<int> best;
        vector<int> dist(g.order()), parent(g.order());
        vector<vector<Vertex>> nbrs(g.order());
        for (Vertex v = 0; v < g.order(); ++v)
            nbrs[v] = g.neighbours(v);

        for (Vertex s = 0; s < g.order(); ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            dist[s] = 0;
            parent[s] = -1;
            std::queue<Vertex> queue;
            queue.push(s);
            while (! queue.empty()) {
                auto u = queue.front();
                queue.pop();
                if (best && 2 * dist[u] + 1 >= *best)
                    break;
                for (auto w : nbrs[u]) {
                    if (dist[w] == -1) {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push(w);
                    }
                    else if (parent[u] != w) {
                        int len = dist[u] + dist[w] + 1;
                        if (! best || len < *best)
                            best = len;
                    }
                }
            }
        }
        return best;
    }

    namespace
    {
        using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;
        using FlowGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS,
              boost::property<boost::vertex_color_t, boost::default_color_type,
                  boost::property<boost::vertex_distance_t, long,
                      boost::property<boost::vertex_predecessor_t, FlowTraits::edge_descriptor>>>,
              boost::property<boost::edge_capacity_t, std::int64_t,
                  boost::property<boost::edge_residual_capacity_t, std::int64_t,
                      boost::property<boost::edge_reverse_t, FlowTraits::edge_descriptor>>>>;

        struct Edge
        {
            Vertex a, b;
        };

        // Returns a vertex set maximising edge_weight * |E(S)| - vertex_weight * |S|
        // (possibly empty when nothing beats zero).
        auto densest_for(int n, const vector<Edge> & edges, std::int64_t edge_weight, std::int64_t vertex_weight) -> vector<Vertex>
        {
            // source -> edge node -> both endpoints -> sink; an edge node can
            // only stay on the source side with both of its endpoints
            int m = int(edges.size());
            FlowGraph flow(n + m + 2);
            auto source = n + m, sink = n + m + 1;
            auto capacity = get(boost::edge_capacity, flow);
            auto reverse = get(boost::edge_reverse, flow);
            std::int64_t infinite = edge_weight * (m + 1) + vertex_weight * (n + 1);

            auto add = [&](long a, long b, std::int64_t cap) {
                auto e = add_edge(a, b, flow).first;
                auto r = add_edge(b, a, flow).first;
                capacity[e] = cap;
                capacity[r] = 0;
                reverse[e] = r;
                reverse[r] = e;
            };

            for (int i = 0; i < m; ++i) {
                add(source, n + i, edge_weight);
                add(n + i, edges[i].a, infinite);
                add(n + i, edges[i].b, infinite);
            }
            for (int v = 0; v < n; ++v)
                add(v, sink, vertex_weight);

            boost::boykov_kolmogorov_max_flow(flow, source, sink);

            auto colour = get(boost::vertex_color, flow);
            auto source_colour = colour[source];
            vector<Vertex> result;
            for (int v = 0; v < n; ++v)
                if (colour[v] == source_colour)
                    result.push_back(v);
            return result;
        }

        auto edges_within(const vector<Edge> & edges, const vector<Vertex> & set, int n) -> std::int64_t
        {
            vector<bool> in(n, false);
            for (auto v : set)
                in[v] = true;
            return std::count_if(edges.begin(), edges.end(), [&](const Edge & e) { return in[e.a] && in[e.b]; });
        }
    }

    auto max_average_degree(const OrientedGraph & g) -> Rational
    {
        int n = g.order();
        if (n == 0)
            return Rational{0};

        vector<Edge> edges;
        for (auto & [u, v] : g.arcs())
            edges.push_back({u, v});

        // Dinkelbach: each round either certifies the current density as
        // maximal or finds a strictly denser vertex set
        Rational density{std::int64_t(edges.size()), n};
        while (true) {
            auto set = densest_for(n, edges, density.denominator(), density.numerator());
            if (set.empty())
                break;
            Rational candidate{edges_within(edges, set, n), std::int64_t(set.size())};
            if (candidate <= density)
                break;
            density = candidate;
        }
        return density * 2;
    }

    auto induced_subgraph(const OrientedGraph & g, span<const Vertex> keep) -> OrientedGraph
    {
        vector<int> position(g.order(), -1);
        for (int i = 0; i < int(keep.size()); ++i) {
            g.check_vertex(keep[i]);
            position[keep[i]] = i;
        }
        vector<Arc> arcs;
        for (auto & [u, v] : g.arcs())
            if (position[u] != -1 && position[v] != -1)
                arcs.push_back({position[u], position[v]});
        return OrientedGraph{int(keep.size()), arcs};
    }

    auto disjoint_union(span<const OrientedGraph> gs) -> OrientedGraph
    {
        int offset = 0;
        vector<Arc> arcs;
        for (auto & g : gs) {
            for (auto & [u, v] : g.arcs())
                arcs.push_back({u + offset, v + offset});
            offset += g.order();
        }
        return OrientedGraph{offset, arcs};
    }

    auto identify_vertices(const OrientedGraph & g, const vector<vector<Vertex>> & classes) -> OrientedGraph
    {
        vector<int> representative(g.order());
        std::iota(representative.begin(), representative.end(), 0);
        vector<bool> mentioned(g.order(), false);
        for (auto & c : classes) {
            if (c.empty())
                continue;
            auto smallest = *std::min_element(c.begin(), c.end());
            for (auto v : c) {
                g.check_vertex(v);
                if (mentioned[v])
                    throw GraphError("vertex " + to_string(v) + " appears in more than one class");
                mentioned[v] = true;
                representative[v] = smallest;
            }
        }

        vector<int> number(g.order(), -1);
        int count = 0;
        for (Vertex v = 0; v < g.order(); ++v)
            if (representative[v] == v)
                number[v] = count++;

        vector<Arc> arcs;
        for (auto & [u, v] : g.arcs()) {
            auto a = number[representative[u]], b = number[representative[v]];
            if (a == b)
                throw GraphError("identifying " + to_string(u) + " and " + to_string(v) + " creates a loop");
            arcs.push_back({a, b});
        }

        std::sort(arcs.begin(), arcs.end());
        for (auto & [a, b] : arcs)
            if (std::binary_search(arcs.begin(), arcs.end(), Arc{b, a}))
                throw GraphError("identification creates a 2-cycle between quotient vertices " + to_string(std::min(a, b)) + " and "
                    + to_string(std::max(a, b)));

        return OrientedGraph{count, arcs};
    }

    auto enumerate_oriented_graphs(int n) -> vector<OrientedGraph>
    {
        if (n < 0 || n > 6)
            throw GraphError("enumerate_oriented_graphs supports 0 <= n <= 6");

        vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                pairs.emplace_back(u, v);

        std::map<string, OrientedGraph> classes;
        long total = 1;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            total *= 3;

        vector<Arc> arcs;
        for (long code = 0; code < total; ++code) {
            arcs.clear();
            long rest = code;
            for (auto & [u, v] : pairs) {
                switch (rest % 3) {
                case 1: arcs.push_back({u, v}); break;
                case 2: arcs.push_back({v, u}); break;
                default: break;
                }
                rest /= 3;
            }
            OrientedGraph g{n, arcs};
            classes.try_emplace(canonical_code(g), g);
        }

        vector<OrientedGraph> result;
        for (auto & [_, g] : classes)
            result.push_back(g);
        return result;
    }
}
