/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Brute-force references. Slow on purpose: no pruning, no cleverness.

#ifndef PUSHHOM_GUARD_TESTS_ORACLES_HH
#define PUSHHOM_GUARD_TESTS_ORACLES_HH 1

#include <pushhom/families.hh>
#include <pushhom/graph.hh>
#include <pushhom/push.hh>

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace oracle
{
    using namespace pushhom;

    inline auto adjacency_string(const OrientedGraph & g, const std::vector<Vertex> & perm) -> std::string
    {
        // perm[v] = position of v
        int n = g.order();
        std::vector<Vertex> at(n);
        for (Vertex v = 0; v < n; ++v)
            at[perm[v]] = v;
        std::string s;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                s += g.has_arc(at[i], at[j]) ? '1' : g.has_arc(at[j], at[i]) ? '2' : '0';
        return s;
    }

    inline auto canonical(const OrientedGraph & g) -> std::string
    {
        std::vector<Vertex> perm(g.order());
        std::iota(perm.begin(), perm.end(), 0);
        std::string best;
        bool first = true;
        do {
            auto s = adjacency_string(g, perm);
            if (first || s < best)
                best = s;
            first = false;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return std::to_string(g.order()) + ":" + best;
    }

    inline auto isomorphic(const OrientedGraph & g, const OrientedGraph & h) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size())
            return false;
        std::vector<Vertex> f(g.order());
        std::iota(f.begin(), f.end(), 0);
        do {
            if (is_homomorphism(g, h, VertexMapping{f}))
                return true;
        } while (std::next_permutation(f.begin(), f.end()));
        return false;
    }

    inline auto push_equivalent(const OrientedGraph & g, const OrientedGraph & h) -> bool
    {
        if (g.order() != h.order() || g.size() != h.size())
            return false;
        auto ch = canonical(h);
        for (unsigned long long s = 0; s < (1ull << g.order()); ++s)
            if (canonical(push(g, PushVector::from_bits(s, g.order()))) == ch)
                return true;
        return false;
    }

    // every map V(g) -> V(h), odometer style
    inline auto hom_exists(const OrientedGraph & g, const OrientedGraph & h) -> bool
    {
        int n = g.order(), m = h.order();
        if (n == 0)
            return true;
        if (m == 0)
            return false;
        std::vector<Vertex> f(n, 0);
        while (true) {
            if (is_homomorphism(g, h, VertexMapping{f}))
                return true;
            int i = 0;
            while (i < n && ++f[i] == m)
                f[i++] = 0;
            if (i == n)
                return false;
        }
    }

    inline auto push_hom_exists(const OrientedGraph & g, const OrientedGraph & h) -> bool
    {
        for (unsigned long long s = 0; s < (1ull << g.order()); ++s)
            if (hom_exists(push(g, PushVector::from_bits(s, g.order())), h))
                return true;
        return false;
    }

    // remove each edge, shortest path between its ends
    inline auto girth(const OrientedGraph & g) -> std::optional<int>
    {
        std::optional<int> best;
        for (auto & a : g.arcs()) {
            std::vector<int> dist(g.order(), -1);
            std::deque<Vertex> queue{a.from};
            dist[a.from] = 0;
            while (! queue.empty()) {
                auto v = queue.front();
                queue.pop_front();
                for (auto w : g.neighbours(v)) {
                    if ((v == a.from && w == a.to) || (v == a.to && w == a.from))
                        continue;
                    if (dist[w] == -1) {
                        dist[w] = dist[v] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if (dist[a.to] != -1 && (! best || dist[a.to] + 1 < *best))
                best = dist[a.to] + 1;
        }
        return best;
    }

    inline auto mad(const OrientedGraph & g) -> Rational
    {
        Rational best{0};
        for (unsigned long long s = 1; s < (1ull << g.order()); ++s) {
            long edges = 0, vertices = std::popcount(s);
            for (auto & a : g.arcs())
                if ((s >> a.from & 1) && (s >> a.to & 1))
                    ++edges;
            best = std::max(best, Rational{2 * edges, vertices});
        }
        return best;
    }

    inline auto all_orientations_of_complete(int k) -> std::vector<OrientedGraph>
    {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                pairs.push_back({i, j});
        std::vector<OrientedGraph> result;
        for (unsigned long long bits = 0; bits < (1ull << pairs.size()); ++bits) {
            std::vector<Arc> arcs;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                arcs.push_back((bits >> e & 1) ? Arc{pairs[e].first, pairs[e].second} : Arc{pairs[e].second, pairs[e].first});
            result.emplace_back(k, arcs);
        }
        return result;
    }

    // every interior push set and every colouring of the path
    inline auto path_feasible(const PathPattern & p, Vertex a, Vertex b) -> bool
    {
        int m = p.length();
        auto path = oriented_path(p);
        auto c = c3();
        int interior = std::max(0, m - 1);
        for (unsigned s = 0; s < (1u << interior); ++s) {
            auto pushed = push(path, PushVector::from_bits(static_cast<unsigned long long>(s) << 1, m + 1));
            int total = 1;
            for (int i = 0; i <= m; ++i)
                total *= 3;
            for (int code = 0; code < total; ++code) {
                std::vector<Vertex> f(m + 1);
                for (int i = 0, r = code; i <= m; ++i, r /= 3)
                    f[i] = r % 3;
                if (f[0] == a && f[m] == b && is_homomorphism(pushed, c, VertexMapping{f}))
                    return true;
            }
        }
        return false;
    }

    inline auto random_graph(int n, double density, std::mt19937_64 & rng) -> OrientedGraph
    {
        std::bernoulli_distribution edge(density), coin(0.5);
        std::vector<Arc> arcs;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (edge(rng))
                    arcs.push_back(coin(rng) ? Arc{i, j} : Arc{j, i});
        return OrientedGraph{n, arcs};
    }
}

#endif
