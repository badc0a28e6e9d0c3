/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/isomorphism.hh>

#include <algorithm>
#include <numeric>
#include <tuple>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace pushhom
{
    namespace
    {
        // 0 = not adjacent, 1 = u -> v, 2 = v -> u
        struct AdjacencyMatrix
        {
            int n;
            vector<std::int8_t> cells;

            explicit AdjacencyMatrix(const OrientedGraph & g) :
                n(g.order()),
                cells(std::size_t(g.order()) * g.order(), 0)
            {
                for (auto & [u, v] : g.arcs()) {
                    cells[std::size_t(u) * n + v] = 1;
                    cells[std::size_t(v) * n + u] = 2;
                }
            }

            auto operator()(Vertex u, Vertex v) const -> std::int8_t { return cells[std::size_t(u) * n + v]; }
        };

        auto count_colours(const vector<int> & colours) -> int
        {
            return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
        }
    }

    auto refine_colours(const OrientedGraph & g, vector<int> colours) -> vector<int>
    {
        int n = g.order();
        if (colours.empty())
            colours.assign(n, 0);

        using Signature = std::tuple<int, vector<int>, vector<int>>;
        vector<Signature> signatures(n);
        vector<int> order(n);

        // normalise the initial colours to dense ranks
        int classes = -1;
        while (true) {
            for (Vertex v = 0; v < n; ++v) {
                auto & [own, outs, ins] = signatures[v];
                own = colours[v];
                outs.clear();
                ins.clear();
                for (auto w : g.out_neighbours(v))
                    outs.push_back(colours[w]);
                for (auto w : g.in_neighbours(v))
                    ins.push_back(colours[w]);
                std::sort(outs.begin(), outs.end());
                std::sort(ins.begin(), ins.end());
            }

            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) { return signatures[a] < signatures[b]; });

            int rank = -1;
            for (int i = 0; i < n; ++i) {
                if (i == 0 || signatures[order[i]] != signatures[order[i - 1]])
                    ++rank;
                colours[order[i]] = rank;
            }

            if (rank + 1 == classes)
                break;
            classes = rank + 1;
        }
        return colours;
    }

    auto find_isomorphism(const OrientedGraph & g, const OrientedGraph & h) -> optional<IsoCertificate>
    {
        int n = g.order();
        if (n != h.order() || g.size() != h.size())
            return std::nullopt;
        if (n == 0)
            return IsoCertificate{};

        OrientedGraph both_parts[2] = {g, h};
        auto joint = refine_colours(disjoint_union(both_parts));
        vector<int> g_colour(joint.begin(), joint.begin() + n), h_colour(joint.begin() + n, joint.end());

        int classes = count_colours(joint);
        vector<int> class_size(classes, 0), check(classes, 0);
        for (auto c : g_colour)
            ++class_size[c];
        for (auto c : h_colour)
            ++check[c];
        if (class_size != check)
            return std::nullopt;

        AdjacencyMatrix g_adj(g), h_adj(h);

        // static order: grow from the rarest colour along adjacency
        vector<Vertex> order;
        vector<bool> placed(n, false);
        vector<int> placed_neighbours(n, 0);
        for (int step = 0; step < n; ++step) {
            Vertex best = -1;
            for (Vertex v = 0; v < n; ++v) {
                if (placed[v])
                    continue;
                if (best == -1 || std::make_tuple(-placed_neighbours[v], class_size[g_colour[v]], v) <
                        std::make_tuple(-placed_neighbours[best], class_size[g_colour[best]], best))
                    best = v;
            }
            placed[best] = true;
            order.push_back(best);
            for (auto w : g.neighbours(best))
                ++placed_neighbours[w];
        }

        vector<vector<Vertex>> by_colour(classes);
        for (Vertex w = 0; w < n; ++w)
            by_colour[h_colour[w]].push_back(w);

        vector<Vertex> image(n, -1);
        vector<bool> used(n, false);

        auto consistent = [&](int depth, Vertex v, Vertex w) {
            for (int i = 0; i < depth; ++i)
                if (g_adj(v, order[i]) != h_adj(w, image[order[i]]))
                    return false;
            return true;
        };

        auto search = [&](auto & self, int depth) -> bool {
            if (depth == n)
                return true;
            auto v = order[depth];
            for (auto w : by_colour[g_colour[v]]) {
                if (used[w] || ! consistent(depth, v, w))
                    continue;
                image[v] = w;
                used[w] = true;
                if (self(self, depth + 1))
                    return true;
                used[w] = false;
                image[v] = -1;
            }
            return false;
        };

        if (! search(search, 0))
            return std::nullopt;

        IsoCertificate result{VertexMapping{image}};
        if (! is_isomorphism(g, h, result.mapping))
            throw GraphError("internal error: isomorphism search produced an invalid certificate");
        return result;
    }

    namespace
    {
        struct CanonicalSearch
        {
            const OrientedGraph & g;
            AdjacencyMatrix adj;
            string best_code;
            vector<Vertex> best_labelling;

            explicit CanonicalSearch(const OrientedGraph & graph) :
                g(graph),
                adj(graph)
            {
            }

            auto code_for(const vector<int> & position) const -> string
            {
                int n = g.order();
                vector<Vertex> at(n);
                for (Vertex v = 0; v < n; ++v)
                    at[position[v]] = v;
                string code;
                code.reserve(1 + n * (n - 1) / 2);
                code.push_back(char(n));
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        code.push_back(char('0' + adj(at[i], at[j])));
                return code;
            }

            // u and w can be exchanged by an automorphism fixing everything else
            auto twins(Vertex u, Vertex w) const -> bool
            {
                if (adj(u, w) != 0)
                    return false;
                for (Vertex x = 0; x < g.order(); ++x)
                    if (x != u && x != w && adj(u, x) != adj(w, x))
                        return false;
                return true;
            }

            auto search(const vector<int> & colours) -> void
            {
                int n = g.order();
                int classes = count_colours(colours);
                if (classes == n) {
                    auto code = code_for(colours);
                    if (best_labelling.empty() || code < best_code) {
                        best_code = std::move(code);
                        best_labelling = colours;
                    }
                    return;
                }

                // first non-singleton cell in colour order
                vector<int> size(classes, 0);
                for (auto c : colours)
                    ++size[c];
                int target = 0;
                while (size[target] == 1)
                    ++target;

                vector<Vertex> tried;
                for (Vertex v = 0; v < n; ++v) {
                    if (colours[v] != target)
                        continue;
                    if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(u, v); }))
                        continue;
                    tried.push_back(v);

                    vector<int> individualised(n);
                    for (Vertex x = 0; x < n; ++x)
                        individualised[x] = 2 * colours[x] + (x == v ? 0 : 1);
                    search(refine_colours(g, std::move(individualised)));
                }
            }
        };

        auto run_canonical(const OrientedGraph & g) -> CanonicalSearch
        {
            if (g.order() > canonical_code_limit)
                throw GraphError("canonical_code limited to " + to_string(canonical_code_limit) + " vertices, got " + to_string(g.order()));
            CanonicalSearch search{g};
            if (g.order() == 0)
                search.best_code = string(1, char(0));
            else
                search.search(refine_colours(g));
            return search;
        }
    }

    auto canonical_code(const OrientedGraph & g) -> string
    {
        return run_canonical(g).best_code;
    }

    auto canonical_labelling(const OrientedGraph & g) -> vector<Vertex>
    {
        return run_canonical(g).best_labelling;
    }
}
