/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/push.hh>
#include <pushhom/isomorphism.hh>

#include <algorithm>
#include <map>
#include <set>

using std::optional;
using std::string;
using std::to_string;
using std::vector;

namespace pushhom
{
    PushVector::PushVector(vector<Vertex> vertices) :
        _vertices(std::move(vertices))
    {
        std::sort(_vertices.begin(), _vertices.end());
        _vertices.erase(std::unique(_vertices.begin(), _vertices.end()), _vertices.end());
    }

    auto PushVector::from_mask(const vector<bool> & mask) -> PushVector
    {
        vector<Vertex> vertices;
        for (Vertex v = 0; v < int(mask.size()); ++v)
            if (mask[v])
                vertices.push_back(v);
        return PushVector{std::move(vertices)};
    }

    auto PushVector::from_bits(unsigned long long bits, int n) -> PushVector
    {
        vector<Vertex> vertices;
        for (Vertex v = 0; v < n; ++v)
            if (bits & (1ull << v))
                vertices.push_back(v);
        return PushVector{std::move(vertices)};
    }

    auto PushVector::contains(Vertex v) const -> bool
    {
        return std::binary_search(_vertices.begin(), _vertices.end(), v);
    }

    auto PushVector::mask(int n) const -> vector<bool>
    {
        vector<bool> result(n, false);
        for (auto v : _vertices) {
            if (v < 0 || v >= n)
                throw GraphError("push vector vertex " + to_string(v) + " outside [0," + to_string(n) + ")");
            result[v] = true;
        }
        return result;
    }

    auto push(const OrientedGraph & g, const PushVector & s) -> OrientedGraph
    {
        auto pushed = s.mask(g.order());
        vector<Arc> arcs;
        arcs.reserve(g.size());
        for (auto & [u, v] : g.arcs()) {
            if (pushed[u] != pushed[v])
                arcs.push_back({v, u});
            else
                arcs.push_back({u, v});
        }
        return OrientedGraph{g.order(), arcs};
    }

    auto anti_twinned(const OrientedGraph & g) -> OrientedGraph
    {
        int n = g.order();
        vector<Arc> arcs;
        arcs.reserve(4 * g.size());
        for (auto & [i, j] : g.arcs()) {
            arcs.push_back({i, j});
            arcs.push_back({i + n, j + n});
            arcs.push_back({j, i + n});
            arcs.push_back({j + n, i});
        }
        return OrientedGraph{2 * n, arcs};
    }

    auto respects_anti_twins(const VertexMapping & f, int base_order) -> bool
    {
        AntiTwinLayout layout{base_order};
        for (Vertex v = 0; v < base_order; ++v)
            if (f.image.at(layout.twin(v)) != layout.twin(f.image.at(v)))
                return false;
        return true;
    }

    auto repair_isomorphism(const OrientedGraph & g, const OrientedGraph & h, const IsoCertificate & f) -> RepairResult
    {
        auto rg = anti_twinned(g), rh = anti_twinned(h);
        if (! is_isomorphism(rg, rh, f.mapping))
            throw GraphError("repair_isomorphism needs an isomorphism between the anti-twinned graphs");

        int n = g.order();
        AntiTwinLayout layout{n};
        auto image = f.mapping.image;
        auto preimage = inverse(f.mapping, 2 * n).image;

        int passes = 0;
        for (Vertex v = 0; v < n; ++v) {
            auto v_twin = layout.twin(v);
            auto wanted = layout.twin(image[v]);
            if (image[v_twin] == wanted)
                continue;

            // exchange the images of v' and u = f^-1(f(v)')
            auto u = preimage[wanted];
            std::swap(image[v_twin], image[u]);
            preimage[image[v_twin]] = v_twin;
            preimage[image[u]] = u;
            ++passes;
        }

        RepairResult result{IsoCertificate{VertexMapping{image}}, passes};
        if (! respects_anti_twins(result.isomorphism.mapping, n) || ! is_isomorphism(rg, rh, result.isomorphism.mapping))
            throw GraphError("internal error: repaired mapping failed verification");
        return result;
    }

    auto push_equivalent(const OrientedGraph & g, const OrientedGraph & h) -> optional<PushEquivCertificate>
    {
        if (g.order() != h.order() || g.size() != h.size())
            return std::nullopt;

        auto iso = find_isomorphism(anti_twinned(g), anti_twinned(h));
        if (! iso)
            return std::nullopt;

        int n = g.order();
        AntiTwinLayout layout{n};
        auto repaired = repair_isomorphism(g, h, *iso).isomorphism.mapping;

        vector<Vertex> pushed;
        VertexMapping bijection;
        for (Vertex v = 0; v < n; ++v) {
            if (layout.primed(repaired.image[v]))
                pushed.push_back(v);
            bijection.image.push_back(layout.base(repaired.image[v]));
        }

        PushEquivCertificate result{PushVector{pushed}, IsoCertificate{bijection}};
        if (! is_isomorphism(push(g, result.push_vector), h, bijection))
            throw GraphError("internal error: push equivalence certificate failed verification");
        return result;
    }

    auto is_valid_split(const OrientedGraph & g, const SplitCertificate & cert) -> bool
    {
        int n = g.order();
        if (n % 2 != 0 || int(cert.first_half.size()) * 2 != n || cert.partner.size() != cert.first_half.size())
            return false;

        vector<bool> seen(n, false);
        for (auto list : {&cert.first_half, &cert.partner})
            for (auto v : *list) {
                if (v < 0 || v >= n || seen[v])
                    return false;
                seen[v] = true;
            }

        for (std::size_t i = 0; i < cert.first_half.size(); ++i) {
            auto u = cert.first_half[i], w = cert.partner[i];
            if (g.out_neighbours(u) != g.in_neighbours(w) || g.in_neighbours(u) != g.out_neighbours(w))
                return false;
        }
        return true;
    }

    auto find_split(const OrientedGraph & g) -> optional<SplitCertificate>
    {
        int n = g.order();
        if (n % 2 != 0)
            return std::nullopt;

        // u and w can be partners iff (N+(w), N-(w)) = (N-(u), N+(u)), so the
        // candidate relation is complete bipartite between a signature class
        // and its mirror class, and a perfect pairing exists iff every mirror
        // pair of classes is balanced
        using Signature = std::pair<vector<Vertex>, vector<Vertex>>;
        std::map<Signature, vector<Vertex>> classes;
        for (Vertex v = 0; v < n; ++v)
            classes[{g.out_neighbours(v), g.in_neighbours(v)}].push_back(v);

        vector<std::pair<Vertex, Vertex>> pairs;
        for (auto & [signature, members] : classes) {
            Signature mirror{signature.second, signature.first};
            if (mirror == signature) {
                // only isolated vertices are their own mirror
                if (members.size() % 2 != 0)
                    return std::nullopt;
                for (std::size_t i = 0; i < members.size(); i += 2)
                    pairs.emplace_back(members[i], members[i + 1]);
                continue;
            }
            auto other = classes.find(mirror);
            if (other == classes.end() || other->second.size() != members.size())
                return std::nullopt;
            if (signature < mirror)
                for (std::size_t i = 0; i < members.size(); ++i)
                    pairs.emplace_back(members[i], other->second[i]);
        }

        std::sort(pairs.begin(), pairs.end());
        SplitCertificate result;
        for (auto & [u, w] : pairs) {
            result.first_half.push_back(u);
            result.partner.push_back(w);
        }

        if (! is_valid_split(g, result))
            throw GraphError("internal error: split certificate failed verification");
        return result;
    }

    auto anti_twin_split(int base_order) -> SplitCertificate
    {
        SplitCertificate result;
        for (Vertex v = 0; v < base_order; ++v) {
            result.first_half.push_back(v);
            result.partner.push_back(v + base_order);
        }
        return result;
    }

    auto split_graph(const OrientedGraph & g, const SplitCertificate & cert) -> OrientedGraph
    {
        if (! is_valid_split(g, cert))
            throw GraphError("invalid split certificate");

        auto result = induced_subgraph(g, cert.first_half);
        VertexMapping embedding;
        embedding.image = cert.first_half;
        embedding.image.insert(embedding.image.end(), cert.partner.begin(), cert.partner.end());
        if (! is_isomorphism(anti_twinned(result), g, embedding))
            throw GraphError("internal error: anti-twinned split graph does not reproduce the input");
        return result;
    }

    auto agree_disagree(const OrientedGraph & g, Vertex x, Vertex y) -> AgreeDisagreeStats
    {
        g.check_vertex(x);
        g.check_vertex(y);
        if (x == y)
            throw GraphError("agree_disagree needs two distinct vertices");

        AgreeDisagreeStats result;
        for (Vertex z = 0; z < g.order(); ++z) {
            if (z == x || z == y)
                continue;
            int sx = g.has_arc(x, z) ? 1 : g.has_arc(z, x) ? -1 : 0;
            int sy = g.has_arc(y, z) ? 1 : g.has_arc(z, y) ? -1 : 0;
            if (sx == 0 || sy == 0)
                continue;
            (sx == sy ? result.agree : result.disagree).push_back(z);
        }
        result.max_count = int(std::max(result.agree.size(), result.disagree.size()));
        result.min_count = int(std::min(result.agree.size(), result.disagree.size()));
        return result;
    }

    auto in_common_uc4(const OrientedGraph & g, Vertex x, Vertex y) -> bool
    {
        g.check_vertex(x);
        g.check_vertex(y);
        if (x == y)
            throw GraphError("in_common_uc4 needs two distinct vertices");
        if (g.adjacent(x, y))
            throw GraphError("in_common_uc4 is undefined for adjacent vertices " + to_string(x) + " and " + to_string(y));

        static const string uc4_code = canonical_code(OrientedGraph{4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}});

        for (Vertex a = 0; a < g.order(); ++a)
            for (Vertex b = a + 1; b < g.order(); ++b) {
                if (a == x || a == y || b == x || b == y)
                    continue;
                Vertex quad[4] = {x, y, a, b};
                // the three ways to close a 4-cycle through all of them
                const int cycles[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 1, 3, 2}};
                for (auto & cycle : cycles) {
                    vector<Arc> arcs;
                    for (int i = 0; i < 4; ++i) {
                        int p = cycle[i], q = cycle[(i + 1) % 4];
                        if (g.has_arc(quad[p], quad[q]))
                            arcs.push_back({p, q});
                        else if (g.has_arc(quad[q], quad[p]))
                            arcs.push_back({q, p});
                    }
                    if (arcs.size() == 4 && canonical_code(OrientedGraph{4, arcs}) == uc4_code)
                        return true;
                }
            }
        return false;
    }

    auto cannot_identify(const OrientedGraph & g, Vertex x, Vertex y) -> bool
    {
        if (g.adjacent(x, y))
            return true;
        return agree_disagree(g, x, y).min_count >= 1;
    }

    auto push_orbit(const OrientedGraph & g) -> vector<string>
    {
        int n = g.order();
        if (n > push_orbit_limit)
            throw GraphError("push_orbit limited to " + to_string(push_orbit_limit) + " vertices, got " + to_string(n));

        std::set<string> codes;
        for (unsigned long long bits = 0; bits < (1ull << n); ++bits)
            codes.insert(canonical_code(push(g, PushVector::from_bits(bits, n))));
        return {codes.begin(), codes.end()};
    }
}
