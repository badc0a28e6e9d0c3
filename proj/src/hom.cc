/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/hom.hh>
#include <pushhom/isomorphism.hh>

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <random>

using std::optional;
using std::string;
using std::uint64_t;
using std::vector;

using std::chrono::steady_clock;

namespace pushhom
{
    auto to_string(SearchVerdict v) -> string
    {
        switch (v) {
        case SearchVerdict::found: return "found";
        case SearchVerdict::absent: return "absent";
        case SearchVerdict::budget_exhausted: return "exhausted-budget";
        }
        return "unknown";
    }

    namespace
    {
        struct BudgetExceeded
        {
        };

        class HomSearcher
        {
        private:
            const OrientedGraph & g;
            const OrientedGraph & h;
            const SearchBudget & budget;

            int n, words;
            vector<uint64_t> h_out, h_in;    // h adjacency as bitsets, words per row
            vector<vector<Vertex>> g_out, g_in;
            vector<Vertex> value_order;
            steady_clock::time_point start;

        public:
            uint64_t nodes = 0;

            HomSearcher(const OrientedGraph & source, const OrientedGraph & target, const SearchBudget & b) :
                g(source),
                h(target),
                budget(b),
                n(source.order()),
                words((target.order() + 63) / 64),
                h_out(std::size_t(target.order()) * words, 0),
                h_in(std::size_t(target.order()) * words, 0),
                g_out(source.order()),
                g_in(source.order()),
                start(steady_clock::now())
            {
                for (auto & [u, v] : h.arcs()) {
                    h_out[std::size_t(u) * words + v / 64] |= 1ull << (v % 64);
                    h_in[std::size_t(v) * words + u / 64] |= 1ull << (u % 64);
                }
                for (Vertex v = 0; v < n; ++v) {
                    g_out[v] = g.out_neighbours(v);
                    g_in[v] = g.in_neighbours(v);
                }

                value_order.resize(h.order());
                std::iota(value_order.begin(), value_order.end(), 0);
                if (budget.seed) {
                    std::mt19937_64 rng(*budget.seed);
                    std::shuffle(value_order.begin(), value_order.end(), rng);
                }
            }

            auto run() -> optional<VertexMapping>
            {
                vector<uint64_t> domains(std::size_t(n) * words, 0);
                for (Vertex v = 0; v < n; ++v)
                    for (Vertex w = 0; w < h.order(); ++w) {
                        // (in, out)-degree dominance
                        if (! g_out[v].empty() && h.out_degree(w) == 0)
                            continue;
                        if (! g_in[v].empty() && h.in_degree(w) == 0)
                            continue;
                        domains[std::size_t(v) * words + w / 64] |= 1ull << (w % 64);
                    }

                for (Vertex v = 0; v < n; ++v)
                    if (count(domain(domains, v)) == 0)
                        return std::nullopt;

                vector<Vertex> all(n);
                std::iota(all.begin(), all.end(), 0);
                if (! propagate(domains, all))
                    return std::nullopt;
                return search(domains);
            }

        private:
            auto domain(vector<uint64_t> & domains, Vertex v) -> uint64_t *
            {
                return domains.data() + std::size_t(v) * words;
            }

            auto count(const uint64_t * d) const -> int
            {
                int result = 0;
                for (int i = 0; i < words; ++i)
                    result += std::popcount(d[i]);
                return result;
            }

            auto intersects(const uint64_t * a, const uint64_t * b) const -> bool
            {
                for (int i = 0; i < words; ++i)
                    if (a[i] & b[i])
                        return true;
                return false;
            }

            // keep w in D(a) iff w has a neighbour of the right sense in D(b)
            auto revise(vector<uint64_t> & domains, Vertex a, Vertex b, const vector<uint64_t> & rows) -> std::pair<bool, bool>
            {
                auto da = domain(domains, a);
                auto db = domain(domains, b);
                bool changed = false;
                bool nonempty = false;
                for (int i = 0; i < words; ++i) {
                    auto bits = da[i];
                    while (bits) {
                        int bit = std::countr_zero(bits);
                        bits &= bits - 1;
                        Vertex w = i * 64 + bit;
                        if (! intersects(rows.data() + std::size_t(w) * words, db)) {
                            da[i] &= ~(1ull << bit);
                            changed = true;
                        }
                    }
                    if (da[i])
                        nonempty = true;
                }
                return {changed, nonempty};
            }

            auto propagate(vector<uint64_t> & domains, vector<Vertex> queue) -> bool
            {
                vector<bool> queued(n, false);
                for (auto v : queue)
                    queued[v] = true;

                while (! queue.empty()) {
                    auto b = queue.back();
                    queue.pop_back();
                    queued[b] = false;

                    auto visit = [&](Vertex a, const vector<uint64_t> & rows) {
                        auto [changed, nonempty] = revise(domains, a, b, rows);
                        if (! nonempty)
                            return false;
                        if (changed && ! queued[a]) {
                            queued[a] = true;
                            queue.push_back(a);
                        }
                        return true;
                    };

                    // a -> b needs f(a) with an out-neighbour in D(b)
                    for (auto a : g_in[b])
                        if (! visit(a, h_out))
                            return false;
                    for (auto a : g_out[b])
                        if (! visit(a, h_in))
                            return false;
                }
                return true;
            }

            auto tick() -> void
            {
                ++nodes;
                if (nodes > budget.node_limit)
                    throw BudgetExceeded{};
                if ((nodes & 255) == 0) {
                    std::chrono::duration<double> elapsed = steady_clock::now() - start;
                    if (elapsed.count() > budget.time_limit_seconds)
                        throw BudgetExceeded{};
                }
            }

            auto search(vector<uint64_t> & domains) -> optional<VertexMapping>
            {
                Vertex branch = -1;
                int branch_size = 0;
                for (Vertex v = 0; v < n; ++v) {
                    int size = count(domain(domains, v));
                    if (size <= 1)
                        continue;
                    if (branch == -1 || size < branch_size
                        || (size == branch_size && int(g_out[v].size() + g_in[v].size()) > int(g_out[branch].size() + g_in[branch].size()))) {
                        branch = v;
                        branch_size = size;
                    }
                }

                if (branch == -1) {
                    VertexMapping result;
                    for (Vertex v = 0; v < n; ++v) {
                        auto d = domain(domains, v);
                        int i = 0;
                        while (d[i] == 0)
                            ++i;
                        result.image.push_back(i * 64 + std::countr_zero(d[i]));
                    }
                    return result;
                }

                auto current = domain(domains, branch);
                vector<uint64_t> saved(current, current + words);
                for (auto w : value_order) {
                    if (! (saved[w / 64] & (1ull << (w % 64))))
                        continue;
                    tick();
                    auto child = domains;
                    auto d = domain(child, branch);
                    std::fill(d, d + words, 0);
                    d[w / 64] = 1ull << (w % 64);
                    if (propagate(child, {branch}))
                        if (auto result = search(child))
                            return result;
                }
                return std::nullopt;
            }
        };

        auto fold(const VertexMapping & phi, int target_order) -> PushHomWitness
        {
            AntiTwinLayout layout{target_order};
            vector<Vertex> pushed;
            VertexMapping folded;
            for (Vertex v = 0; v < int(phi.image.size()); ++v) {
                if (layout.primed(phi.image[v]))
                    pushed.push_back(v);
                folded.image.push_back(layout.base(phi.image[v]));
            }
            return PushHomWitness{PushVector{pushed}, folded};
        }
    }

    auto find_hom(const OrientedGraph & g, const OrientedGraph & h, const SearchBudget & budget) -> HomSearchResult
    {
        HomSearchResult result;
        if (g.order() == 0) {
            result.verdict = SearchVerdict::found;
            result.mapping = VertexMapping{};
            return result;
        }

        HomSearcher searcher{g, h, budget};
        try {
            result.mapping = searcher.run();
            result.verdict = result.mapping ? SearchVerdict::found : SearchVerdict::absent;
        }
        catch (const BudgetExceeded &) {
            result.verdict = SearchVerdict::budget_exhausted;
        }
        result.nodes = searcher.nodes;

        if (result.mapping && ! is_homomorphism(g, h, *result.mapping))
            throw GraphError("internal error: homomorphism search produced an invalid mapping");
        return result;
    }

    auto is_push_hom_witness(const OrientedGraph & g, const OrientedGraph & h, const PushHomWitness & w) -> bool
    {
        for (auto v : w.push_vector.vertices())
            if (v < 0 || v >= g.order())
                return false;
        return is_homomorphism(push(g, w.push_vector), h, w.mapping);
    }

    auto find_push_hom(const OrientedGraph & g, const OrientedGraph & h, const SearchBudget & budget) -> PushHomSearchResult
    {
        auto search = find_hom(g, anti_twinned(h), budget);
        PushHomSearchResult result{search.verdict, std::nullopt, search.nodes};
        if (search.mapping) {
            result.witness = fold(*search.mapping, h.order());
            if (! is_push_hom_witness(g, h, *result.witness))
                throw GraphError("internal error: folded push homomorphism failed verification");
        }
        return result;
    }

    auto brute_force_push_hom(const OrientedGraph & g, const OrientedGraph & h, const SearchBudget & budget) -> PushHomSearchResult
    {
        int n = g.order();
        if (n > brute_force_push_limit)
            throw GraphError("brute_force_push_hom limited to " + std::to_string(brute_force_push_limit) + " vertices");

        PushHomSearchResult result;
        bool exhausted = false;
        for (unsigned long long bits = 0; bits < (1ull << n); ++bits) {
            auto s = PushVector::from_bits(bits, n);
            auto search = find_hom(push(g, s), h, budget);
            result.nodes += search.nodes;
            if (search.mapping) {
                result.verdict = SearchVerdict::found;
                result.witness = PushHomWitness{s, *search.mapping};
                return result;
            }
            if (search.verdict == SearchVerdict::budget_exhausted)
                exhausted = true;
        }
        result.verdict = exhausted ? SearchVerdict::budget_exhausted : SearchVerdict::absent;
        return result;
    }

    auto transfer(const OrientedGraph & g, const OrientedGraph & h, const VertexMapping & f, const PushVector & push_h) -> PushVector
    {
        if (! is_homomorphism(g, h, f))
            throw GraphError("transfer needs a homomorphism g -> h");

        auto pushed_in_h = push_h.mask(h.order());
        vector<Vertex> preimage;
        for (Vertex v = 0; v < g.order(); ++v)
            if (pushed_in_h[f.image[v]])
                preimage.push_back(v);

        PushVector result{preimage};
        if (! is_homomorphism(push(g, result), push(h, push_h), f))
            throw GraphError("internal error: transferred presentation failed verification");
        return result;
    }

    namespace
    {
        auto extend_tournaments(const vector<OrientedGraph> & level, int order) -> vector<OrientedGraph>
        {
            std::map<string, OrientedGraph> classes;
            auto fresh = order - 1;
            for (auto & t : level)
                for (unsigned bits = 0; bits < (1u << fresh); ++bits) {
                    vector<Arc> arcs = t.arcs();
                    for (Vertex v = 0; v < fresh; ++v)
                        arcs.push_back((bits & (1u << v)) ? Arc{fresh, v} : Arc{v, fresh});
                    OrientedGraph candidate{order, arcs};
                    classes.try_emplace(canonical_code(candidate), candidate);
                }
            vector<OrientedGraph> result;
            for (auto & [_, t] : classes)
                result.push_back(t);
            return result;
        }
    }

    auto enumerate_tournaments(int k) -> vector<OrientedGraph>
    {
        if (k < 0 || k > tournament_limit)
            throw GraphError("enumerate_tournaments supports 0 <= k <= " + std::to_string(tournament_limit));

        // every tournament on k vertices extends one on k - 1, so growing by a
        // vertex with all 2^(k-1) arc choices reaches every class
        static std::once_flag once;
        static vector<vector<OrientedGraph>> levels;
        std::call_once(once, [] {
            levels.push_back({OrientedGraph{}});
            for (int order = 1; order <= tournament_limit; ++order)
                levels.push_back(extend_tournaments(levels.back(), order));
        });
        return levels[k];
    }

    namespace
    {
        // one tournament per push-equivalence class, keyed by the smallest
        // canonical code in its push orbit
        auto push_tournament_classes(int k) -> const vector<OrientedGraph> &
        {
            static std::array<std::once_flag, tournament_limit + 1> once;
            static std::array<vector<OrientedGraph>, tournament_limit + 1> cache;
            std::call_once(once.at(k), [k] {
                std::map<string, OrientedGraph> classes;
                for (auto & t : enumerate_tournaments(k))
                    classes.try_emplace(push_orbit(t).front(), t);
                for (auto & [_, t] : classes)
                    cache[k].push_back(t);
            });
            return cache[k];
        }

        // greedy clique in the "cannot be identified" relation
        auto identification_lower_bound(const OrientedGraph & g) -> int
        {
            int n = g.order();
            vector<vector<bool>> forced(n, vector<bool>(n, false));
            vector<int> score(n, 0);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (cannot_identify(g, u, v)) {
                        forced[u][v] = forced[v][u] = true;
                        ++score[u];
                        ++score[v];
                    }

            vector<Vertex> order(n);
            std::iota(order.begin(), order.end(), 0);
            std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return score[a] > score[b]; });
            vector<Vertex> clique;
            for (auto v : order)
                if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return forced[v][c]; }))
                    clique.push_back(v);
            return int(clique.size());
        }

        template <typename Search_>
        auto chromatic_by_tournaments(const OrientedGraph & g, int first_k, int max_k, Search_ && try_target,
            bool push_classes) -> ChromaticResult
        {
            ChromaticResult result;
            result.lower_bound = first_k;
            for (int k = first_k; k <= std::min(max_k, tournament_limit); ++k) {
                bool exhausted = false;
                const auto & targets = push_classes ? push_tournament_classes(k) : enumerate_tournaments(k);
                for (auto & t : targets) {
                    ++result.targets_tried;
                    auto search = try_target(t);
                    result.nodes += search.nodes;
                    if (search.witness) {
                        result.value = k;
                        result.target = t;
                        result.witness = search.witness;
                        return result;
                    }
                    if (search.verdict == SearchVerdict::budget_exhausted)
                        exhausted = true;
                }
                if (exhausted) {
                    result.budget_exhausted = true;
                    return result;
                }
                result.lower_bound = k + 1;
            }
            (void)g;
            return result;
        }
    }

    auto oriented_chromatic_number(const OrientedGraph & g, int max_k, const SearchBudget & budget) -> ChromaticResult
    {
        if (g.order() == 0) {
            ChromaticResult result;
            result.value = 0;
            result.target = OrientedGraph{};
            result.witness = PushHomWitness{};
            return result;
        }

        return chromatic_by_tournaments(g, 1, max_k, [&](const OrientedGraph & t) {
            auto search = find_hom(g, t, budget);
            PushHomSearchResult wrapped{search.verdict, std::nullopt, search.nodes};
            if (search.mapping)
                wrapped.witness = PushHomWitness{PushVector{}, *search.mapping};
            return wrapped;
        }, false);
    }

    auto push_chromatic_number(const OrientedGraph & g, int max_k, const SearchBudget & budget) -> ChromaticResult
    {
        int n = g.order();
        if (n == 0) {
            ChromaticResult result;
            result.value = 0;
            result.target = OrientedGraph{};
            result.witness = PushHomWitness{};
            return result;
        }

        auto lower = identification_lower_bound(g);
        if (lower == n) {
            // no two vertices may share an image, so g is its own optimal target
            ChromaticResult result;
            result.value = n;
            result.lower_bound = n;
            result.target = g;
            result.witness = PushHomWitness{PushVector{}, identity_mapping(n)};
            return result;
        }

        return chromatic_by_tournaments(g, std::max(1, lower), max_k, [&](const OrientedGraph & t) {
            return find_push_hom(g, t, budget);
        }, true);
    }
}
