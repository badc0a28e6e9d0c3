/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_PUSH_HH
#define PUSHHOM_GUARD_PUSH_HH 1

#include <pushhom/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace pushhom
{
    /// A set of vertices to push, kept sorted and duplicate free.
    class PushVector
    {
    private:
        std::vector<Vertex> _vertices;

    public:
        PushVector() = default;
        explicit PushVector(std::vector<Vertex> vertices);

        static auto from_mask(const std::vector<bool> & mask) -> PushVector;
        static auto from_bits(unsigned long long bits, int n) -> PushVector;

        auto vertices() const -> const std::vector<Vertex> & { return _vertices; }
        auto contains(Vertex v) const -> bool;
        auto empty() const -> bool { return _vertices.empty(); }

        /// Throws GraphError unless every vertex lies in [0, n).
        auto mask(int n) const -> std::vector<bool>;

        auto operator==(const PushVector &) const -> bool = default;
    };

    /// Reverses every arc with exactly one endpoint in s.
    auto push(const OrientedGraph & g, const PushVector & s) -> OrientedGraph;

    /// Anti-twin of base vertex i is i + n, and vice versa.
    struct AntiTwinLayout
    {
        int base_order;

        auto twin(Vertex v) const -> Vertex { return v < base_order ? v + base_order : v - base_order; }
        auto base(Vertex v) const -> Vertex { return v < base_order ? v : v - base_order; }
        auto primed(Vertex v) const -> bool { return v >= base_order; }
    };

    /// For each arc i -> j: i -> j, i' -> j', j -> i', j' -> i.
    auto anti_twinned(const OrientedGraph & g) -> OrientedGraph;

    struct PushEquivCertificate
    {
        PushVector push_vector;
        IsoCertificate isomorphism;
    };

    /// Certificate that push(g, s) is isomorphic to h, via R(g) ~ R(h).
    auto push_equivalent(const OrientedGraph & g, const OrientedGraph & h) -> std::optional<PushEquivCertificate>;

    struct RepairResult
    {
        IsoCertificate isomorphism;
        int passes;
    };

    /// Turns any isomorphism R(g) -> R(h) into one with f(v') = f(v)' for
    /// every v, by repeatedly exchanging the images of v' and f^-1(f(v)').
    /// Throws GraphError if f is not an isomorphism.
    auto repair_isomorphism(const OrientedGraph & g, const OrientedGraph & h, const IsoCertificate & f) -> RepairResult;

    auto respects_anti_twins(const VertexMapping & f, int base_order) -> bool;

    struct SplitCertificate
    {
        std::vector<Vertex> first_half;
        std::vector<Vertex> partner;    // partner[i] pairs with first_half[i]
    };

    auto is_valid_split(const OrientedGraph & g, const SplitCertificate & cert) -> bool;

    /// A partition certificate iff g is isomorphic to R(T) for some T.
    auto find_split(const OrientedGraph & g) -> std::optional<SplitCertificate>;

    /// The split graph T = g[first_half]; R(T) ~ g is re-checked.
    auto split_graph(const OrientedGraph & g, const SplitCertificate & cert) -> OrientedGraph;

    /// The certificate V1 = {0..n-1}, f(i) = i + n for R(T).
    auto anti_twin_split(int base_order) -> SplitCertificate;

    struct AgreeDisagreeStats
    {
        std::vector<Vertex> agree;
        std::vector<Vertex> disagree;
        int max_count;
        int min_count;
    };

    auto agree_disagree(const OrientedGraph & g, Vertex x, Vertex y) -> AgreeDisagreeStats;

    /// Exhaustive search for a 4-vertex subgraph on x, y isomorphic to UC4.
    /// x, y must be distinct and non-adjacent.
    auto in_common_uc4(const OrientedGraph & g, Vertex x, Vertex y) -> bool;

    /// Sound test that no homomorphism of any presentation identifies x and y.
    auto cannot_identify(const OrientedGraph & g, Vertex x, Vertex y) -> bool;

    inline constexpr int push_orbit_limit = 16;

    /// Sorted distinct canonical codes of push(g, s) over every s.
    auto push_orbit(const OrientedGraph & g) -> std::vector<std::string>;
}

#endif
