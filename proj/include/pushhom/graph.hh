/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_GRAPH_HH
#define PUSHHOM_GUARD_GRAPH_HH 1

#include <boost/rational.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pushhom
{
    using Vertex = int;

    struct Arc
    {
        Vertex from;
        Vertex to;

        auto operator<=>(const Arc &) const = default;
    };

    using Rational = boost::rational<std::int64_t>;

    class GraphError : public std::invalid_argument
    {
    public:
        explicit GraphError(const std::string & what);
    };

    /**
     * A loop-free directed graph with no pair of opposite arcs, over vertices
     * 0..n-1. Immutable once built; every surgery returns a new graph.
     */
    class OrientedGraph
    {
    private:
        int _order = 0;
        std::vector<Arc> _arcs;
        std::vector<std::vector<Vertex>> _out, _in;

    public:
        OrientedGraph() = default;

        /// Validates and deduplicates. Throws GraphError on loops, 2-cycles,
        /// or out-of-range endpoints.
        OrientedGraph(int n, std::span<const Arc> arcs);
        OrientedGraph(int n, std::initializer_list<Arc> arcs);

        auto order() const -> int { return _order; }
        auto size() const -> std::size_t { return _arcs.size(); }

        /// Sorted lexicographically.
        auto arcs() const -> const std::vector<Arc> & { return _arcs; }

        auto out_neighbours(Vertex v) const -> const std::vector<Vertex> &;
        auto in_neighbours(Vertex v) const -> const std::vector<Vertex> &;
        auto out_degree(Vertex v) const -> int;
        auto in_degree(Vertex v) const -> int;
        auto degree(Vertex v) const -> int;

        /// Neighbours in the underlying graph, sorted.
        auto neighbours(Vertex v) const -> std::vector<Vertex>;

        auto has_arc(Vertex u, Vertex v) const -> bool;
        auto adjacent(Vertex u, Vertex v) const -> bool;

        auto operator==(const OrientedGraph & other) const -> bool
        {
            return _order == other._order && _arcs == other._arcs;
        }

        auto check_vertex(Vertex v) const -> void;
    };

    auto new_graph(int n, std::span<const Arc> arcs) -> OrientedGraph;

    struct VertexMapping
    {
        std::vector<Vertex> image;

        auto operator()(Vertex v) const -> Vertex { return image.at(v); }
        auto operator==(const VertexMapping &) const -> bool = default;
    };

    auto identity_mapping(int n) -> VertexMapping;

    /// Total, in range, and arc-preserving.
    auto is_homomorphism(const OrientedGraph & g, const OrientedGraph & h, const VertexMapping & f) -> bool;

    struct IsoCertificate
    {
        VertexMapping mapping;
    };

    /// Bijective and arc-preserving in both directions.
    auto is_isomorphism(const OrientedGraph & g, const OrientedGraph & h, const VertexMapping & f) -> bool;

    auto inverse(const VertexMapping & f, int target_order) -> VertexMapping;

    /// Relabel so that vertex v becomes perm[v].
    auto relabel(const OrientedGraph & g, std::span<const Vertex> perm) -> OrientedGraph;

    /// Shortest cycle of the underlying simple graph, or nullopt for forests.
    auto underlying_girth(const OrientedGraph & g) -> std::optional<int>;

    /// Maximum over non-empty subgraphs of 2|E|/|V|, exactly.
    auto max_average_degree(const OrientedGraph & g) -> Rational;

    auto induced_subgraph(const OrientedGraph & g, std::span<const Vertex> keep) -> OrientedGraph;

    auto disjoint_union(std::span<const OrientedGraph> gs) -> OrientedGraph;

    /// Quotient by the given classes; vertices not mentioned stay as
    /// singletons. Quotient vertices are numbered by smallest member.
    auto identify_vertices(const OrientedGraph & g, const std::vector<std::vector<Vertex>> & classes) -> OrientedGraph;

    /// Every oriented graph on n vertices, one per isomorphism class, ordered
    /// by canonical code. Practical for n <= 5.
    auto enumerate_oriented_graphs(int n) -> std::vector<OrientedGraph>;
}

#endif
