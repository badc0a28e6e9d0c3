/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_SPARSE_COLORING_HH
#define PUSHHOM_GUARD_SPARSE_COLORING_HH 1

#include <pushhom/families.hh>
#include <pushhom/graph.hh>
#include <pushhom/hom.hh>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pushhom
{
    struct TwoStepNeighbourhoods
    {
        std::vector<Vertex> out_out;    // N++
        std::vector<Vertex> in_in;      // N--
        std::vector<Vertex> out_in;     // N+-
        std::vector<Vertex> in_out;     // N-+
    };

    /// N^{ab}(v): vertices w with some c such that c is in N^a(v) and w in N^b(c).
    auto two_step_neighbourhoods(const OrientedGraph & h, Vertex v) -> TwoStepNeighbourhoods;

    struct PathExtension
    {
        PushVector interior_pushes;    // over path vertices 0..length
        VertexMapping mapping;         // into C3
    };

    /// Decides exactly whether the path can be pushed on its interior and
    /// mapped to C3 with its ends at a and b.
    auto path_extend_to_c3(const PathPattern & pattern, Vertex a, Vertex b) -> std::optional<PathExtension>;

    enum class ConfigKind
    {
        degree_at_most_one,
        adjacent_degree_two_pair,
        degree_three_with_two_degree_two_neighbours
    };

    auto to_string(ConfigKind k) -> std::string;

    /**
     * A reducible configuration. For degree_at_most_one, removed = {v} and
     * boundary holds v's neighbour if any. For adjacent_degree_two_pair,
     * removed = {v1, v2} with boundary = {u1, u2}, u_i the other neighbour of
     * v_i. For the degree-three case removed = {v1, v2, v3} where v3 has
     * degree three, v1 and v2 have degree two, and boundary = {u1, u2, u3}.
     */
    struct ConfigDescriptor
    {
        ConfigKind kind;
        std::vector<Vertex> removed;
        std::vector<Vertex> boundary;
    };

    /// Lowest kind first, then lowest vertex id.
    auto find_reducible_config(const OrientedGraph & g) -> std::optional<ConfigDescriptor>;

    struct DischargeRow
    {
        Vertex vertex;
        int degree;
        Rational charge;
    };

    struct DischargeReport
    {
        std::vector<DischargeRow> rows;
        std::optional<Rational> minimum;
        bool minimum_at_least_eight_thirds;
    };

    /// Each vertex of degree at least 3 gives 1/3 to each degree-2 neighbour.
    auto discharge_audit(const OrientedGraph & g) -> DischargeReport;

    /**
     * Extension tables into P3+. Arc senses are relative to the removed
     * vertices: bit set means the arc points away from the removed vertex
     * (towards the boundary, or from v_i to v3).
     */
    struct ExtensionTables
    {
        struct Choice
        {
            std::array<std::int8_t, 3> colour;
            std::array<bool, 3> pushed;
        };

        // pair: index [c1 * 4 + c2][pattern over arcs u1-v1, v1-v2, v2-u2]
        std::vector<std::optional<Choice>> pair;
        // degree three: index [(c1 * 4 + c2) * 4 + c3][pattern over
        // u1-v1, u2-v2, u3-v3, v1-v3, v2-v3]
        std::vector<std::optional<Choice>> degree_three;

        auto complete() const -> bool;
        auto checksum() const -> std::uint64_t;
    };

    /// Built once by exhaustive search; completeness asserted on first use.
    auto extension_tables() -> const ExtensionTables &;

    /// Same exhaustive construction, exposed for auditing.
    auto build_extension_tables() -> ExtensionTables;

    struct ColoringCertificate
    {
        OrientedGraph target;
        PushHomWitness witness;
        std::vector<ConfigDescriptor> trace;
    };

    auto verify_certificate(const OrientedGraph & g, const ColoringCertificate & cert) -> bool;

    /// The trace deletes every vertex and each step's configuration held
    /// in the graph remaining at that point.
    auto replay_trace(const OrientedGraph & g, const std::vector<ConfigDescriptor> & trace) -> bool;

    class ColoringError : public GraphError
    {
    public:
        using GraphError::GraphError;
    };

    /// Needs max_average_degree(g) < 8/3, which is checked.
    auto push_color_to_paley(const OrientedGraph & g) -> ColoringCertificate;

    /// Outerplanar, girth at least 5. Throws ColoringError with a
    /// counterexample message if no push homomorphism to C3 is found.
    auto color_outerplanar_g5(const OrientedGraph & g, const SearchBudget & budget = {}) -> ColoringCertificate;
}

#endif
