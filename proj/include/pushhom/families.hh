/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_FAMILIES_HH
#define PUSHHOM_GUARD_FAMILIES_HH 1

#include <pushhom/graph.hh>
#include <pushhom/push.hh>

#include <cstdint>
#include <string>
#include <vector>

namespace pushhom
{
    /// Orientation of each arc along a path: true = forward.
    class PathPattern
    {
    private:
        std::vector<bool> _forward;

    public:
        explicit PathPattern(std::vector<bool> forward);

        /// From a string of '+' (forward) and '-' (backward).
        static auto parse(const std::string & text) -> PathPattern;
        static auto from_bits(unsigned bits, int length) -> PathPattern;

        auto length() const -> int { return int(_forward.size()); }
        auto forward(int i) const -> bool { return _forward.at(i); }
        auto forward_count() const -> int;
        auto to_string() const -> std::string;

        auto operator==(const PathPattern &) const -> bool = default;
    };

    class FamilyError : public GraphError
    {
    public:
        using GraphError::GraphError;
    };

    auto directed_cycle(int n) -> OrientedGraph;

    /// Vertices 0..length along the path.
    auto oriented_path(const PathPattern & pattern) -> OrientedGraph;

    auto c3() -> OrientedGraph;

    /// 0 -> 1 -> 2 -> 3 and 0 -> 3: one arc against the cyclic direction.
    auto uc4() -> OrientedGraph;

    /// Directed triangle 0 -> 2 -> 1 -> 0 plus apex 3 dominating it.
    auto paley_plus() -> OrientedGraph;

    struct ZielonkaVertex
    {
        int star;            // 0-based position of the masked coordinate
        unsigned bits;       // bit j is coordinate j; the star bit is always clear
    };

    inline constexpr int zielonka_limit = 6;

    /// Vertex id of (star, bits) is star * 2^(k-1) + the non-star bits packed in order.
    auto zielonka_vertex(int k, Vertex v) -> ZielonkaVertex;
    auto zielonka(int k) -> OrientedGraph;

    /// Complementing every non-star coordinate.
    auto zielonka_complement_split(int k) -> SplitCertificate;

    /// Induced on the vertices whose first non-star coordinate is 0.
    auto zielonka_half(int k) -> OrientedGraph;

    struct WeightSplitStatus
    {
        int k;
        int first_part_size;
        int second_part_size;
        bool balanced;
        bool complement_maps_between_parts;
    };

    /// How the coordinate-sum threshold partition behaves for a given k.
    auto zielonka_weight_split_status(int k) -> WeightSplitStatus;

    /// Vertex ids of the named gadget vertices.
    namespace b0_vertex
    {
        // x1..x8 are 0..7
        inline constexpr Vertex x(int i) { return i - 1; }
    }

    auto b0() -> OrientedGraph;

    namespace y_vertex
    {
        inline constexpr Vertex apex = 0, x = 1, y = 2;
        // lower directed 5-cycle, in cycle order
        inline constexpr Vertex lower[5] = {3, 4, 5, 6, 7};
        // upper directed 5-cycle, sharing 7 and 6 with the lower one
        inline constexpr Vertex upper[5] = {7, 8, 9, 10, 6};
    }

    auto y_gadget() -> OrientedGraph;

    /// Directed C9 on 0..8, apex 9, and per cycle vertex a directed 4-path
    /// and a "+++-" 4-path to the apex.
    auto girth8_witness() -> OrientedGraph;
    inline constexpr Vertex girth8_apex = 9;

    /// A random cubic graph on n vertices with every edge subdivided once:
    /// 5n/2 vertices, mad 12/5, and every cubic vertex is a degree-three
    /// configuration.
    auto random_subdivided_cubic(int n, std::uint64_t seed) -> OrientedGraph;

    auto random_outerplanar(int n, int min_girth, std::uint64_t seed) -> OrientedGraph;

    /// Rejection-samples until max_average_degree < 8/3.
    auto random_sparse(int n, std::uint64_t seed) -> OrientedGraph;

    /// Property checks the gadget constructions rely on.
    struct GadgetReport
    {
        std::string name;
        std::vector<std::pair<std::string, bool>> checks;

        auto all_pass() const -> bool;
    };

    auto validate_paley_plus(const OrientedGraph & g) -> GadgetReport;
    auto validate_b0(const OrientedGraph & g) -> GadgetReport;
    auto validate_y_gadget(const OrientedGraph & g) -> GadgetReport;

    /// Names accepted by generate_family.
    auto family_names() -> std::vector<std::string>;

    /// Dispatch by name; params are the positional numeric arguments.
    auto generate_family(const std::string & name, const std::vector<long> & params, std::uint64_t seed) -> OrientedGraph;
}

#endif
