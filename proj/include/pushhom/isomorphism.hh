/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_ISOMORPHISM_HH
#define PUSHHOM_GUARD_ISOMORPHISM_HH 1

#include <pushhom/graph.hh>

#include <optional>
#include <string>
#include <vector>

namespace pushhom
{
    /// Largest order canonical_code accepts.
    inline constexpr int canonical_code_limit = 16;

    /**
     * Stable colouring by iterated (out-colours, in-colours) refinement.
     * Colour ids are isomorphism invariant: two isomorphic graphs refined
     * together receive identical colour classes.
     */
    auto refine_colours(const OrientedGraph & g, std::vector<int> initial = {}) -> std::vector<int>;

    /// A certificate iff an arc-preserving bijection exists.
    auto find_isomorphism(const OrientedGraph & g, const OrientedGraph & h) -> std::optional<IsoCertificate>;

    /// Equal codes iff isomorphic. Throws GraphError beyond canonical_code_limit.
    auto canonical_code(const OrientedGraph & g) -> std::string;

    /// The labelling achieving canonical_code: perm[v] is v's canonical position.
    auto canonical_labelling(const OrientedGraph & g) -> std::vector<Vertex>;
}

#endif
