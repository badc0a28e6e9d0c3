/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_HOM_HH
#define PUSHHOM_GUARD_HOM_HH 1

#include <pushhom/graph.hh>
#include <pushhom/push.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pushhom
{
    struct SearchBudget
    {
        std::uint64_t node_limit = 10'000'000;
        double time_limit_seconds = 60.0;
        std::optional<std::uint64_t> seed;
    };

    /// Absent is only reported when the search tree was exhausted.
    enum class SearchVerdict
    {
        found,
        absent,
        budget_exhausted
    };

    auto to_string(SearchVerdict v) -> std::string;

    struct HomSearchResult
    {
        SearchVerdict verdict = SearchVerdict::absent;
        std::optional<VertexMapping> mapping;
        std::uint64_t nodes = 0;
    };

    /**
     * Backtracking homomorphism search. Variables are chosen by smallest
     * remaining domain, then largest degree, then lowest id; values are tried
     * in increasing order. Domains start from (in, out)-degree dominance and
     * are kept arc consistent after every assignment.
     */
    auto find_hom(const OrientedGraph & g, const OrientedGraph & h, const SearchBudget & budget = {}) -> HomSearchResult;

    struct PushHomWitness
    {
        PushVector push_vector;
        VertexMapping mapping;
    };

    auto is_push_hom_witness(const OrientedGraph & g, const OrientedGraph & h, const PushHomWitness & w) -> bool;

    struct PushHomSearchResult
    {
        SearchVerdict verdict = SearchVerdict::absent;
        std::optional<PushHomWitness> witness;
        std::uint64_t nodes = 0;
    };

    /// Searches g -> R(h), then pushes the preimage of the primed half and
    /// folds x' onto x.
    auto find_push_hom(const OrientedGraph & g, const OrientedGraph & h, const SearchBudget & budget = {}) -> PushHomSearchResult;

    inline constexpr int brute_force_push_limit = 16;

    /// Tries find_hom on every presentation push(g, s).
    auto brute_force_push_hom(const OrientedGraph & g, const OrientedGraph & h, const SearchBudget & budget = {}) -> PushHomSearchResult;

    /// Given a homomorphism f: g -> h and pushes on h, the pushes on g that
    /// keep f a homomorphism: f^-1(push_h).
    auto transfer(const OrientedGraph & g, const OrientedGraph & h, const VertexMapping & f, const PushVector & push_h) -> PushVector;

    inline constexpr int tournament_limit = 7;

    /// One tournament per isomorphism class, ordered by canonical code.
    auto enumerate_tournaments(int k) -> std::vector<OrientedGraph>;

    struct ChromaticResult
    {
        std::optional<int> value;
        int lower_bound = 0;
        bool budget_exhausted = false;
        std::optional<OrientedGraph> target;
        std::optional<PushHomWitness> witness;    // empty push vector for oriented colourings
        std::uint64_t nodes = 0;
        int targets_tried = 0;
    };

    auto oriented_chromatic_number(const OrientedGraph & g, int max_k, const SearchBudget & budget = {}) -> ChromaticResult;

    /// If every pair of vertices is non-identifiable the graph is its own
    /// witness; otherwise tournaments of growing order are tried.
    auto push_chromatic_number(const OrientedGraph & g, int max_k, const SearchBudget & budget = {}) -> ChromaticResult;
}

#endif
