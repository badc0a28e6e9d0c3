/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_VERIFY_HH
#define PUSHHOM_GUARD_VERIFY_HH 1

#include <pushhom/hom.hh>

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace pushhom
{
    enum class CheckStatus
    {
        pass,
        fail,
        budget_exhausted
    };

    auto to_string(CheckStatus s) -> std::string;

    struct CheckRecord
    {
        std::string id;
        CheckStatus status;
        nlohmann::json detail;    // witness, counts, or an inline counterexample
        double wall_time;
    };

    struct VerdictReport
    {
        std::string suite;
        std::vector<CheckRecord> checks;    // sorted by id
        nlohmann::json summary;

        /// fail beats exhausted-budget beats pass
        auto status() const -> CheckStatus;
        auto to_json() const -> nlohmann::json;
    };

    struct VerifyOptions
    {
        std::uint64_t seed = 1;
        SearchBudget budget;
        int max_n = 5;
    };

    /// The suites run by default; "tournament9" is extra.
    auto suite_names() -> std::vector<std::string>;
    auto optional_suite_names() -> std::vector<std::string>;

    /// Throws std::invalid_argument for an unknown suite.
    auto run_suite(const std::string & name, const VerifyOptions & options = {}) -> VerdictReport;

    struct TournamentSearchResult
    {
        std::uint64_t nodes = 0;
        std::optional<OrientedGraph> tournament;    // a 9-vertex survivor, if any
    };

    /// Bounds over the eight non-apex vertices; agree and disagree count
    /// the other six, the apex (which always agrees) excluded.
    struct TournamentBounds
    {
        int out_min = 3, out_max = 4;
        int agree_min = 2, agree_max = 3;
        int disagree_min = 3, disagree_max = 4;
    };

    /// A 9-vertex tournament with a dominating apex meeting the bounds.
    auto constrained_tournament_search(const TournamentBounds & bounds = {}) -> TournamentSearchResult;
}

#endif
