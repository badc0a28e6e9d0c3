/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PUSHHOM_GUARD_IO_HH
#define PUSHHOM_GUARD_IO_HH 1

#include <pushhom/graph.hh>
#include <pushhom/hom.hh>
#include <pushhom/push.hh>

#include <json.hpp>

#include <string>

namespace pushhom
{
    inline constexpr int schema_version = 1;

    class FormatError : public GraphError
    {
    public:
        FormatError(int line, const std::string & what);
        int line;
    };

    /// "oriented <n>" then "a <u> <v>" lines; '#' comments, blank lines ignored.
    auto parse_graph(const std::string & text) -> OrientedGraph;
    auto emit_graph(const OrientedGraph & g) -> std::string;

    /// "push <k>" then k lines "v <id>".
    auto parse_push_vector(const std::string & text) -> PushVector;
    auto emit_push_vector(const PushVector & s) -> std::string;

    auto read_file(const std::string & path) -> std::string;
    auto read_graph_file(const std::string & path) -> OrientedGraph;

    auto witness_json(const OrientedGraph & target, const PushHomWitness & w) -> nlohmann::json;
    auto equivalence_json(const PushEquivCertificate & cert) -> nlohmann::json;
    auto chromatic_json(const ChromaticResult & r) -> nlohmann::json;
}

#endif
