/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pushhom/io.hh>

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

using std::string;
using std::vector;

namespace pushhom
{
    FormatError::FormatError(int l, const string & what) :
        GraphError("line " + std::to_string(l) + ": " + what),
        line(l)
    {
    }

    namespace
    {
        // whitespace separated tokens with the comment stripped
        auto tokens(const string & line) -> vector<string>
        {
            auto body = line.substr(0, line.find('#'));
            std::istringstream in{body};
            vector<string> result;
            for (string t; in >> t;)
                result.push_back(t);
            return result;
        }

        auto number(const string & token, int line) -> long
        {
            long value = 0;
            auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
            if (ec != std::errc{} || end != token.data() + token.size() || value < 0)
                throw FormatError(line, "expected a non-negative integer, got '" + token + "'");
            return value;
        }

        template <typename Body_>
        auto each_line(const string & text, Body_ && body) -> void
        {
            std::istringstream in{text};
            int number = 0;
            for (string line; std::getline(in, line);) {
                ++number;
                auto t = tokens(line);
                if (! t.empty())
                    body(number, t);
            }
        }
    }

    auto parse_graph(const string & text) -> OrientedGraph
    {
        std::optional<int> order;
        vector<Arc> arcs;
        std::set<std::pair<Vertex, Vertex>> seen;
        int last_line = 0;

        each_line(text, [&](int line, const vector<string> & t) {
            last_line = line;
            if (! order) {
                if (t.size() != 2 || t[0] != "oriented")
                    throw FormatError(line, "expected 'oriented <n>'");
                auto n = number(t[1], line);
                if (n > 1'000'000)
                    throw FormatError(line, "order too large");
                order = int(n);
                return;
            }
            if (t.size() != 3 || t[0] != "a")
                throw FormatError(line, "expected 'a <u> <v>'");
            auto u = number(t[1], line), v = number(t[2], line);
            if (u >= *order || v >= *order)
                throw FormatError(line, "vertex out of range");
            if (u == v)
                throw FormatError(line, "loop");
            if (seen.contains({v, u}))
                throw FormatError(line, "opposite arc already present");
            if (! seen.insert({u, v}).second)
                throw FormatError(line, "duplicate arc");
            arcs.push_back({Vertex(u), Vertex(v)});
        });

        if (! order)
            throw FormatError(last_line + 1, "missing 'oriented <n>' header");
        return OrientedGraph{*order, arcs};
    }

    auto emit_graph(const OrientedGraph & g) -> string
    {
        string result = "oriented " + std::to_string(g.order()) + "\n";
        for (auto & a : g.arcs())
            result += "a " + std::to_string(a.from) + " " + std::to_string(a.to) + "\n";
        return result;
    }

    auto parse_push_vector(const string & text) -> PushVector
    {
        std::optional<long> expected;
        std::set<Vertex> vertices;
        int count = 0, last_line = 0;
        each_line(text, [&](int line, const vector<string> & t) {
            last_line = line;
            if (! expected) {
                if (t.size() != 2 || t[0] != "push")
                    throw FormatError(line, "expected 'push <k>'");
                expected = number(t[1], line);
                return;
            }
            if (t.size() != 2 || t[0] != "v")
                throw FormatError(line, "expected 'v <id>'");
            auto v = number(t[1], line);
            if (! vertices.insert(Vertex(v)).second)
                throw FormatError(line, "duplicate vertex");
            ++count;
        });
        if (! expected)
            throw FormatError(last_line + 1, "missing 'push <k>' header");
        if (count != *expected)
            throw FormatError(last_line, "header promised " + std::to_string(*expected) + " vertices, found " + std::to_string(count));
        return PushVector{vector<Vertex>(vertices.begin(), vertices.end())};
    }

    auto emit_push_vector(const PushVector & s) -> string
    {
        string result = "push " + std::to_string(s.vertices().size()) + "\n";
        for (auto v : s.vertices())
            result += "v " + std::to_string(v) + "\n";
        return result;
    }

    auto read_file(const string & path) -> string
    {
        std::ifstream in{path};
        if (! in)
            throw std::runtime_error("cannot open " + path);
        std::ostringstream buffer;
        buffer << in.rdbuf();
        return buffer.str();
    }

    auto read_graph_file(const string & path) -> OrientedGraph
    {
        try {
            return parse_graph(read_file(path));
        }
        catch (const FormatError & e) {
            throw FormatError(e.line, path + ": " + string(e.what()).substr(string(e.what()).find(':') + 2));
        }
    }

    auto witness_json(const OrientedGraph & target, const PushHomWitness & w) -> nlohmann::json
    {
        return {{"schemaVersion", schema_version}, {"pushVector", w.push_vector.vertices()},
            {"mapping", w.mapping.image}, {"target", emit_graph(target)}, {"verified", true}};
    }

    auto equivalence_json(const PushEquivCertificate & cert) -> nlohmann::json
    {
        return {{"schemaVersion", schema_version}, {"pushVector", cert.push_vector.vertices()},
            {"mapping", cert.isomorphism.mapping.image}, {"verified", true}};
    }

    auto chromatic_json(const ChromaticResult & r) -> nlohmann::json
    {
        nlohmann::json j{{"schemaVersion", schema_version}, {"lowerBound", r.lower_bound},
            {"budgetExhausted", r.budget_exhausted}, {"nodes", r.nodes}, {"targetsTried", r.targets_tried}};
        j["value"] = r.value ? nlohmann::json(*r.value) : nlohmann::json(nullptr);
        if (r.target && r.witness)
            j["witness"] = witness_json(*r.target, *r.witness);
        return j;
    }
}
