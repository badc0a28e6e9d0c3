#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <pushhom/families.hh>
#include <pushhom/io.hh>

using namespace pushhom;

TEST_CASE("round trip")
{
    for (auto & g : {c3(), uc4(), b0(), y_gadget(), girth8_witness(), OrientedGraph{0, {}}})
        CHECK(parse_graph(emit_graph(g)) == g);
}

TEST_CASE("comments, blank lines and ordering")
{
    auto g = parse_graph("# a triangle\n\noriented 3  # header\na 2 0\na 0 1\n\na 1 2\n");
    CHECK(g == c3());
    CHECK(emit_graph(g) == "oriented 3\na 0 1\na 1 2\na 2 0\n");
}

TEST_CASE("errors carry line numbers")
{
    auto line_of = [](const std::string & text) {
        try {
            parse_graph(text);
        }
        catch (const FormatError & e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("graph 3\n") == 1);
    CHECK(line_of("oriented 3\na 0 1\na 0 1\n") == 3);
    CHECK(line_of("oriented 3\na 0 1\n# x\na 1 0\n") == 4);
    CHECK(line_of("oriented 3\na 0 3\n") == 2);
    CHECK(line_of("oriented 3\na 1 1\n") == 2);
    CHECK(line_of("oriented 3\na 0 x\n") == 2);
    CHECK(line_of("oriented 3\nb 0 1\n") == 2);
    CHECK(line_of("") == 1);
    CHECK(line_of("oriented -2\n") == 1);
}

TEST_CASE("push vectors")
{
    PushVector s{{4, 1}};
    CHECK(emit_push_vector(s) == "push 2\nv 1\nv 4\n");
    CHECK(parse_push_vector(emit_push_vector(s)) == s);
    CHECK_THROWS_AS(parse_push_vector("push 2\nv 1\n"), FormatError);
    CHECK_THROWS_AS(parse_push_vector("push 2\nv 1\nv 1\n"), FormatError);
}

TEST_CASE("json carries the schema version")
{
    auto j = witness_json(c3(), PushHomWitness{PushVector{{1}}, VertexMapping{{0, 1}}});
    CHECK(j["schemaVersion"] == schema_version);
    CHECK(j["target"] == emit_graph(c3()));
    CHECK(j["pushVector"] == nlohmann::json::array({1}));
}
