#include <doctest.h>

#include "blockgraph/documents.hpp"
#include "support.hpp"

using namespace blockgraph;
using namespace blockgraph::testing;

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("3 2\n0 1\n1 2\n") == path3());
    CHECK(parse_edge_list("# comment\n4 4\n2 3\n0 1\n\n  # indented comment\n0 3\n1 2") == cycle4());
    CHECK(parse_edge_list("1 0\n") == make_graph(1, {}));
    CHECK(parse_edge_list("3 2\r\n0 1\r\n1 2\r\n") == path3());
}

TEST_CASE("edge list errors carry line numbers") {
    auto line_of = [](std::string_view text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{999};
    };
    CHECK(line_of("3 2\n0 1\n1 1\n") == 3);
    CHECK(line_of("3 2\n0 1\n1 3\n") == 3);
    CHECK(line_of("3 2\n0 1\n0 1\n") == 3);
    CHECK(line_of("3 2\n1 0\n1 2\n") == 2);
    CHECK(line_of("3 1\n0 1\n1 2\n") == 3);
    CHECK(line_of("3 1\n0 x\n") == 2);
    CHECK(line_of("3 1\n0 1 2\n") == 2);
    CHECK(line_of("0 0\n") == 1);
    CHECK(line_of("3 -1\n") == 1);
    CHECK(line_of("3 2\n0 1\n") == 0);
    CHECK(line_of("# nothing\n") == 0);
    CHECK_THROWS_WITH_AS(parse_edge_list("3 2\n0 1\n1 1\n"), "line 3: self-loop '1 1'", ParseError);
}

TEST_CASE("edge list output is canonical") {
    CHECK(write_edge_list(cycle4()) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    CHECK(write_edge_list(make_graph(2, {})) == "2 0\n");
    // Round trip up to canonical ordering.
    const std::string scrambled = "5 5\n3 4\n0 3\n2 3\n0 1\n1 2\n";
    CHECK(write_edge_list(parse_edge_list(scrambled)) == "5 5\n0 1\n0 3\n1 2\n2 3\n3 4\n");
}

TEST_CASE("family documents") {
    const auto p3 = family_from_graph(path3());
    const std::string text = write_family_document(p3);
    CHECK(text ==
          "{\n"
          "  \"n\": 3,\n"
          "  \"parts\": [\n"
          "    [[0], [1, 2]],\n"
          "    [[0], [1], [2]],\n"
          "    [[0, 1], [2]]\n"
          "  ]\n"
          "}\n");
    CHECK(parse_family_document(text) == p3);

    // Any ordering normalizes to the same bytes after one pass.
    const std::string messy = R"({"parts": [[[2,1],[0]], [[2],[1],[0]], [[2],[1,0]]], "n": 3})";
    CHECK(write_family_document(parse_family_document(messy)) == text);
}

TEST_CASE("family document schema errors") {
    CHECK_THROWS_WITH_AS(parse_family_document("{\"n\": 2,\n \"parts\": [[[0],[1]],\n [[0],[1]] "),
                         doctest::Contains("invalid JSON"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document("[]"), doctest::Contains("object"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document(R"({"n": 1, "parts": [[[0]]], "x": 1})"),
                         doctest::Contains("unknown field 'x'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document(R"({"n": -1, "parts": []})"), doctest::Contains("'n'"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document(R"({"n": 2, "parts": [[[0, 1]]]})"),
                         doctest::Contains("expected n=2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document(R"({"n": 2, "parts": [[[0, 1]], [[0], [0, 1]]]})"),
                         doctest::Contains("parts[1]"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document(R"({"n": 2, "parts": [[[0, 0, 1]], [[0], [1]]]})"),
                         doctest::Contains("repeats"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document(R"({"n": 2, "parts": [[[0, "1"]], [[0], [1]]]})"),
                         doctest::Contains("non-vertex"), ParseError);
    CHECK_THROWS_WITH_AS(parse_family_document(R"({"n": 2, "parts": [[[0, 2]], [[0], [1]]]})"),
                         doctest::Contains("out of range"), ParseError);
}

TEST_CASE("dot output") {
    CHECK(write_dot(path3(), false) == "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n");

    const std::string bow = write_dot(bowtie(), true);
    CHECK(bow.find("  2 [shape=doublecircle];\n") != std::string::npos);
    CHECK(bow.find("// block 0: {0,1,2}") != std::string::npos);
    CHECK(bow.find("// block 1: {2,3,4}") != std::string::npos);
    CHECK(bow.find("0 -- 1 [color=\"0.000 0.650 0.850\"]") != std::string::npos);
    CHECK(bow.find("3 -- 4 [color=\"0.618 0.650 0.850\"]") != std::string::npos);
    CHECK(bow == write_dot(bowtie(), true));

    const std::string k3 = write_dot(triangle(), true);
    CHECK(k3.find("doublecircle") == std::string::npos);
    CHECK(k3.find("// block 0: {0,1,2}") != std::string::npos);
    CHECK(k3.find("// block 1") == std::string::npos);
}
