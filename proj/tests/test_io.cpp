#include "helpers.hpp"

#include "vdec/colorer.hpp"
#include "vdec/io.hpp"
#include "vdec/verify.hpp"

#include <doctest.h>

#include <sstream>

using namespace vdec;
using vdec_test::path;

TEST_CASE("edge list round trip with comments") {
    std::istringstream in("# a path\n5 4\n0 1\n1 2  # middle\n2 3\n3 4\n");
    SimpleGraph g = read_edge_list(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 4);

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    CHECK(read_edge_list(back) == g);
}

TEST_CASE("edge list parse errors") {
    std::istringstream missing("5\n");
    CHECK_THROWS_WITH_AS(read_edge_list(missing), doctest::Contains("ParseError"), Error);
    std::istringstream short_list("3 2\n0 1\n");
    CHECK_THROWS_WITH_AS(read_edge_list(short_list), doctest::Contains("ParseError"), Error);
    std::istringstream junk("3 1\n0 x\n");
    CHECK_THROWS_WITH_AS(read_edge_list(junk), doctest::Contains("ParseError"), Error);
    std::istringstream loop("3 1\n1 1\n");
    CHECK_THROWS_WITH_AS(read_edge_list(loop), doctest::Contains("SelfLoop"), Error);
}

TEST_CASE("coloring round trip") {
    Tree p5 = path(5);
    EdgeColoring c = color_tree(p5);
    std::ostringstream out;
    write_coloring(out, c);
    std::istringstream back(out.str());
    EdgeColoring parsed = read_coloring(back);
    CHECK(parsed == c);

    std::istringstream bad("5 4\n0 1 1\n");
    CHECK_THROWS_WITH_AS(read_coloring(bad), doctest::Contains("ParseError"), Error);
}

TEST_CASE("relabel_consecutive canonicalizes colors") {
    EdgeColoring sparse;
    sparse.palette = 9;
    sparse.set(Edge(0, 1), 7);
    sparse.set(Edge(1, 2), 2);
    sparse.set(Edge(2, 3), 9);
    EdgeColoring tight = relabel_consecutive(sparse);
    CHECK(tight.palette == 3);
    CHECK(tight.at(Edge(0, 1)) == 2);
    CHECK(tight.at(Edge(1, 2)) == 1);
    CHECK(tight.at(Edge(2, 3)) == 3);
}

TEST_CASE("round trips survive for every constructive coloring at small scale") {
    for (int n = 3; n <= 7; ++n)
        for_each_tree(n, [&](const Tree& t) {
            if (t.n2() > t.n1() && !is_path_p5(t)) return;
            std::ostringstream ge;
            write_edge_list(ge, t.graph);
            std::istringstream gi(ge.str());
            CHECK(read_edge_list(gi) == t.graph);

            EdgeColoring c = relabel_consecutive(color_tree(t));
            std::ostringstream ce;
            write_coloring(ce, c);
            std::istringstream ci(ce.str());
            CHECK(read_coloring(ci) == c);
        });
}

TEST_CASE("dot export mentions every edge with its color") {
    Tree p4 = path(4);
    EdgeColoring c = color_tree(p4);
    std::ostringstream out;
    write_dot(out, p4.graph, &c);
    std::string dot = out.str();
    CHECK(dot.find("graph G {") != std::string::npos);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("label=") != std::string::npos);
}
