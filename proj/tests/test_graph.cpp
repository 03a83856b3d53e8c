#include "helpers.hpp"

#include "vdec/enumerate.hpp"
#include "vdec/graph.hpp"
#include "vdec/shape.hpp"

#include <doctest.h>

using namespace vdec;
using vdec_test::graph;
using vdec_test::path;

TEST_CASE("build_graph validates input") {
    SimpleGraph k2 = graph(2, {{0, 1}});
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(1, 0));

    CHECK_THROWS_AS(graph(3, {{0, 1}, {1, 1}}), Error);
    CHECK_THROWS_WITH_AS(graph(3, {{0, 1}, {1, 1}}), doctest::Contains("SelfLoop"), Error);
    CHECK_THROWS_WITH_AS(graph(3, {{0, 1}, {1, 0}}), doctest::Contains("DuplicateEdge"), Error);
    CHECK_THROWS_WITH_AS(graph(2, {{0, 2}}), doctest::Contains("VertexOutOfRange"), Error);

    SimpleGraph p5 = graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(p5.edge_count() == 4);
    CHECK(p5.neighbors(1) == std::vector<VertexId>{0, 2});
}

TEST_CASE("as_tree accepts trees and rejects everything else") {
    Tree p5 = path(5);
    CHECK(p5.diameter == 4);
    CHECK(p5.n1() == 2);
    CHECK(p5.n2() == 3);

    Tree star = as_tree(graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.diameter == 2);
    CHECK(star.n1() == 3);

    CHECK_THROWS_WITH_AS(as_tree(graph(3, {{0, 1}, {1, 2}, {0, 2}})),
                         doctest::Contains("HasCycle"), Error);
    CHECK_THROWS_WITH_AS(as_tree(graph(4, {{0, 1}, {2, 3}})), doctest::Contains("NotConnected"),
                         Error);
}

TEST_CASE("degree profiles") {
    DegreeProfile p5 = degree_profile(path(5).graph);
    CHECK(p5.counts == std::map<int, int>{{1, 2}, {2, 3}});
    CHECK(p5.delta == 1);
    CHECK(p5.Delta == 2);

    DegreeProfile star = degree_profile(graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.counts == std::map<int, int>{{1, 3}, {3, 1}});

    // spider with three length-2 legs
    Tree spider = build_diam_four(0, 3, {});
    DegreeProfile sp = degree_profile(spider.graph);
    CHECK(sp.counts == std::map<int, int>{{1, 3}, {2, 3}, {3, 1}});
}

TEST_CASE("diameter values and the all-pairs oracle") {
    CHECK(path(5).diameter == 4);
    CHECK(as_tree(graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}})).diameter == 2);
    CHECK(build_diam_four(0, 2, {}).diameter == 4);   // Q(0,2,0) = P5

    for (int n = 2; n <= 12; ++n) {
        long long checked = 0;
        for_each_tree(n, [&](const Tree& t) {
            if (n <= 10 || checked < 60) CHECK(t.diameter == diameter_all_pairs(t.graph));
            checked++;
        });
    }
}

TEST_CASE("tree identities over the enumerated corpus") {
    for (int n = 2; n <= 10; ++n) {
        for_each_tree(n, [&](const Tree& t) {
            CHECK(t.q() == t.p() - 1);
            int total = 0, weighted = 0;
            for (auto [d, cnt] : t.profile.counts) {
                total += cnt;
                weighted += d * cnt;
            }
            CHECK(total == t.p());
            CHECK(weighted == 2 * t.q());
            // n1 = 2 + sum_{d>=3} (d-2) n_d
            int rhs = 2;
            for (auto [d, cnt] : t.profile.counts)
                if (d >= 3) rhs += (d - 2) * cnt;
            CHECK(t.n1() == rhs);
        });
    }
}

TEST_CASE("classification of the small families") {
    CHECK(classify_tree(path(4)) == TreeShape{DoubleStar{1, 1}});
    CHECK(classify_tree(path(5)) == TreeShape{DiamFour{0, 2, {}, 0}});
    CHECK(classify_tree(path(3)) == TreeShape{Star{2}});

    Tree q011 = build_diam_four(0, 1, {2});
    CHECK(classify_tree(q011) == TreeShape{DiamFour{0, 1, {2}, 0}});
    CHECK(in_exceptional_family(q011));
    CHECK(is_path_p5(build_diam_four(0, 2, {})));
    CHECK(!in_exceptional_family(build_diam_four(0, 3, {})));
    CHECK(in_exceptional_family(build_diam_four(2, 2, {})));

    CHECK_THROWS_WITH_AS(classify_tree(path(2)), doctest::Contains("TooSmall"), Error);
    CHECK(std::holds_alternative<General>(classify_tree(path(6))));
}

TEST_CASE("classify_tree is total on every enumerated tree") {
    for (int n = 3; n <= 10; ++n)
        for_each_tree(n, [&](const Tree& t) { CHECK_NOTHROW(classify_tree(t)); });
}
