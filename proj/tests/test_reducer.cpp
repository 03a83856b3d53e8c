#include "helpers.hpp"

#include "vdec/colorer.hpp"
#include "vdec/exact.hpp"
#include "vdec/reducer.hpp"
#include "vdec/verify.hpp"

#include <doctest.h>

using namespace vdec;
using vdec_test::graph;
using vdec_test::path;

TEST_CASE("split_nontree_edges") {
    // triangle with spanning path: split tree is P5
    SimpleGraph c3 = graph(3, {{0, 1}, {1, 2}, {0, 2}});
    SplitResult split = split_nontree_edges(c3, {Edge(0, 1), Edge(1, 2)});
    CHECK(split.tree.p() == 5);
    CHECK(split.tree.n1() == 2);
    CHECK(split.tree.diameter == 4);
    CHECK(split.pendant_pairs.size() == 1);
    CHECK(split.pendant_pairs.count(Edge(0, 2)) == 1);

    // tree input with itself as the spanning tree: identity
    SimpleGraph p4 = path(4).graph;
    SplitResult id = split_nontree_edges(p4, {Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    CHECK(id.tree.p() == 4);
    CHECK(id.pendant_pairs.empty());

    // K4: three split pairs, n1 = 6
    SimpleGraph k4 = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    SplitResult ks = split_nontree_edges(k4, bfs_spanning_tree(k4));
    CHECK(ks.tree.n1() == 6);
    CHECK(ks.tree.n2() == 0);
    CHECK(ks.tree.profile.Delta == 3);

    CHECK_THROWS_WITH_AS(split_nontree_edges(c3, {Edge(0, 1)}),
                         doctest::Contains("NotSpanningTree"), Error);
}

TEST_CASE("cor1_bound") {
    // triangle with a pendant leaf at each vertex: bound 2(q-p+1)+n1 = 5
    SimpleGraph tri = graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    auto b = cor1_bound(tri);
    REQUIRE(b.has_value());
    CHECK(*b == 5);

    // C4 and C3 fail the hypothesis
    CHECK(!cor1_bound(graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
    CHECK(!cor1_bound(graph(3, {{0, 1}, {1, 2}, {0, 2}})));

    CHECK_THROWS_WITH_AS(cor1_bound(path(4).graph), doctest::Contains("IsTree"), Error);
}

TEST_CASE("cotree coloring") {
    SimpleGraph c3 = graph(3, {{0, 1}, {1, 2}, {0, 2}});
    EdgeColoring one = color_cotree(c3, {Edge(0, 1), Edge(1, 2)});
    CHECK(one.palette == 1);

    // K4 with a star spanning tree leaves a triangle: 3 colors
    SimpleGraph k4 = graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EdgeColoring tri = color_cotree(k4, {Edge(0, 1), Edge(0, 2), Edge(0, 3)});
    CHECK(tri.palette == 3);
    CHECK(vdec_test::proper_by_hand(graph(4, {{1, 2}, {1, 3}, {2, 3}}), tri));

    // theta graph: a spanning tree whose cotree is a perfect matching
    SimpleGraph theta = graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    EdgeColoring matching =
        color_cotree(theta, {Edge(0, 2), Edge(1, 2), Edge(0, 3), Edge(1, 4)});
    CHECK(matching.palette == 1);
    // the BFS tree shares its late hub between both non-tree edges: 2 colors
    EdgeColoring bfs_cotree = color_cotree(theta, bfs_spanning_tree(theta));
    CHECK(bfs_cotree.palette == 2);
}

TEST_CASE("cotree colorings are proper within Delta+1 on small graphs") {
    for_each_connected_graph(6, 6, 10, [&](const SimpleGraph& g) {
        auto spanning = bfs_spanning_tree(g);
        std::set<Edge> in_tree(spanning.begin(), spanning.end());
        std::vector<std::pair<int, int>> rest;
        for (const Edge& e : g.edges())
            if (!in_tree.count(e)) rest.emplace_back(e.u, e.v);
        if (rest.empty()) return;
        SimpleGraph cotree = SimpleGraph::build(g.vertex_count(), rest);
        EdgeColoring c = color_cotree(g, spanning);
        CHECK(vdec_test::proper_by_hand(cotree, c));
        CHECK(c.palette <= degree_profile(cotree).Delta + 1);
    });
}

TEST_CASE("bound_report") {
    // tree input: empty cotree
    BoundReport tree_rep = bound_report(path(5).graph);
    CHECK(tree_rep.cotree_colors == 0);
    CHECK(tree_rep.cor2_bound == tree_rep.tree_chi);
    CHECK(tree_rep.tree_chi == 4);
    CHECK(!tree_rep.cor1_bound);

    // C3: spanning P3 gives 2 + 1 = 3, and chi(C3) = 3
    SimpleGraph c3 = graph(3, {{0, 1}, {1, 2}, {0, 2}});
    BoundReport c3_rep = bound_report(c3);
    CHECK(c3_rep.tree_chi == 2);
    CHECK(c3_rep.cotree_colors == 1);
    CHECK(c3_rep.cor2_bound == 3);
    CHECK(exact_chi_s(c3).chi == 3);

    SimpleGraph tri = graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    BoundReport tri_rep = bound_report(tri);
    CHECK(exact_chi_s(tri).chi <= tri_rep.cor2_bound);
    REQUIRE(tri_rep.cor1_bound.has_value());
    CHECK(exact_chi_s(tri).chi <= *tri_rep.cor1_bound);

    BoundReport best = bound_report_best(c3);
    CHECK(best.cor2_bound <= c3_rep.cor2_bound);
}

TEST_CASE("lifting a split-tree coloring") {
    SimpleGraph c3 = graph(3, {{0, 1}, {1, 2}, {0, 2}});
    SplitResult split = split_nontree_edges(c3, bfs_spanning_tree(c3));

    // hand-made tree coloring whose pendant pair shares a color: lift works
    EdgeColoring good;
    good.palette = 3;
    good.set(split.pendant_pairs.at(Edge(1, 2)).first, 1);
    good.set(split.pendant_pairs.at(Edge(1, 2)).second, 1);
    good.set(Edge(0, 1), 2);
    good.set(Edge(0, 2), 3);
    auto lifted = try_lift_split_coloring(c3, split, good);
    REQUIRE(lifted.has_value());
    CHECK(verify(c3, *lifted).is_vdec());
    CHECK(lifted->at(Edge(1, 2)) == 1);

    // mismatched pendant colors: no lift
    EdgeColoring bad = good;
    bad.palette = 4;
    bad.set(split.pendant_pairs.at(Edge(1, 2)).second, 4);
    CHECK(!try_lift_split_coloring(c3, split, bad).has_value());
}
