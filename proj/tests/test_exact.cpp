#include "helpers.hpp"

#include "vdec/colorer.hpp"
#include "vdec/exact.hpp"
#include "vdec/verify.hpp"

#include <doctest.h>

using namespace vdec;
using vdec_test::graph;
using vdec_test::path;

TEST_CASE("exact chi_s on the small landmarks") {
    ExactResult p5 = exact_chi_s(path(5).graph);
    CHECK(p5.chi == 4);
    CHECK(verify(path(5).graph, p5.witness).is_vdec());

    ExactResult star = exact_chi_s(graph(4, {{0, 1}, {0, 2}, {0, 3}}));
    CHECK(star.chi == 3);

    ExactResult p6 = exact_chi_s(path(6).graph);
    CHECK(p6.chi == 4);
    CHECK(count_vdecs(path(6).graph, 3) == 0);   // independent: palette 3 is empty
}

TEST_CASE("exact witnesses use exactly chi colors") {
    for (int n = 3; n <= 8; ++n)
        for_each_tree(n, [&](const Tree& t) {
            ExactResult r = exact_chi_s(t.graph);
            CHECK(verify(t.graph, r.witness).is_vdec());
            CHECK(r.witness.color_count() == r.chi);
            CHECK(r.chi >= conjecture_lower_bound(t.profile));
        });
}

TEST_CASE("equitable exact values") {
    // S_{3,3}: every class has size one at k = 5
    Tree s33 = build_double_star(2, 2);
    ExactResult es = exact_chi_es(s33.graph);
    CHECK(es.chi == 5);
    auto sizes = es.witness.class_sizes();
    for (int c = 1; c <= 5; ++c) CHECK(sizes[c] == 1);
    CHECK(exact_chi_s(s33.graph).chi == 5);

    CHECK(exact_chi_es(path(5).graph).chi == 4);

    CHECK_THROWS_WITH_AS(exact_chi_es(graph(2, {{0, 1}})),
                         doctest::Contains("StructurallyUncolorable"), Error);
}

TEST_CASE("equitable dominates plain chi") {
    for (int n = 3; n <= 8; ++n)
        for_each_tree(n, [&](const Tree& t) {
            int s = exact_chi_s(t.graph).chi;
            ExactResult es = exact_chi_es(t.graph);
            CHECK(es.chi >= s);
            VdecReport rep = verify(t.graph, es.witness);
            CHECK(rep.is_vdec());
            CHECK(rep.equitable);
        });
}

TEST_CASE("count_vdecs by naive enumeration") {
    CHECK(count_vdecs(path(3).graph, 2) == 2);
    CHECK(count_vdecs(path(5).graph, 3) == 0);
    CHECK(count_vdecs(graph(4, {{0, 1}, {0, 2}, {0, 3}}), 3) == 6);
    CHECK_THROWS_WITH_AS(count_vdecs(path(5).graph, 3, 10), doctest::Contains("BudgetExceeded"),
                         Error);
}

TEST_CASE("budget and feasibility errors") {
    SolverConfig tiny;
    tiny.node_budget = 3;
    CHECK_THROWS_WITH_AS(exact_chi_s(path(6).graph, tiny), doctest::Contains("BudgetExceeded"),
                         Error);

    SolverConfig capped;
    capped.max_palette = 2;
    CHECK_THROWS_WITH_AS(exact_chi_s(path(5).graph, capped), doctest::Contains("Infeasible"),
                         Error);

    CHECK_THROWS_WITH_AS(exact_chi_s(graph(2, {{0, 1}})),
                         doctest::Contains("StructurallyUncolorable"), Error);
    CHECK_THROWS_WITH_AS(exact_chi_s(graph(5, {{0, 1}, {0, 2}})),
                         doctest::Contains("StructurallyUncolorable"), Error);
    // one isolated vertex is allowed
    CHECK(exact_chi_s(graph(4, {{0, 1}, {0, 2}})).chi == 2);
}

TEST_CASE("symmetry pruning does not change the answer") {
    for (int n = 3; n <= 7; ++n)
        for_each_tree(n, [&](const Tree& t) {
            CHECK(exact_chi_s(t.graph).chi == vdec_test::chi_without_symmetry(t.graph));
        });
}
