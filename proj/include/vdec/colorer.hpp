#pragma once

#include "vdec/coloring.hpp"
#include "vdec/graph.hpp"
#include "vdec/shape.hpp"

#include <string>
#include <vector>

namespace vdec {

enum class Regime { Star, Diam3, ExceptionalU, PathP5, Generic };

const char* regime_name(Regime r);

struct ChiPrediction {
    int value = 0;
    Regime regime = Regime::Generic;
};

enum class StepKind {
    DropLeafHighDeg,        // leaf at a >=4-degree vertex removed
    SuppressDegree2,        // degree-2 vertex suppressed after leaf removal
    TwinLeavesPlusDegree2,  // two leaves at a 3-degree vertex + one suppression
    DoubleEndReduction,     // both path ends trimmed (+ up to two suppressions)
    LeafPlusPath2,          // leaf, its 3-degree support and a path-end 2-vertex
    BroomDetach,            // broom of length-2 legs detached
};

const char* step_kind_name(StepKind k);

struct ReductionStep {
    StepKind kind;
    std::vector<VertexId> removed_vertices;
    std::vector<Edge> removed_edges;
    std::vector<Edge> added_edges;
    std::string extension_recipe;   // the lift actually applied, edge=color pairs
};

/// Counters for the fallback/assert paths of the inductive construction.
struct ColorerStats {
    long long base_exact_solves = 0;    // reduced tree hit a D<=4 base case
    long long recipe_fallbacks = 0;     // a verbatim source recipe failed verification
    long long local_repairs = 0;        // recipe edges re-solved locally after a miss
    long long rescue_exact_solves = 0;  // even the local re-solve failed; whole-tree search
    long long diam4_fallbacks = 0;      // a closed-form diameter-4 coloring failed verify
    long long case31_hits = 0;          // Case 3.1 configuration observed (expected 0)
};

/// Theorem-level prediction of chi'_s. Requires p >= 3 and n2 <= n1
/// (Q(0,2,0) is admitted explicitly: it is the unique small-diameter tree
/// outside that hypothesis and the theorem still pins its value).
ChiPrediction predict_chi_s(const Tree& t);

/// The diameter-3 closed form on the canonical S_{m+1,n+1} layout:
/// f(ss_i)=i, f(st)=m+1, f(tt_j)=m+1+j. Every color used exactly once.
EdgeColoring color_double_star(int m, int n);

/// Closed-form coloring of the canonical Q(r,m,legs) layout using exactly
/// predict_chi_s colors; every color appears at most twice.
EdgeColoring color_diam4(const DiamFour& shape);

/// Same construction on a concrete diameter-4 tree (shape must come from
/// classify_tree of that tree).
EdgeColoring color_diam4_on(const Tree& t, const DiamFour& shape, ColorerStats* stats = nullptr);

/// Constructive vdec with exactly predict_chi_s(t).value colors, following
/// the inductive case analysis for D >= 5 and the closed forms below that.
/// Throws HypothesisViolated / TooSmall / InternalCaseExhaustion.
EdgeColoring color_tree(const Tree& t, ColorerStats* stats = nullptr,
                        std::vector<ReductionStep>* trace = nullptr);

/// Smallest-index 2-degree vertex with a neighbor of degree <= 2.
/// Guaranteed to exist when n2 >= n1; throws NotFound otherwise.
VertexId find_balancing_vertex(const Tree& t);

/// Rebalance a k-vdec into an equitable k-vdec by local recoloring moves.
/// Requires q <= 2(n1+1). Throws RebalanceFailed when the bounded move
/// search (q^2 attempts) cannot finish the job.
EdgeColoring equitable_finish(const Tree& t, const EdgeColoring& c);

} // namespace vdec
