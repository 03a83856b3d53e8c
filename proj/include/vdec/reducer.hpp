#pragma once

#include "vdec/coloring.hpp"
#include "vdec/graph.hpp"

#include <map>
#include <optional>
#include <vector>

namespace vdec {

/// Result of replacing every non-tree edge uv by two pendant edges uu', vv'.
struct SplitResult {
    Tree tree;
    std::map<Edge, std::pair<Edge, Edge>> pendant_pairs;   // uv -> (uu', vv')
    std::vector<Edge> spanning_tree_edges;
};

struct BoundReport {
    std::optional<int> cor1_bound;
    bool cor1_raised = false;   // split tree landed in the exceptional family
    int cor2_bound = 0;
    int cotree_colors = 0;
    int tree_chi = 0;
};

/// Deterministic BFS spanning tree from vertex 0 (sorted adjacency order).
std::vector<Edge> bfs_spanning_tree(const SimpleGraph& g);

/// Throws NotSpanningTree unless `spanning` is a spanning tree of g.
SplitResult split_nontree_edges(const SimpleGraph& g, const std::vector<Edge>& spanning);

/// 2(q-p+1)+n1(G) when n2(G) admits it, raised by 1 or 2 when the split tree
/// lands in the exceptional family. Throws IsTree on acyclic input.
std::optional<int> cor1_bound(const SimpleGraph& g);

/// Proper edge coloring of the cotree G[E'] with at most Delta(G[E'])+1
/// colors (fan-recoloring construction).
EdgeColoring color_cotree(const SimpleGraph& g, const std::vector<Edge>& spanning);

/// Full report: chi'_s of the BFS spanning tree plus the achieved cotree
/// chromatic index, and the Corollary-1 numbers alongside.
BoundReport bound_report(const SimpleGraph& g);

/// Best bound over every spanning tree (tiny graphs only; count capped).
BoundReport bound_report_best(const SimpleGraph& g, int tree_cap = 200000);

/// Best-effort lift of a split-tree coloring back onto g: works iff each
/// pendant pair carries one shared color and the lifted coloring verifies.
std::optional<EdgeColoring> try_lift_split_coloring(const SimpleGraph& g, const SplitResult& split,
                                                    const EdgeColoring& tree_coloring);

} // namespace vdec
