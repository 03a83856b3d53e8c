#pragma once

#include "vdec/graph.hpp"
#include "vdec/shape.hpp"

#include <functional>
#include <string>
#include <vector>

namespace vdec {

/// Canonical level-sequence string of the free tree (root = centroid,
/// children ordered lexicographically largest-first; bicentroids take the
/// larger of the two rootings). Equal strings <=> isomorphic trees.
std::string canonical_id(const Tree& t);

/// Canonical id for an arbitrary labeled tree given as a graph.
std::string canonical_id(const SimpleGraph& g);

/// Beyer-Hedetniemi successor generator over canonical rooted level
/// sequences on n vertices.
class TreeIterator {
public:
    explicit TreeIterator(int n);

    /// Next rooted level sequence (levels start at 1), or false when done.
    bool next(std::vector<int>& levels);

private:
    int n_;
    std::vector<int> levels_;
    bool first_ = true;
    bool done_ = false;
};

Tree tree_from_levels(const std::vector<int>& levels);

/// Every free tree on exactly n vertices, once each: rooted sequences
/// filtered to those equal to their own free-tree canonical form.
/// 1 <= n <= 16.
void for_each_tree(int n, const std::function<void(const Tree&)>& fn);
std::vector<Tree> enumerate_trees(int n);

/// Independent oracle: number of free trees on n vertices by generating all
/// n^(n-2) Prufer sequences and deduplicating canonical ids. n <= 8.
long long prufer_tree_count(int n);

Tree tree_from_prufer(const std::vector<int>& seq);

/// Canonical tree for classification parameters (round-trip partner of
/// classify_tree). Throws InvalidShape.
Tree shape_builder(const TreeShape& shape);

/// Connected graphs on exactly p vertices with q_min..q_max edges, one per
/// isomorphism class (canonical adjacency mask, degree-refined permutation
/// search). Intended for p <= 8.
void for_each_connected_graph(int p, int q_min, int q_max,
                              const std::function<void(const SimpleGraph&)>& fn);

/// Canonical 64-bit adjacency mask; equal <=> isomorphic (p <= 11).
unsigned long long canonical_graph_key(const SimpleGraph& g);

} // namespace vdec
