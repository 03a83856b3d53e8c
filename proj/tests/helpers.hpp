#pragma once

#include "vdec/enumerate.hpp"
#include "vdec/exact.hpp"
#include "vdec/graph.hpp"
#include "vdec/verify.hpp"

#include <set>
#include <vector>

namespace vdec_test {

inline vdec::SimpleGraph graph(int p, std::vector<std::pair<int, int>> edges) {
    return vdec::SimpleGraph::build(p, edges);
}

inline vdec::Tree path(int p) { return vdec::build_path(p); }

/// Minimum palette admitting a vdec, by the fully naive counting oracle.
inline int naive_chi_via_count(const vdec::SimpleGraph& g) {
    for (int k = 1;; ++k)
        if (vdec::count_vdecs(g, k) > 0) return k;
}

/// Minimum palette via the solver with symmetry pruning disabled.
inline int chi_without_symmetry(const vdec::SimpleGraph& g) {
    for (int k = 1;; ++k)
        if (vdec::find_vdec_no_symmetry(g, k, false, 100'000'000)) return k;
}

/// Distinguishing check by explicit pairwise comparison (cross-check partner
/// of the hashed implementation inside verify).
inline bool distinguishing_pairwise(const vdec::SimpleGraph& g, const vdec::EdgeColoring& c) {
    std::vector<vdec::ColorSet> sets;
    for (vdec::VertexId v = 0; v < g.vertex_count(); ++v)
        sets.push_back(vdec::color_set(g, c, v));
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i + 1; j < sets.size(); ++j)
            if (sets[i] == sets[j]) return false;
    return true;
}

inline bool proper_by_hand(const vdec::SimpleGraph& g, const vdec::EdgeColoring& c) {
    for (vdec::VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (vdec::VertexId w : g.neighbors(v))
            if (!seen.insert(c.at(vdec::Edge(v, w))).second) return false;
    }
    return true;
}

/// Free tree counts by Otter's dissimilarity formula over the rooted-tree
/// Euler recurrence; independent of both generators under test.
inline long long otter_free_tree_count(int n) {
    std::vector<long long> t(n + 1, 0);
    if (n >= 1) t[1] = 1;
    for (int m = 1; m < n; ++m) {
        long long acc = 0;
        for (int k = 1; k <= m; ++k) {
            long long c = 0;
            for (int d = 1; d <= k; ++d)
                if (k % d == 0) c += static_cast<long long>(d) * t[d];
            acc += c * t[m + 1 - k];
        }
        t[m + 1] = acc / m;
    }
    long long pair_sum = 0;
    for (int i = 1; i < n; ++i) pair_sum += t[i] * t[n - i];
    long long twice = 2 * t[n] - pair_sum + (n % 2 == 0 ? t[n / 2] : 0);
    return twice / 2;
}

} // namespace vdec_test
