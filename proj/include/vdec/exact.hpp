#pragma once

#include "vdec/coloring.hpp"
#include "vdec/graph.hpp"

#include <optional>

namespace vdec {

struct SolverConfig {
    int max_palette = 0;                    // 0 = edge count (always sufficient)
    bool equitable = false;
    long long node_budget = 100'000'000;
};

struct ExactResult {
    int chi = 0;
    EdgeColoring witness;
    long long nodes_explored = 0;
};

/// Exact vdec chromatic number by exhaustive backtracking. Search runs
/// palettes upward from the counting lower bound; chi-1 is always exhausted,
/// so minimality is certified by search alone. Throws Infeasible,
/// BudgetExceeded, StructurallyUncolorable.
ExactResult exact_chi_s(const SimpleGraph& g, SolverConfig cfg = {});

/// Same search with the equitable class-size constraint over [1..k].
ExactResult exact_chi_es(const SimpleGraph& g, SolverConfig cfg = {});

/// Search a single fixed palette; nullopt when exhausted without a witness.
/// nodes (if given) accumulates explored search nodes.
std::optional<EdgeColoring> find_vdec(const SimpleGraph& g, int palette, bool equitable,
                                      long long node_budget, long long* nodes = nullptr);

/// Number of vdecs with palette [1..k], by plain enumeration of all k^q
/// assignments (each checked through verify). The naive second oracle;
/// no pruning, no symmetry reduction.
long long count_vdecs(const SimpleGraph& g, int palette, long long budget = 100'000'000);

/// Internal knob for the oracle self-consistency check: disable the
/// color-symmetry pruning inside find_vdec/exact_chi_s.
std::optional<EdgeColoring> find_vdec_no_symmetry(const SimpleGraph& g, int palette,
                                                  bool equitable, long long node_budget,
                                                  long long* nodes = nullptr);

/// Throws StructurallyUncolorable when g has an isolated edge or two
/// isolated vertices (no vdec exists regardless of palette).
void require_colorable_structure(const SimpleGraph& g);

} // namespace vdec
