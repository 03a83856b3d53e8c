#pragma once

#include "vdec/coloring.hpp"
#include "vdec/graph.hpp"

#include <optional>
#include <variant>

namespace vdec {

/// Two incident edges of one vertex share a color.
struct ProperViolation {
    VertexId vertex;
    Edge e1, e2;
    int color;
};

/// Two vertices with identical incident color sets.
struct DistinguishingViolation {
    VertexId u, v;
    ColorSet colors;
};

/// Two palette classes whose sizes differ by >= 2.
struct EquitableViolation {
    int color_small, color_big;
    int size_small, size_big;
};

using Violation = std::variant<ProperViolation, DistinguishingViolation, EquitableViolation>;

struct VdecReport {
    bool proper = false;
    bool distinguishing = false;
    bool equitable = false;
    std::optional<Violation> violation;   // present iff some flag is false
    int colors_used = 0;

    bool is_vdec() const { return proper && distinguishing; }
};

/// Colors on the edges incident to u. Throws UncoloredEdge.
ColorSet color_set(const SimpleGraph& g, const EdgeColoring& c, VertexId u);

/// Properness, the vertex-distinguishing property, and palette-relative
/// equitability in one pass. Graphs that cannot be distinguished at all
/// (two isolated vertices, or an isolated edge) throw
/// IndistinguishableByStructure.
VdecReport verify(const SimpleGraph& g, const EdgeColoring& c);

/// Smallest k with binomial(k,d) >= n_d for all degrees present.
/// Counting lower bound for any vdec.
int conjecture_lower_bound(const DegreeProfile& prof);

std::string violation_to_string(const Violation& v);

} // namespace vdec
