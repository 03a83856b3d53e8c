#pragma once

#include "vdec/graph.hpp"

#include <map>
#include <set>
#include <vector>

namespace vdec {

/// Sorted set of colors incident to a vertex. Under a proper coloring its
/// size equals the vertex degree.
using ColorSet = std::vector<int>;

/// Assignment edge -> positive color over a declared palette [1..palette].
/// Colors need not be consecutive but must stay inside the palette.
struct EdgeColoring {
    int palette = 0;
    std::map<Edge, int> assignment;

    int at(Edge e) const {
        auto it = assignment.find(e);
        if (it == assignment.end())
            fail(Errc::UncoloredEdge,
                 "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") has no color");
        return it->second;
    }

    void set(Edge e, int color) { assignment[e] = color; }

    int color_count() const {
        std::set<int> used;
        for (const auto& [e, c] : assignment) used.insert(c);
        return static_cast<int>(used.size());
    }

    /// Sizes of the classes S_1..S_palette (unused palette colors count as 0).
    std::vector<int> class_sizes() const {
        std::vector<int> sizes(palette + 1, 0);
        for (const auto& [e, c] : assignment)
            if (c >= 1 && c <= palette) sizes[c]++;
        return sizes;
    }

    bool operator==(const EdgeColoring&) const = default;
};

/// Remap used colors to 1..count preserving relative order; palette shrinks
/// to the used count. Canonical form for file output.
EdgeColoring relabel_consecutive(const EdgeColoring& c);

} // namespace vdec
