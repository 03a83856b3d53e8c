#include "vdec/coloring.hpp"

#include <map>

namespace vdec {

EdgeColoring relabel_consecutive(const EdgeColoring& c) {
    std::map<int, int> remap;
    for (const auto& [e, col] : c.assignment) remap[col] = 0;
    int next = 1;
    for (auto& [old_color, fresh] : remap) fresh = next++;
    EdgeColoring out;
    out.palette = static_cast<int>(remap.size());
    for (const auto& [e, col] : c.assignment) out.assignment[e] = remap[col];
    return out;
}

} // namespace vdec
