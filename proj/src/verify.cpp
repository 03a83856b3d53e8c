#include "vdec/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace vdec {

ColorSet color_set(const SimpleGraph& g, const EdgeColoring& c, VertexId u) {
    ColorSet colors;
    for (VertexId w : g.neighbors(u)) colors.push_back(c.at(Edge(u, w)));
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    return colors;
}

static void require_distinguishable_structure(const SimpleGraph& g) {
    int isolated = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) isolated++;
    if (isolated >= 2)
        fail(Errc::IndistinguishableByStructure, "two isolated vertices share the empty color set");
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 1 && g.degree(e.v) == 1)
            fail(Errc::IndistinguishableByStructure,
                 "isolated edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
}

VdecReport verify(const SimpleGraph& g, const EdgeColoring& c) {
    require_distinguishable_structure(g);

    for (const Edge& e : g.edges()) {
        int color = c.at(e);   // throws UncoloredEdge
        if (color < 1 || color > c.palette)
            fail(Errc::InvalidColor, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                         ") colored " + std::to_string(color) +
                                         " outside palette [1," + std::to_string(c.palette) + "]");
    }

    VdecReport report;
    report.proper = true;
    report.colors_used = c.color_count();

    for (VertexId v = 0; v < g.vertex_count() && report.proper; ++v) {
        std::map<int, VertexId> seen;   // color -> other endpoint
        for (VertexId w : g.neighbors(v)) {
            int color = c.at(Edge(v, w));
            auto [it, fresh] = seen.emplace(color, w);
            if (!fresh) {
                report.proper = false;
                report.violation = ProperViolation{v, Edge(v, it->second), Edge(v, w), color};
                break;
            }
        }
    }

    // Distinguishing: hash the sets, pull the concrete pair only on a clash.
    report.distinguishing = true;
    std::map<ColorSet, VertexId> sets;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        ColorSet cs = color_set(g, c, v);
        auto [it, fresh] = sets.emplace(cs, v);
        if (!fresh) {
            report.distinguishing = false;
            if (!report.violation) report.violation = DistinguishingViolation{it->second, v, cs};
            break;
        }
    }

    report.equitable = true;
    if (c.palette > 0) {
        auto sizes = c.class_sizes();
        int arg_min = 1, arg_max = 1;
        for (int color = 1; color <= c.palette; ++color) {
            if (sizes[color] < sizes[arg_min]) arg_min = color;
            if (sizes[color] > sizes[arg_max]) arg_max = color;
        }
        if (sizes[arg_max] - sizes[arg_min] >= 2) {
            report.equitable = false;
            if (!report.violation)
                report.violation =
                    EquitableViolation{arg_min, arg_max, sizes[arg_min], sizes[arg_max]};
        }
    }
    return report;
}

int conjecture_lower_bound(const DegreeProfile& prof) {
    // binomial with early cutoff; values stay tiny at desk scale
    auto binom_at_least = [](int k, int d, long long need) {
        if (d < 0 || d > k) return need <= 0;
        long long acc = 1;
        for (int i = 1; i <= d; ++i) {
            acc = acc * (k - d + i) / i;
            if (acc >= need) return true;
        }
        return acc >= need;
    };
    int k = std::max(prof.Delta, 1);
    for (;; ++k) {
        bool ok = true;
        for (const auto& [d, nd] : prof.counts) {
            if (d == 0) {
                if (nd >= 2) fail(Errc::StructurallyUncolorable, "two isolated vertices");
                continue;
            }
            if (!binom_at_least(k, d, nd)) {
                ok = false;
                break;
            }
        }
        if (ok) return k;
    }
}

std::string violation_to_string(const Violation& v) {
    std::ostringstream out;
    if (const auto* pv = std::get_if<ProperViolation>(&v)) {
        out << "vertex " << pv->vertex << " has edges (" << pv->e1.u << "," << pv->e1.v << ") and ("
            << pv->e2.u << "," << pv->e2.v << ") both colored " << pv->color;
    } else if (const auto* dv = std::get_if<DistinguishingViolation>(&v)) {
        out << "vertices " << dv->u << " and " << dv->v << " share color set {";
        for (size_t i = 0; i < dv->colors.size(); ++i) out << (i ? "," : "") << dv->colors[i];
        out << "}";
    } else {
        const auto& ev = std::get<EquitableViolation>(v);
        out << "class " << ev.color_big << " has " << ev.size_big << " edges while class "
            << ev.color_small << " has " << ev.size_small;
    }
    return out.str();
}

} // namespace vdec
