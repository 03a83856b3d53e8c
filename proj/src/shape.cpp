#include "vdec/shape.hpp"

#include <algorithm>
#include <sstream>

namespace vdec {

static TreeShape classify_diam4(const Tree& t) {
    const SimpleGraph& g = t.graph;
    // The middle vertex of any diameter path is the unique center when D=4.
    auto path = longest_path(g);
    VertexId center = path[2];
    DiamFour q;
    q.center = center;
    for (VertexId x : g.neighbors(center)) {
        int d = g.degree(x);
        if (d == 1) {
            q.r++;
        } else if (d == 2) {
            VertexId other = -1;
            for (VertexId y : g.neighbors(x))
                if (y != center) other = y;
            if (g.degree(other) != 1)
                fail(Errc::InvalidShape, "diameter-4 leg mid-vertex without a leaf tip");
            q.m++;
        } else {
            int leaves = 0;
            for (VertexId y : g.neighbors(x)) {
                if (y == center) continue;
                if (g.degree(y) != 1)
                    fail(Errc::InvalidShape, "diameter-4 branch with depth > 2");
                leaves++;
            }
            if (leaves < 2) fail(Errc::InvalidShape, "diameter-4 branch with fewer than 2 leaves");
            q.legs.push_back(leaves);
        }
    }
    // Every diameter-4 tree must fit the Q grammar: two depth-2 arms exist.
    if (q.m + static_cast<int>(q.legs.size()) < 2)
        fail(Errc::InvalidShape, "diameter-4 tree without two depth-2 arms");
    std::sort(q.legs.begin(), q.legs.end());
    return q;
}

TreeShape classify_tree(const Tree& t) {
    if (t.p() < 3) fail(Errc::TooSmall, "classification needs p >= 3");
    int D = t.diameter;
    if (D == 2) return Star{t.p() - 1};
    if (D == 3) {
        // Exactly the two adjacent non-leaf vertices are the centers.
        const SimpleGraph& g = t.graph;
        std::vector<VertexId> centers;
        for (VertexId v = 0; v < t.p(); ++v)
            if (g.degree(v) >= 2) centers.push_back(v);
        if (centers.size() != 2 || !g.has_edge(centers[0], centers[1]))
            fail(Errc::InvalidShape, "diameter-3 tree is not a double star");
        int m = g.degree(centers[0]) - 1;
        int n = g.degree(centers[1]) - 1;
        if (m > n) std::swap(m, n);
        return DoubleStar{m, n};
    }
    if (D == 4) return classify_diam4(t);
    return General{D};
}

bool is_path_p5(const Tree& t) { return t.p() == 5 && t.diameter == 4; }

bool in_exceptional_family(const Tree& t) {
    if (t.diameter != 4) return false;
    auto shape = classify_tree(t);
    const auto* q = std::get_if<DiamFour>(&shape);
    if (!q) return false;
    if (q->m == 2 && q->legs.empty() && q->r >= 1) return true;   // Q(r,2,0), r>=1
    if (q->r == 0 && q->m == 1 && q->legs.size() == 1) return true;   // Q(0,1,1)
    return false;
}

Tree build_star(int leaves) {
    if (leaves < 2) fail(Errc::InvalidShape, "star needs >= 2 leaves");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return as_tree(SimpleGraph::build(leaves + 1, edges));
}

Tree build_double_star(int m, int n) {
    if (m < 1 || n < 1) fail(Errc::InvalidShape, "double star needs m,n >= 1");
    // s=0, t=1, s-leaves 2..m+1, t-leaves m+2..m+n+1
    std::vector<std::pair<int, int>> edges{{0, 1}};
    for (int i = 0; i < m; ++i) edges.emplace_back(0, 2 + i);
    for (int j = 0; j < n; ++j) edges.emplace_back(1, 2 + m + j);
    return as_tree(SimpleGraph::build(m + n + 2, edges));
}

Tree build_diam_four(int r, int m, const std::vector<int>& legs) {
    int n = static_cast<int>(legs.size());
    if (r < 0 || m < 0 || m + n < 2) fail(Errc::InvalidShape, "Q(r,m,n) needs m+n >= 2");
    for (int ri : legs)
        if (ri < 2) fail(Errc::InvalidShape, "Q branch needs >= 2 leaves");
    std::vector<std::pair<int, int>> edges;
    int next = 1;   // w0 = 0
    for (int i = 0; i < r; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < m; ++i) {
        int mid = next++, tip = next++;
        edges.emplace_back(0, mid);
        edges.emplace_back(mid, tip);
    }
    for (int i = 0; i < n; ++i) {
        int branch = next++;
        edges.emplace_back(0, branch);
        for (int j = 0; j < legs[i]; ++j) edges.emplace_back(branch, next++);
    }
    return as_tree(SimpleGraph::build(next, edges));
}

Tree build_path(int p) {
    if (p < 1) fail(Errc::InvalidShape, "path needs p >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < p; ++i) edges.emplace_back(i, i + 1);
    return as_tree(SimpleGraph::build(p, edges));
}

std::string shape_to_string(const TreeShape& s) {
    std::ostringstream out;
    if (const auto* star = std::get_if<Star>(&s)) {
        out << "Star{leaves=" << star->leaves << "}";
    } else if (const auto* ds = std::get_if<DoubleStar>(&s)) {
        out << "DoubleStar{m=" << ds->m << ",n=" << ds->n << "}";
    } else if (const auto* q = std::get_if<DiamFour>(&s)) {
        out << "DiamFour{r=" << q->r << ",m=" << q->m << ",legs=[";
        for (size_t i = 0; i < q->legs.size(); ++i) out << (i ? "," : "") << q->legs[i];
        out << "]}";
    } else {
        out << "General{D=" << std::get<General>(s).diameter << "}";
    }
    return out.str();
}

} // namespace vdec
