#include "vdec/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace vdec {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::SelfLoop: return "SelfLoop";
        case Errc::DuplicateEdge: return "DuplicateEdge";
        case Errc::VertexOutOfRange: return "VertexOutOfRange";
        case Errc::NotConnected: return "NotConnected";
        case Errc::HasCycle: return "HasCycle";
        case Errc::TooSmall: return "TooSmall";
        case Errc::UncoloredEdge: return "UncoloredEdge";
        case Errc::InvalidColor: return "InvalidColor";
        case Errc::IndistinguishableByStructure: return "IndistinguishableByStructure";
        case Errc::Infeasible: return "Infeasible";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::StructurallyUncolorable: return "StructurallyUncolorable";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::InternalCaseExhaustion: return "InternalCaseExhaustion";
        case Errc::NotFound: return "NotFound";
        case Errc::InvalidShape: return "InvalidShape";
        case Errc::NotSpanningTree: return "NotSpanningTree";
        case Errc::IsTree: return "IsTree";
        case Errc::RebalanceFailed: return "RebalanceFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "UnknownError";
}

static std::string pair_str(int a, int b) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

SimpleGraph SimpleGraph::build(int vertex_count, std::span<const std::pair<int, int>> edge_list) {
    SimpleGraph g;
    g.p_ = vertex_count;
    g.adj_.assign(std::max(vertex_count, 0), {});
    std::set<Edge> seen;
    for (const auto& [a, b] : edge_list) {
        if (a < 0 || a >= vertex_count || b < 0 || b >= vertex_count)
            fail(Errc::VertexOutOfRange, "edge " + pair_str(a, b) + " outside [0," +
                                             std::to_string(vertex_count - 1) + "]");
        if (a == b) fail(Errc::SelfLoop, "edge " + pair_str(a, b));
        Edge e(a, b);
        if (!seen.insert(e).second) fail(Errc::DuplicateEdge, "edge " + pair_str(a, b));
    }
    g.edges_.assign(seen.begin(), seen.end());
    for (const Edge& e : g.edges_) {
        g.adj_[e.u].push_back(e.v);
        g.adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

SimpleGraph SimpleGraph::build(int vertex_count, const std::vector<std::pair<int, int>>& edge_list) {
    return build(vertex_count, std::span<const std::pair<int, int>>(edge_list));
}

bool SimpleGraph::has_edge(VertexId a, VertexId b) const { return edge_index(a, b) >= 0; }

int SimpleGraph::edge_index(VertexId a, VertexId b) const {
    Edge e(a, b);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e) return static_cast<int>(it - edges_.begin());
    return -1;
}

DegreeProfile degree_profile(const SimpleGraph& g) {
    DegreeProfile prof;
    if (g.vertex_count() == 0) return prof;
    prof.delta = g.vertex_count();
    prof.Delta = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        int d = g.degree(v);
        prof.counts[d]++;
        prof.delta = std::min(prof.delta, d);
        prof.Delta = std::max(prof.Delta, d);
    }
    return prof;
}

std::vector<int> bfs_distances(const SimpleGraph& g, VertexId from) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<VertexId> queue{from};
    dist[from] = 0;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

std::pair<VertexId, int> bfs_farthest(const SimpleGraph& g, VertexId from) {
    auto dist = bfs_distances(g, from);
    VertexId best = from;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (dist[v] > dist[best]) best = v;
    return {best, dist[best]};
}

bool is_connected(const SimpleGraph& g) {
    if (g.vertex_count() == 0) return true;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

Tree as_tree(const SimpleGraph& g) {
    if (!is_connected(g)) fail(Errc::NotConnected, "graph is not connected");
    if (g.edge_count() != g.vertex_count() - 1)
        fail(Errc::HasCycle, "connected graph with q != p-1");
    Tree t;
    t.graph = g;
    t.profile = degree_profile(g);
    if (g.vertex_count() <= 1) {
        t.diameter = 0;
    } else {
        auto [a, da] = bfs_farthest(g, 0);
        auto [b, db] = bfs_farthest(g, a);
        (void)b;
        t.diameter = db;
    }
    return t;
}

int diameter(const Tree& t) { return t.diameter; }

int diameter_all_pairs(const SimpleGraph& g) {
    int best = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        auto dist = bfs_distances(g, v);
        for (int d : dist) best = std::max(best, d);
    }
    return best;
}

std::vector<VertexId> longest_path(const SimpleGraph& g) {
    // Diameter endpoints with lexicographically smallest (min,max) pair,
    // then the unique tree path between them.
    int p = g.vertex_count();
    if (p == 1) return {0};
    int best_len = -1;
    std::pair<VertexId, VertexId> best{0, 0};
    std::vector<std::vector<int>> dists(p);
    for (VertexId v = 0; v < p; ++v) dists[v] = bfs_distances(g, v);
    for (VertexId a = 0; a < p; ++a)
        for (VertexId b = a + 1; b < p; ++b)
            if (dists[a][b] > best_len) {
                best_len = dists[a][b];
                best = {a, b};
            }
    // Walk from best.first to best.second along decreasing distance.
    std::vector<VertexId> path{best.first};
    const auto& db = dists[best.second];
    VertexId cur = best.first;
    while (cur != best.second) {
        for (VertexId w : g.neighbors(cur))
            if (db[w] == db[cur] - 1) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    return path;
}

} // namespace vdec
