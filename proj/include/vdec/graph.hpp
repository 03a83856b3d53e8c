#pragma once

#include "vdec/error.hpp"

#include <compare>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vdec {

/// Dense non-negative vertex index, unique within a graph.
using VertexId = int;

/// Unordered pair of distinct endpoints, normalized so u < v.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    auto operator<=>(const Edge&) const = default;
};

/// Finite undirected simple graph. Immutable after construction; adjacency
/// lists are sorted so every traversal is deterministic.
class SimpleGraph {
public:
    SimpleGraph() = default;

    /// Validates and builds. Throws SelfLoop, DuplicateEdge, VertexOutOfRange.
    static SimpleGraph build(int vertex_count, std::span<const std::pair<int, int>> edge_list);
    static SimpleGraph build(int vertex_count, const std::vector<std::pair<int, int>>& edge_list);

    int vertex_count() const { return p_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(VertexId a, VertexId b) const;
    /// Index into edges() or -1.
    int edge_index(VertexId a, VertexId b) const;

    bool operator==(const SimpleGraph& other) const {
        return p_ == other.p_ && edges_ == other.edges_;
    }

private:
    int p_ = 0;
    std::vector<Edge> edges_;                  // sorted
    std::vector<std::vector<VertexId>> adj_;   // sorted per vertex
};

/// Degree statistics: counts[d] = n_d over delta <= d <= Delta.
struct DegreeProfile {
    std::map<int, int> counts;
    int delta = 0;
    int Delta = 0;

    int n(int d) const {
        auto it = counts.find(d);
        return it == counts.end() ? 0 : it->second;
    }
};

DegreeProfile degree_profile(const SimpleGraph& g);

/// Validated connected acyclic graph with cached statistics.
struct Tree {
    SimpleGraph graph;
    DegreeProfile profile;
    int diameter = 0;   // edges on a longest path

    int p() const { return graph.vertex_count(); }
    int q() const { return graph.edge_count(); }
    int n1() const { return profile.n(1); }
    int n2() const { return profile.n(2); }
};

/// Throws NotConnected / HasCycle unless g is a tree.
Tree as_tree(const SimpleGraph& g);

int diameter(const Tree& t);

/// BFS distances from a start vertex; -1 for unreachable.
std::vector<int> bfs_distances(const SimpleGraph& g, VertexId from);

/// (farthest vertex, distance) from a start vertex; smallest index wins ties.
std::pair<VertexId, int> bfs_farthest(const SimpleGraph& g, VertexId from);

/// Endpoints of a lexicographically-smallest diameter path plus the path itself.
std::vector<VertexId> longest_path(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Diameter by all-pairs BFS; oracle partner of the double sweep.
int diameter_all_pairs(const SimpleGraph& g);

} // namespace vdec
