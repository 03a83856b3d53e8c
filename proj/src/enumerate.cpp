#include "vdec/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace vdec {

namespace {

std::vector<std::vector<VertexId>> children_lists(const SimpleGraph& g, VertexId root) {
    std::vector<std::vector<VertexId>> kids(g.vertex_count());
    std::vector<int> parent(g.vertex_count(), -2);
    std::vector<VertexId> stack{root};
    parent[root] = -1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : g.neighbors(v))
            if (parent[w] == -2) {
                parent[w] = v;
                kids[v].push_back(w);
                stack.push_back(w);
            }
    }
    return kids;
}

std::vector<int> canon_rooted(const SimpleGraph& g, VertexId root) {
    auto kids = children_lists(g, root);
    // post-order canonical sequence: children ordered lexicographically
    // largest-first, which yields the lex-max plane level sequence
    std::vector<std::vector<int>> memo(g.vertex_count());
    std::vector<std::pair<VertexId, int>> stack{{root, 0}};
    std::vector<char> expanded(g.vertex_count(), 0);
    std::vector<int> depth(g.vertex_count(), 1);
    std::vector<VertexId> order;
    // iterative post-order
    std::vector<VertexId> dfs{root};
    while (!dfs.empty()) {
        VertexId v = dfs.back();
        if (!expanded[v]) {
            expanded[v] = 1;
            for (VertexId w : kids[v]) {
                depth[w] = depth[v] + 1;
                dfs.push_back(w);
            }
            continue;
        }
        dfs.pop_back();
        std::vector<std::vector<int>> parts;
        for (VertexId w : kids[v]) parts.push_back(std::move(memo[w]));
        std::sort(parts.begin(), parts.end(), std::greater<>());
        std::vector<int> seq{depth[v]};
        for (auto& part : parts) seq.insert(seq.end(), part.begin(), part.end());
        memo[v] = std::move(seq);
    }
    return memo[root];
}

std::vector<VertexId> centroids(const SimpleGraph& g) {
    int p = g.vertex_count();
    if (p == 1) return {0};
    auto kids = children_lists(g, 0);
    std::vector<int> size(p, 1);
    // sizes in reverse BFS order
    std::vector<VertexId> order{0};
    for (size_t i = 0; i < order.size(); ++i)
        for (VertexId w : kids[order[i]]) order.push_back(w);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        for (VertexId w : kids[*it]) size[*it] += size[w];
    std::vector<VertexId> best;
    int best_weight = p + 1;
    for (VertexId v = 0; v < p; ++v) {
        int weight = p - size[v];
        for (VertexId w : kids[v]) weight = std::max(weight, size[w]);
        if (weight < best_weight) {
            best_weight = weight;
            best = {v};
        } else if (weight == best_weight) {
            best.push_back(v);
        }
    }
    return best;
}

std::string seq_to_string(const std::vector<int>& seq) {
    std::ostringstream out;
    for (size_t i = 0; i < seq.size(); ++i) out << (i ? "-" : "") << seq[i];
    return out.str();
}

} // namespace

std::string canonical_id(const SimpleGraph& g) {
    auto cents = centroids(g);
    std::vector<int> best = canon_rooted(g, cents[0]);
    if (cents.size() == 2) best = std::max(best, canon_rooted(g, cents[1]));
    return seq_to_string(best);
}

std::string canonical_id(const Tree& t) { return canonical_id(t.graph); }

TreeIterator::TreeIterator(int n) : n_(n) {
    if (n < 1 || n > 16) fail(Errc::InvalidShape, "tree enumeration supports 1 <= n <= 16");
    levels_.resize(n);
    std::iota(levels_.begin(), levels_.end(), 1);
}

bool TreeIterator::next(std::vector<int>& levels) {
    if (done_) return false;
    if (first_) {
        first_ = false;
        levels = levels_;
        return true;
    }
    int p = -1;
    for (int i = n_ - 1; i >= 0; --i)
        if (levels_[i] > 2) {
            p = i;
            break;
        }
    if (p < 0) {
        done_ = true;
        return false;
    }
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (levels_[i] == levels_[p] - 1) {
            q = i;
            break;
        }
    for (int i = p; i < n_; ++i) levels_[i] = levels_[i - (p - q)];
    levels = levels_;
    return true;
}

Tree tree_from_levels(const std::vector<int>& levels) {
    int n = static_cast<int>(levels.size());
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        for (int j = i - 1; j >= 0; --j)
            if (levels[j] == levels[i] - 1) {
                edges.emplace_back(j, i);
                break;
            }
    }
    return as_tree(SimpleGraph::build(n, edges));
}

void for_each_tree(int n, const std::function<void(const Tree&)>& fn) {
    TreeIterator it(n);
    std::vector<int> levels;
    while (it.next(levels)) {
        Tree t = tree_from_levels(levels);
        if (canonical_id(t) == seq_to_string(levels)) fn(t);
    }
}

std::vector<Tree> enumerate_trees(int n) {
    std::vector<Tree> out;
    for_each_tree(n, [&](const Tree& t) { out.push_back(t); });
    return out;
}

Tree tree_from_prufer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    std::vector<int> deg(n, 1);
    for (int v : seq) deg[v]++;
    std::vector<std::pair<int, int>> edges;
    std::vector<char> used(n, 0);
    for (int v : seq) {
        for (int leaf = 0; leaf < n; ++leaf)
            if (deg[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, v);
                used[leaf] = 1;
                deg[v]--;
                break;
            }
    }
    std::vector<int> last;
    for (int v = 0; v < n; ++v)
        if (!used[v] && deg[v] == 1) last.push_back(v);
    edges.emplace_back(last[0], last[1]);
    return as_tree(SimpleGraph::build(n, edges));
}

long long prufer_tree_count(int n) {
    if (n < 1 || n > 8) fail(Errc::InvalidShape, "prufer oracle supports 1 <= n <= 8");
    if (n <= 2) return 1;
    std::unordered_set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        seen.insert(canonical_id(tree_from_prufer(seq)));
        int i = 0;
        while (i < n - 2 && seq[i] == n - 1) seq[i++] = 0;
        if (i == n - 2) break;
        seq[i]++;
    }
    return static_cast<long long>(seen.size());
}

Tree shape_builder(const TreeShape& shape) {
    if (const auto* star = std::get_if<Star>(&shape)) return build_star(star->leaves);
    if (const auto* ds = std::get_if<DoubleStar>(&shape)) return build_double_star(ds->m, ds->n);
    if (const auto* q = std::get_if<DiamFour>(&shape)) return build_diam_four(q->r, q->m, q->legs);
    fail(Errc::InvalidShape, "no canonical construction for the General shape");
}

// ---------------------------------------------------------------------------
// Connected graphs up to isomorphism
// ---------------------------------------------------------------------------

namespace {

struct PairTable {
    int p;
    int idx[16][16];
    std::vector<std::pair<int, int>> pairs;

    explicit PairTable(int p_) : p(p_) {
        int next = 0;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                idx[i][j] = idx[j][i] = next++;
                pairs.emplace_back(i, j);
            }
    }
};

unsigned long long relabel_mask(unsigned long long mask, const std::vector<int>& perm,
                                const PairTable& table) {
    unsigned long long out = 0;
    for (size_t b = 0; b < table.pairs.size(); ++b)
        if (mask & (1ULL << b)) {
            auto [i, j] = table.pairs[b];
            out |= 1ULL << table.idx[perm[i]][perm[j]];
        }
    return out;
}

/// Max relabeled mask over all degree-class-preserving permutations.
unsigned long long canonical_mask(unsigned long long mask, const std::vector<int>& degrees,
                                  const PairTable& table) {
    int p = table.p;
    // group vertices by degree
    std::vector<int> verts(p);
    std::iota(verts.begin(), verts.end(), 0);
    std::stable_sort(verts.begin(), verts.end(),
                     [&](int a, int b) { return degrees[a] > degrees[b]; });
    std::vector<std::pair<int, int>> classes;   // [begin, end) into verts
    for (int i = 0; i < p;) {
        int j = i;
        while (j < p && degrees[verts[j]] == degrees[verts[i]]) j++;
        classes.emplace_back(i, j);
        i = j;
    }
    unsigned long long best = 0;
    std::vector<int> perm(p);
    // recursive cartesian product of within-class permutations
    auto rec = [&](auto&& self, size_t ci) -> void {
        if (ci == classes.size()) {
            // perm maps original vertex -> canonical slot
            std::vector<int> mapping(p);
            for (int slot = 0; slot < p; ++slot) mapping[verts[slot]] = perm[slot];
            best = std::max(best, relabel_mask(mask, mapping, table));
            return;
        }
        auto [lo, hi] = classes[ci];
        std::vector<int> slots(hi - lo);
        std::iota(slots.begin(), slots.end(), lo);
        do {
            for (int i = lo; i < hi; ++i) perm[i] = slots[i - lo];
            self(self, ci + 1);
        } while (std::next_permutation(slots.begin(), slots.end()));
    };
    rec(rec, 0);
    return best;
}

bool mask_connected(unsigned long long mask, int p, const PairTable& table) {
    int parent[16];
    std::iota(parent, parent + p, 0);
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    int comps = p;
    for (size_t b = 0; b < table.pairs.size(); ++b)
        if (mask & (1ULL << b)) {
            int a = find(table.pairs[b].first), c = find(table.pairs[b].second);
            if (a != c) {
                parent[a] = c;
                comps--;
            }
        }
    return comps == 1;
}

} // namespace

unsigned long long canonical_graph_key(const SimpleGraph& g) {
    int p = g.vertex_count();
    if (p > 11) fail(Errc::InvalidShape, "canonical key supports p <= 11");
    PairTable table(p);
    unsigned long long mask = 0;
    for (const Edge& e : g.edges()) mask |= 1ULL << table.idx[e.u][e.v];
    std::vector<int> degrees(p);
    for (int v = 0; v < p; ++v) degrees[v] = g.degree(v);
    return canonical_mask(mask, degrees, table);
}

void for_each_connected_graph(int p, int q_min, int q_max,
                              const std::function<void(const SimpleGraph&)>& fn) {
    if (p < 1 || p > 8) fail(Errc::InvalidShape, "graph enumeration supports 1 <= p <= 8");
    if (p == 1) {
        if (q_min <= 0) fn(SimpleGraph::build(1, std::vector<std::pair<int, int>>{}));
        return;
    }
    PairTable table(p);
    int npairs = p * (p - 1) / 2;
    q_max = std::min(q_max, npairs);
    q_min = std::max(q_min, p - 1);

    std::unordered_set<unsigned long long> seen;
    for (int q = q_min; q <= q_max; ++q) {
        if (q == 0) continue;
        unsigned long long mask = (1ULL << q) - 1;
        const unsigned long long limit = 1ULL << npairs;
        while (mask < limit) {
            // degrees sorted descending acts as a cheap pre-canonical filter
            int degrees[16] = {0};
            for (int b = 0; b < npairs; ++b)
                if (mask & (1ULL << b)) {
                    degrees[table.pairs[b].first]++;
                    degrees[table.pairs[b].second]++;
                }
            bool sorted = true;
            for (int v = 0; v + 1 < p; ++v)
                if (degrees[v] < degrees[v + 1]) {
                    sorted = false;
                    break;
                }
            if (sorted && degrees[p - 1] >= 1 && mask_connected(mask, p, table)) {
                std::vector<int> degv(degrees, degrees + p);
                unsigned long long key = canonical_mask(mask, degv, table);
                if (seen.insert(key).second) {
                    std::vector<std::pair<int, int>> edges;
                    for (int b = 0; b < npairs; ++b)
                        if (key & (1ULL << b)) edges.push_back(table.pairs[b]);
                    fn(SimpleGraph::build(p, edges));
                }
            }
            unsigned long long lo = mask & (~mask + 1);
            unsigned long long ripple = mask + lo;
            mask = ripple | (((mask ^ ripple) >> 2) / lo);
            if (lo == 0) break;
        }
    }
}

} // namespace vdec
