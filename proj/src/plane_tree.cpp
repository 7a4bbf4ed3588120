#include "ncd/plane_tree.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace ncd {

std::vector<int> PlaneTree::subtree_sizes() const {
    std::vector<int> sz(children.size(), 1);
    // Nodes are in preorder, so children have larger indices than parents.
    for (int v = size() - 1; v >= 0; --v)
        for (int c : children[v]) sz[v] += sz[c];
    return sz;
}

namespace {

std::vector<int> depths(const PlaneTree& t) {
    std::vector<int> depth(t.children.size(), 0);
    for (std::size_t v = 0; v < t.children.size(); ++v)
        for (int c : t.children[v]) depth[c] = depth[v] + 1;
    return depth;
}

} // namespace

LabeledPlaneTree partition_to_tree(const NoncrossingPartition& pi) {
    const int nb = pi.block_count();
    NoncrossingPartition dual = pi.kreweras_dual();
    // Vertices: blocks of pi first (black), then dual blocks (white).
    const int nv = nb + dual.block_count();
    std::vector<std::vector<std::pair<int, int>>> adj(nv); // (label, neighbor)
    for (const DualAdjacency& a : adjacencies(pi)) {
        int b = a.block_index;
        int w = nb + a.dual_block_index;
        adj[b].emplace_back(a.gamma, w);
        adj[w].emplace_back(a.gamma, b);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());

    const int root = pi.block_index_of(1);
    std::vector<std::vector<int>> kids(nv);
    std::vector<int> label_to(nv, 0);
    std::vector<char> visited(nv, 0);
    std::vector<int> order{root};
    visited[root] = 1;
    for (std::size_t q = 0; q < order.size(); ++q) {
        int v = order[q];
        for (auto [lab, u] : adj[v]) {
            if (visited[u]) continue;
            visited[u] = 1;
            kids[v].push_back(u);
            label_to[u] = lab;
            order.push_back(u);
        }
    }

    LabeledPlaneTree out;
    // Renumber to preorder, carrying labels along.
    std::vector<int> newid(nv, -1);
    out.shape.children.resize(static_cast<std::size_t>(nv));
    out.parent_label.assign(static_cast<std::size_t>(nv), 0);
    int next = 0;
    std::vector<int> stack{root};
    std::vector<std::size_t> pos{0};
    newid[root] = next++;
    while (!stack.empty()) {
        int v = stack.back();
        if (pos.back() == kids[v].size()) {
            stack.pop_back();
            pos.pop_back();
            continue;
        }
        int c = kids[v][pos.back()++];
        newid[c] = next++;
        out.shape.children[newid[v]].push_back(newid[c]);
        out.parent_label[newid[c]] = label_to[c];
        stack.push_back(c);
        pos.push_back(0);
    }
    return out;
}

int first_violated_label_property(const LabeledPlaneTree& tree) {
    const int nv = tree.shape.size();
    const int n = nv - 1;
    const auto& kids = tree.shape.children;
    std::vector<int> depth = depths(tree.shape);

    // (1) permutation of [1,n]
    {
        std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
        for (int v = 1; v < nv; ++v) {
            int lab = tree.parent_label[v];
            if (lab < 1 || lab > n || seen[lab]) return 1;
            seen[lab] = 1;
        }
    }
    // (2) child labels increase left to right
    for (int v = 0; v < nv; ++v)
        for (std::size_t i = 1; i < kids[v].size(); ++i)
            if (tree.parent_label[kids[v][i - 1]] >= tree.parent_label[kids[v][i]]) return 2;
    // (3) extremal incident label on the parent edge
    for (int v = 1; v < nv; ++v) {
        bool black = depth[v] % 2 == 0;
        for (int c : kids[v]) {
            if (black && tree.parent_label[c] > tree.parent_label[v]) return 3;
            if (!black && tree.parent_label[c] < tree.parent_label[v]) return 3;
        }
    }
    // Subtree label ranges (labels strictly below each vertex).
    std::vector<int> lo(nv, std::numeric_limits<int>::max());
    std::vector<int> hi(nv, std::numeric_limits<int>::min());
    std::vector<int> cnt(nv, 0);
    for (int v = nv - 1; v >= 0; --v) {
        for (int c : kids[v]) {
            lo[v] = std::min({lo[v], lo[c], tree.parent_label[c]});
            hi[v] = std::max({hi[v], hi[c], tree.parent_label[c]});
            cnt[v] += cnt[c] + 1;
        }
    }
    // (4) each nonempty subtree label set is an interval
    for (int v = 0; v < nv; ++v)
        if (cnt[v] > 0 && hi[v] - lo[v] + 1 != cnt[v]) return 4;
    // (5) least (greatest) subtree label on edge to leftmost (rightmost) child
    for (int v = 0; v < nv; ++v) {
        if (kids[v].empty()) continue;
        bool black = depth[v] % 2 == 0;
        if (black && tree.parent_label[kids[v].front()] != lo[v]) return 5;
        if (!black && tree.parent_label[kids[v].back()] != hi[v]) return 5;
    }
    // (6) sibling subtrees separated by their parent-edge labels, in order
    for (int v = 0; v < nv; ++v) {
        for (std::size_t i = 0; i < kids[v].size(); ++i) {
            for (std::size_t j = i + 1; j < kids[v].size(); ++j) {
                int left = kids[v][i], right = kids[v][j];
                if (cnt[right] > 0 && tree.parent_label[left] >= lo[right]) return 6;
                if (cnt[left] > 0 && tree.parent_label[right] <= hi[left]) return 6;
            }
        }
    }
    return 0;
}

NoncrossingPartition tree_to_partition(const LabeledPlaneTree& tree) {
    if (int violated = first_violated_label_property(tree); violated != 0)
        throw std::invalid_argument("tree_to_partition: label property " +
                                    std::to_string(violated) + " violated");
    const int nv = tree.shape.size();
    std::vector<int> depth = depths(tree.shape);
    Blocks blocks;
    for (int v = 0; v < nv; ++v) {
        if (depth[v] % 2 != 0) continue; // white vertices carry the dual blocks
        Block blk;
        if (v != 0) blk.push_back(tree.parent_label[v]);
        for (int c : tree.shape.children[v]) blk.push_back(tree.parent_label[c]);
        blocks.push_back(std::move(blk));
    }
    return NoncrossingPartition(nv - 1, std::move(blocks));
}

LabeledPlaneTree reconstruct_labels(const PlaneTree& shape) {
    if (shape.size() < 2)
        throw std::invalid_argument("reconstruct_labels: need at least 2 vertices");
    std::vector<int> sz = shape.subtree_sizes();
    LabeledPlaneTree out;
    out.shape = shape;
    out.parent_label.assign(shape.children.size(), 0);

    // assign(v, lo, black): hand the subtree below v the labels lo..lo+sz[v]-2.
    auto assign = [&](auto&& self, int v, int lo, bool black) -> void {
        int cursor = lo;
        for (int c : shape.children[v]) {
            if (black) {
                out.parent_label[c] = cursor;
                self(self, c, cursor + 1, false);
            } else {
                self(self, c, cursor, true);
                out.parent_label[c] = cursor + sz[c] - 1;
            }
            cursor += sz[c];
        }
    };
    assign(assign, 0, 1, true);
    return out;
}

namespace {

bool child_count_ok(int c, ShapeConstraint constraint, int d, bool is_root) {
    switch (constraint) {
        case ShapeConstraint::All: return true;
        case ShapeConstraint::Degree1ModD:
            // Graph degree = child count for the root, child count + 1 below.
            return is_root ? (c % d == 1 % d) : (c % d == 0);
        case ShapeConstraint::DDivisible: return c % d == 0;
        case ShapeConstraint::DAry: return c == 0 || c == d;
    }
    return false;
}

struct ShapeEnumerator {
    ShapeConstraint constraint;
    int d;
    std::map<int, std::vector<PlaneTree>> memo; // non-root subtrees by vertex count

    const std::vector<PlaneTree>& subtrees(int v) {
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        std::vector<PlaneTree> result = build(v, false);
        return memo.emplace(v, std::move(result)).first->second;
    }

    std::vector<PlaneTree> build(int v, bool is_root) {
        std::vector<PlaneTree> out;
        if (v == 1) {
            if (child_count_ok(0, constraint, d, is_root)) out.push_back(PlaneTree{{{}}});
            return out;
        }
        for (int c = 1; c <= v - 1; ++c) {
            if (!child_count_ok(c, constraint, d, is_root)) continue;
            forests(v - 1, c, PlaneTree{{{}}}, out);
        }
        return out;
    }

    // Appends to `out` every tree formed by attaching exactly `slots` subtrees
    // totaling `budget` vertices to the partially built tree `acc`.
    void forests(int budget, int slots, PlaneTree acc, std::vector<PlaneTree>& out) {
        if (slots == 0) {
            if (budget == 0) out.push_back(std::move(acc));
            return;
        }
        for (int first = 1; first <= budget - (slots - 1); ++first) {
            for (const PlaneTree& sub : subtrees(first)) {
                PlaneTree next = acc;
                int offset = next.size();
                next.children[0].push_back(offset);
                for (const auto& ch : sub.children) {
                    std::vector<int> shifted;
                    shifted.reserve(ch.size());
                    for (int x : ch) shifted.push_back(x + offset);
                    next.children.push_back(std::move(shifted));
                }
                forests(budget - first, slots - 1, std::move(next), out);
            }
        }
    }
};

} // namespace

std::vector<PlaneTree> enumerate_shapes(int v, ShapeConstraint constraint, int d) {
    if (v < 1) throw std::invalid_argument("enumerate_shapes: v must be >= 1");
    if (d < 1) throw std::invalid_argument("enumerate_shapes: d must be >= 1");
    ShapeEnumerator e{constraint, d, {}};
    std::vector<PlaneTree> out = e.build(v, true);
    // Attaching subtrees left to right yields preorder numbering, but fix the
    // order deterministically anyway.
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace ncd
