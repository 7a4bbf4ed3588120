#include "ncd/parking_tree.hpp"

#include "ncd/parking.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ncd {

namespace {

std::vector<int> parent_of(const std::vector<std::vector<int>>& children) {
    std::vector<int> par(children.size(), -1);
    for (std::size_t v = 0; v < children.size(); ++v)
        for (int c : children[v]) par[c] = static_cast<int>(v);
    return par;
}

// Checks preorder numbering: every child list is a run of consecutive
// indices fanned out in DFS order.
void check_preorder(const std::vector<std::vector<int>>& children) {
    int next = 1;
    auto walk = [&](auto&& self, int v) -> void {
        for (int c : children[v]) {
            if (c != next++) throw std::invalid_argument("parking tree: nodes not in preorder");
            self(self, c);
        }
    };
    walk(walk, 0);
    if (next != static_cast<int>(children.size()))
        throw std::invalid_argument("parking tree: disconnected node list");
}

} // namespace

void validate_parking_tree(const DParkingTree& t, bool sibling_order) {
    const int n = t.n();
    if (t.d < 1 || t.k < 0) throw std::invalid_argument("parking tree: need d >= 1, k >= 0");
    if (static_cast<int>(t.children.size()) != n || static_cast<int>(t.label.size()) != n)
        throw std::invalid_argument("parking tree: wrong vertex count");
    check_preorder(t.children);
    if (t.label[0] != std::make_pair(0, 0))
        throw std::invalid_argument("parking tree: root label must be infinity");

    for (int v = 0; v < n; ++v)
        if (t.children[v].size() % static_cast<std::size_t>(t.d) != 0)
            throw std::invalid_argument("parking tree: child counts must be multiples of d");

    std::vector<char> used(static_cast<std::size_t>(t.k) + 1, 0);
    for (int v = 0; v < n; ++v) {
        const auto& kids = t.children[v];
        for (std::size_t q = 0; q < kids.size(); q += t.d) {
            int i = t.label[kids[q]].first;
            if (i < 1 || i > t.k || used[i])
                throw std::invalid_argument("parking tree: each i labels exactly one sibling block");
            used[i] = 1;
            for (int u = 0; u < t.d; ++u)
                if (t.label[kids[q + u]] != std::make_pair(i, u + 1))
                    throw std::invalid_argument(
                        "parking tree: i_1..i_d must be consecutive siblings in subscript order");
        }
        if (sibling_order) {
            for (std::size_t q = t.d; q < kids.size(); q += t.d)
                if (t.label[kids[q - t.d]].first < t.label[kids[q]].first)
                    throw std::invalid_argument(
                        "parking tree: sibling blocks must carry larger i to the left");
        }
    }
}

std::vector<int> dfs_order(const DParkingTree& t) {
    std::vector<int> omega(t.children.size());
    int next = 1;
    auto walk = [&](auto&& self, int v) -> void {
        omega[v] = next++;
        for (int c : t.children[v]) self(self, c);
    };
    walk(walk, 0);
    return omega;
}

std::vector<int> tree_to_parking(const DParkingTree& t) {
    validate_parking_tree(t);
    return parking_values(t);
}

std::vector<int> parking_values(const DParkingTree& t) {
    validate_parking_tree(t, /*sibling_order=*/false);
    std::vector<int> omega = dfs_order(t);
    std::vector<int> par = parent_of(t.children);
    std::vector<int> pf(static_cast<std::size_t>(t.k));
    for (std::size_t v = 1; v < t.children.size(); ++v) {
        auto [i, j] = t.label[v];
        if (j == 1) pf[i - 1] = omega[par[v]];
    }
    if (!is_d_parking(pf, t.d))
        throw std::logic_error("parking_values: result fails the d-parking bound");
    return pf;
}

DParkingTree parking_to_tree(const std::vector<int>& pf, int d) {
    if (!is_d_parking(pf, d))
        throw std::invalid_argument("parking_to_tree: not a d-parking function");
    const int k = static_cast<int>(pf.size());

    // Distinct sorted values with multiplicities.
    std::map<int, int> count;
    for (int v : pf) ++count[v];

    // Grow the straightened shape. Nodes are created in insertion order and
    // renumbered to preorder at the end.
    std::vector<std::vector<int>> kids(1);
    auto preorder_ids = [&]() {
        std::vector<int> ids(kids.size());
        int next = 1;
        auto walk = [&](auto&& self, int v) -> void {
            ids[v] = next++;
            for (int c : kids[v]) self(self, c);
        };
        walk(walk, 0);
        return ids;
    };

    int inserted = 0;
    for (auto [value, mult] : count) {
        // The target vertex must exist and still be a leaf; both are
        // guaranteed by the parking inequality.
        if (value > d * inserted + 1)
            throw std::logic_error("parking_to_tree: insertion bound violated");
        std::vector<int> ids = preorder_ids();
        int host = -1;
        for (std::size_t v = 0; v < kids.size(); ++v)
            if (ids[v] == value) host = static_cast<int>(v);
        if (host < 0 || !kids[host].empty())
            throw std::logic_error("parking_to_tree: insertion target missing or not a leaf");
        for (int c = 0; c < d * mult; ++c) {
            kids[host].push_back(static_cast<int>(kids.size()));
            kids.emplace_back();
        }
        inserted += mult;
    }

    // Assign the actual indices: the blocks under the vertex with DFS number
    // `value` take {l : pf[l-1] = value} in decreasing order, left to right.
    std::vector<std::pair<int, int>> label(kids.size(), {0, 0});
    std::vector<int> ids = preorder_ids();
    for (auto [value, mult] : count) {
        int host = -1;
        for (std::size_t v = 0; v < kids.size(); ++v)
            if (ids[v] == value) host = static_cast<int>(v);
        std::vector<int> indices;
        for (int l = 1; l <= k; ++l)
            if (pf[l - 1] == value) indices.push_back(l);
        std::sort(indices.rbegin(), indices.rend());
        for (int q = 0; q < mult; ++q)
            for (int u = 0; u < d; ++u) label[kids[host][q * d + u]] = {indices[q], u + 1};
    }

    // Renumber to preorder.
    DParkingTree t;
    t.d = d;
    t.k = k;
    t.children.resize(kids.size());
    t.label.resize(kids.size());
    t.label[0] = {0, 0};
    std::vector<int> newid(kids.size(), -1);
    int next = 0;
    auto walk = [&](auto&& self, int v) -> void {
        if (newid[v] < 0) newid[v] = next++;
        for (int c : kids[v]) {
            newid[c] = next++;
            t.children[newid[v]].push_back(newid[c]);
            t.label[newid[c]] = label[c];
            self(self, c);
        }
    };
    walk(walk, 0);
    validate_parking_tree(t);
    return t;
}

DParkingTree expansion(const DParkingTree& t) {
    validate_parking_tree(t);
    DParkingTree out;
    out.d = 1;
    out.k = t.d * t.k;
    out.children = t.children;
    out.label.assign(t.label.size(), {0, 0});
    for (std::size_t v = 1; v < t.label.size(); ++v) {
        auto [i, j] = t.label[v];
        out.label[v] = {(i - 1) * t.d + j, 1};
    }
    validate_parking_tree(out, /*sibling_order=*/false);
    return out;
}

DParkingTree straighten(const DParkingTree& t) {
    validate_parking_tree(t);
    std::vector<int> omega = dfs_order(t);
    // Blocks keyed by (parent DFS number, position), relabeled 1, 2, ...
    std::vector<std::pair<std::pair<int, int>, int>> blocks; // ((omega, pos), old i)
    for (std::size_t v = 0; v < t.children.size(); ++v)
        for (std::size_t q = 0; q < t.children[v].size(); q += t.d)
            blocks.push_back({{omega[v], static_cast<int>(q)}, t.label[t.children[v][q]].first});
    std::sort(blocks.begin(), blocks.end());
    std::vector<int> new_of_old(static_cast<std::size_t>(t.k) + 1, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) new_of_old[blocks[b].second] = static_cast<int>(b) + 1;

    DParkingTree out = t;
    for (std::size_t v = 1; v < t.label.size(); ++v)
        out.label[v] = {new_of_old[t.label[v].first], t.label[v].second};
    validate_parking_tree(out, /*sibling_order=*/false);
    return out;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

NoncrossingPartition components(const DParkingTree& t, const std::vector<char>& keep_block) {
    std::vector<int> omega = dfs_order(t);
    std::vector<int> par = parent_of(t.children);
    UnionFind uf(t.n());
    for (int v = 1; v < t.n(); ++v)
        if (keep_block[t.label[v].first]) uf.unite(omega[v] - 1, omega[par[v]] - 1);
    std::map<int, Block> comp;
    for (int x = 0; x < t.n(); ++x) comp[uf.find(x)].push_back(x + 1);
    Blocks blocks;
    for (auto& [root, blk] : comp) blocks.push_back(std::move(blk));
    return NoncrossingPartition(t.n(), std::move(blocks));
}

} // namespace

std::vector<NoncrossingPartition> tree_to_chain(const DParkingTree& t) {
    validate_parking_tree(t);
    std::vector<NoncrossingPartition> chain;
    std::vector<char> keep(static_cast<std::size_t>(t.k) + 1, 0);
    chain.push_back(components(t, keep));
    for (int i = 1; i <= t.k; ++i) {
        keep[i] = 1;
        chain.push_back(components(t, keep));
    }
    return chain;
}

PlaneTree shape_orbit_key(const DParkingTree& t) { return PlaneTree{t.children}; }

NoncrossingPartition partition_from_subset(const DParkingTree& t, const std::vector<int>& subset) {
    validate_parking_tree(t);
    std::vector<char> keep(static_cast<std::size_t>(t.k) + 1, 1);
    keep[0] = 0;
    for (int i : subset) keep.at(i) = 0;
    return components(t, keep);
}

std::vector<DParkingTree> enumerate_parking_trees(int d, int k) {
    if (d < 1 || k < 0) throw std::invalid_argument("enumerate_parking_trees: need d >= 1, k >= 0");
    const int n = d * k + 1;
    std::vector<DParkingTree> out;
    for (const PlaneTree& shape : enumerate_shapes(n, ShapeConstraint::DDivisible, d)) {
        // Block slots in preorder of their parent.
        std::vector<int> slot_node;
        for (int v = 0; v < shape.size(); ++v)
            for (std::size_t q = 0; q < shape.children[v].size(); q += d)
                slot_node.push_back(v);
        const int slots = static_cast<int>(slot_node.size());

        std::vector<int> slot_value(slots, 0);
        std::vector<char> taken(static_cast<std::size_t>(k) + 1, 0);
        auto emit = [&]() {
            DParkingTree t;
            t.d = d;
            t.k = k;
            t.children = shape.children;
            t.label.assign(shape.children.size(), {0, 0});
            std::size_t slot = 0;
            for (std::size_t v = 0; v < shape.children.size(); ++v)
                for (std::size_t q = 0; q < shape.children[v].size(); q += d, ++slot)
                    for (int u = 0; u < d; ++u)
                        t.label[shape.children[v][q + u]] = {slot_value[slot], u + 1};
            validate_parking_tree(t);
            out.push_back(std::move(t));
        };
        auto rec = [&](auto&& self, int slot) -> void {
            if (slot == slots) {
                emit();
                return;
            }
            // Slots of a common parent run left to right, so force the
            // decreasing arrangement while choosing.
            int ceiling = (slot > 0 && slot_node[slot] == slot_node[slot - 1])
                              ? slot_value[slot - 1] - 1
                              : k;
            for (int i = 1; i <= ceiling; ++i) {
                if (taken[i]) continue;
                taken[i] = 1;
                slot_value[slot] = i;
                self(self, slot + 1);
                taken[i] = 0;
            }
        };
        rec(rec, 0);
    }
    return out;
}

} // namespace ncd
