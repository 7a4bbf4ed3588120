#pragma once

#include "ncd/partition.hpp"
#include "ncd/plane_tree.hpp"

#include <utility>
#include <vector>

namespace ncd {

// A labeled rooted plane tree on n = dk+1 vertices: the root is labeled
// infinity (stored as (0,0)), every other vertex i_j with i in [1,k],
// j in [1,d]. Child counts are multiples of d; the vertices i_1..i_d are
// consecutive siblings under one parent, each i labels one such block, and
// blocks under a common parent carry larger i further to the left. Nodes are
// stored in preorder, so the depth-first search order of vertex v is v+1.
struct DParkingTree {
    int d = 1;
    int k = 0;
    std::vector<std::vector<int>> children;
    std::vector<std::pair<int, int>> label; // label[0] = (0,0) marks the root

    int n() const { return d * k + 1; }
    bool operator==(const DParkingTree&) const = default;
};

// Structural validation (shape, label blocks); `sibling_order` additionally
// enforces the larger-i-to-the-left rule, which expansions and straightened
// trees do not obey.
void validate_parking_tree(const DParkingTree& t, bool sibling_order = true);

// Depth-first search ordering using [1, n]: node -> its 1-based DFS number.
std::vector<int> dfs_order(const DParkingTree& t);

// a_i = DFS number of the common parent of i_1..i_d.
std::vector<int> tree_to_parking(const DParkingTree& t);

// Same reading without the sibling-order requirement, for straightened trees
// and expansions.
std::vector<int> parking_values(const DParkingTree& t);

// The unique d-parking tree whose parking function is pf: sort pf, grow the
// straightened shape by attaching children to the vertex whose DFS number is
// the next distinct value, then place the actual indices, larger to the left
// within each parent.
DParkingTree parking_to_tree(const std::vector<int>& pf, int d);

// Relabels i_j -> (i-1)d + j, yielding a 1-parking structure on the same
// shape whose parking function repeats each a_i d times.
DParkingTree expansion(const DParkingTree& t);

// Relabels blocks in order of (parent DFS number, position), so the parking
// function becomes the sorted rearrangement.
DParkingTree straighten(const DParkingTree& t);

// The chain whose i-th partition has blocks equal to the connected
// components spanned by the parent edges of all j_s with j <= i.
std::vector<NoncrossingPartition> tree_to_chain(const DParkingTree& t);

// The unlabeled shape; two maximal chains lie in one orbit of the
// coordinate-permuting symmetric group action iff their trees share it.
PlaneTree shape_orbit_key(const DParkingTree& t);

// Components after deleting the parent edges of i_j for all i in `subset`
// (1-based values); always lands in NC^d_n.
NoncrossingPartition partition_from_subset(const DParkingTree& t, const std::vector<int>& subset);

// Every d-parking tree on dk+1 vertices, each exactly once.
std::vector<DParkingTree> enumerate_parking_trees(int d, int k);

} // namespace ncd
