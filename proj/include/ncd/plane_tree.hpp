#pragma once

#include "ncd/partition.hpp"

#include <vector>

namespace ncd {

// Ordered rooted tree. Nodes are numbered in preorder with the root at 0,
// so structural equality of the children lists is equality of shapes.
struct PlaneTree {
    std::vector<std::vector<int>> children;

    int size() const { return static_cast<int>(children.size()); }
    bool operator==(const PlaneTree&) const = default;
    bool operator<(const PlaneTree& other) const { return children < other.children; }

    // Number of vertices in the subtree rooted at each node.
    std::vector<int> subtree_sizes() const;
};

// A plane tree with an edge label on every non-root vertex (the label of the
// edge to its parent). Vertex colors are never stored: the root is black and
// colors alternate with depth.
struct LabeledPlaneTree {
    PlaneTree shape;
    std::vector<int> parent_label; // parent_label[0] unused

    int n() const { return shape.size() - 1; }
    bool operator==(const LabeledPlaneTree&) const = default;
};

// Builds the labeled plane tree of a noncrossing partition: black vertices
// are blocks of pi, white vertices blocks of the Kreweras dual, edges are
// adjacencies labeled gamma, the root is the block containing 1 and children
// are ordered by increasing edge label.
LabeledPlaneTree partition_to_tree(const NoncrossingPartition& pi);

// Returns 0 when the tree satisfies all six label properties of a partition
// tree, otherwise the number (1..6) of the first violated condition:
// (1) labels are a permutation of [1,n];
// (2) child-edge labels increase left to right;
// (3) nonroot black (white) vertices carry their max (min) incident label on
//     the parent edge;
// (4) subtree label sets are integer intervals;
// (5) a black (white) vertex has the least (greatest) subtree label on the
//     edge to its leftmost (rightmost) child;
// (6) sibling subtrees are separated by their parent-edge labels, in order.
int first_violated_label_property(const LabeledPlaneTree& tree);

// Inverse of partition_to_tree. Trees violating the label properties are
// rejected with the first violated condition number in the message.
NoncrossingPartition tree_to_partition(const LabeledPlaneTree& tree);

// The unique labeling of a plane tree shape satisfying the six properties,
// obtained by splitting the label interval across sibling subtrees: below a
// black vertex each child edge takes the label just before its subtree's
// range, below a white vertex the label just after.
LabeledPlaneTree reconstruct_labels(const PlaneTree& shape);

enum class ShapeConstraint {
    All,          // every plane tree
    Degree1ModD,  // graph degree of every vertex = 1 mod d
    DDivisible,   // child count of every vertex divisible by d
    DAry,         // every vertex has exactly d or 0 children
};

// All plane trees on v vertices meeting the constraint, in a deterministic
// order, each exactly once.
std::vector<PlaneTree> enumerate_shapes(int v, ShapeConstraint constraint, int d = 1);

} // namespace ncd
