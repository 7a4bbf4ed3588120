#pragma once

#include <compare>
#include <string>
#include <vector>

namespace ncd {

using Block = std::vector<int>;
using Blocks = std::vector<Block>;

// Counts the label changes around the cyclic sequence formed by merging two
// disjoint sorted sets. Two blocks cross on the circle exactly when the
// merged sequence alternates at least four times.
int cyclic_alternations(const Block& a, const Block& b);

bool is_noncrossing(int n, const Blocks& blocks);

// Transitions from B to C' reading B ∪ C' in the interleaved cyclic order
// 1 < 1' < 2 < 2' < ... < n < n' < 1. Zero iff either set is empty.
int intertwining_number(const Block& b, const Block& c_primed, int n);

// A set partition of [n] whose blocks pairwise avoid the crossing pattern
// i < j < k < l with i,k in one block and j,l in the other. Canonical form
// (elements ascending within a block, blocks sorted by minimum) is enforced
// at construction; equality is structural. Dual partitions live on the primed
// ground set but are represented on [1,n], priming being a view concern.
class NoncrossingPartition {
  public:
    NoncrossingPartition(int n, Blocks blocks);

    int n() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const Blocks& blocks() const { return blocks_; }
    const Block& block(int idx) const { return blocks_[idx]; }

    // Index of the block containing element v.
    int block_index_of(int v) const;

    // The coarsest partition of {1',...,n'} whose union with *this is
    // noncrossing on the interleaved cycle. Computed by a single linear
    // stack scan: entering a nonsingleton block at its minimum opens a
    // region, every middle element starts a fresh region at the same depth,
    // the maximum closes back to the enclosing region.
    NoncrossingPartition kreweras_dual() const;

    // The dual in the reversed primed order 1 < n' < 2 < (n-1)' < ... < n < 1'.
    // An order-reversing involution.
    NoncrossingPartition simion_ullman_dual() const;

    // True iff this partition refines other (every block contained in a
    // block of other); the partial order of NC_n.
    bool refines(const NoncrossingPartition& other) const;

    // Partition obtained by merging the blocks at the given indices.
    // Throws if the result is not noncrossing.
    NoncrossingPartition merge_blocks(const std::vector<int>& block_indices) const;

    bool operator==(const NoncrossingPartition& other) const {
        return n_ == other.n_ && blocks_ == other.blocks_;
    }
    std::strong_ordering operator<=>(const NoncrossingPartition& other) const;

    std::string to_string() const; // e.g. "1|2,9,10|3"

  private:
    int n_;
    Blocks blocks_;
};

// One adjacency between a block B of pi and a block C' of the Kreweras dual:
// B contains elements i, j (possibly equal) with i' and (j-1)' in C'
// (0' read as n'). gamma is the vertex i, the one in the most negative
// orientation from B's perspective; across all adjacencies the gamma values
// are exactly 1..n, each once, and the bipartite graph is a tree.
struct DualAdjacency {
    int block_index;
    int dual_block_index;
    int gamma;
};

std::vector<DualAdjacency> adjacencies(const NoncrossingPartition& pi);

// Every block of pi and of its Kreweras dual has cardinality 1 mod d.
bool is_d_indivisible(const NoncrossingPartition& pi, int d);

// Same predicate via the gap characterization: n = 1 mod d and for each pair
// of cyclically consecutive elements of a nonsingleton block the number of
// elements strictly between them is divisible by d.
bool is_d_indivisible_gaps(const NoncrossingPartition& pi, int d);

} // namespace ncd
