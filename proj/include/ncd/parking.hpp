#pragma once

#include "ncd/partition.hpp"
#include "ncd/poset.hpp"

#include <vector>

namespace ncd {

// A sequence of positive integers whose sorted rearrangement satisfies
// a_(i) <= d(i-1) + 1.
struct DParkingFunction {
    int d = 1;
    std::vector<int> values;
};

bool is_d_parking(const std::vector<int>& values, int d);

// All d-parking functions of length k: sorted profiles first, then their
// distinct permutations.
std::vector<std::vector<int>> enumerate_parking(int d, int k);

// The label of a cover lo < hi in NC^d_n: with the merged blocks
// B_1,...,B_{d+1} ordered by minima, max{i in B_1 : i < min(B_2)}.
// Non-cover pairs are rejected.
int edge_label(const NoncrossingPartition& lo, const NoncrossingPartition& hi, int d);

// Label sequence of a maximal chain; always a d-parking function.
std::vector<int> chain_to_parking(const std::vector<NoncrossingPartition>& chain, int d);

// The unique maximal chain in NC^d_{dk+1} with the given label sequence,
// built by removing the last occurrence of the largest label, recursing,
// and re-expanding through the relabeling map that opens d fresh elements.
std::vector<NoncrossingPartition> parking_to_chain(const std::vector<int>& pf, int d);

struct ElViolation {
    int lo = -1;
    int hi = -1;
    int rising_chains = 0;
    bool rising_is_lex_least = true;
};

struct ElReport {
    bool ok = true;
    std::vector<ElViolation> violations;
    // lambda labels of the unique rising bottom-to-top chain of the poset.
    std::vector<int> rising_chain_labels;
};

// Checks that lambda*(lo, hi) = |lo| - lambda(lo, hi) is an EL-labeling:
// every interval has exactly one weakly rising maximal chain and that chain
// is lexicographically least.
ElReport el_check(const GradedPoset& p);

// Number of d-parking functions with a_i <= a_{i+1} + d - 1 for all i;
// these label the falling chains.
long long falling_count(int d, int k);

} // namespace ncd
