#pragma once

#include "ncd/partition.hpp"
#include "ncd/rational.hpp"

#include <functional>
#include <vector>

namespace ncd {

// NC^d_n (or an interval of it) as an explicit graded poset. Elements are
// kept in canonical order; covers_up[i] lists the indices covering element i.
struct GradedPoset {
    int n = 0;
    int d = 1;
    std::vector<NoncrossingPartition> elements;
    std::vector<std::vector<int>> covers_up;
    std::vector<int> rank_of;
    int bottom = -1;
    int top = -1;

    int size() const { return static_cast<int>(elements.size()); }
    int height() const { return rank_of.empty() ? 0 : rank_of[top]; }

    // Index of a partition in `elements`, or -1.
    int index_of(const NoncrossingPartition& pi) const;
    bool leq(int i, int j) const { return elements[i].refines(elements[j]); }
};

inline constexpr long long kDefaultElementBudget = 1'000'000;

// Builds NC^d_n. Elements are generated through the plane-tree bijection
// (trees on n+1 vertices with all degrees = 1 mod d) and covers by merging
// d+1 blocks and testing membership. Throws if n != 1 mod d (the family is
// empty then) or if the predicted size exceeds the element budget.
GradedPoset build_poset(int n, int d, long long element_budget = kDefaultElementBudget);

// mu(0,1) by the recursive definition over down-sets.
Int mobius_recursive(const GradedPoset& p);

// mu(0,1) as Philip Hall's chain sum: sum of (-1)^k over all k-step chains
// from bottom to top, accumulated by grouping chains at their first step.
Int mobius_hall(const GradedPoset& p);

// Both evaluations; throws if they disagree.
Int mobius(const GradedPoset& p);

// The induced subposet on [lo, hi], regraded from 0. Throws if lo is not
// below hi.
GradedPoset interval(const GradedPoset& p, int lo, int hi);

// Multiset of intertwining numbers {i(B,C') > 0 : B in hi, C' dual of lo},
// sorted ascending; encodes [lo, hi] as a product of NC^d factors.
std::vector<int> interval_factorization(const NoncrossingPartition& lo,
                                        const NoncrossingPartition& hi);
std::vector<int> interval_factorization(const GradedPoset& p, int lo, int hi);

// Every saturated bottom-to-top chain as a list of element indices.
std::vector<std::vector<int>> maximal_chains(const GradedPoset& p);

std::vector<long long> rank_counts(const GradedPoset& p);

// Invokes fn on every strictly increasing chain bottom = x0 < ... < xk = top
// (k >= 0 only when bottom == top). Aborts past the chain budget.
void for_each_chain(const GradedPoset& p, long long chain_budget,
                    const std::function<void(const std::vector<int>&)>& fn);

} // namespace ncd
