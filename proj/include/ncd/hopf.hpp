#pragma once

#include "ncd/partition.hpp"
#include "ncd/poset.hpp"

#include <map>
#include <string>
#include <vector>

namespace ncd {

// Integer combination of multisets of factor sizes, each multiset encoding a
// product of NC^d posets. Size-1 factors are the unit and are dropped when a
// term is added.
class HopfElement {
  public:
    void add(std::vector<int> sizes, long long coeff);
    HopfElement& operator+=(const HopfElement& other);

    const std::map<std::vector<int>, long long>& terms() const { return terms_; }
    bool operator==(const HopfElement&) const = default;
    std::string to_string() const;

  private:
    std::map<std::vector<int>, long long> terms_;
};

// Connected hypergraph on [n] with sum(|E|-1) = n-1 whose edges, drawn as
// convex polygons on the circle, pairwise share at most one vertex and have
// disjoint interiors.
struct Hypertree {
    int n = 0;
    std::vector<std::vector<int>> edges; // each sorted; list sorted
    bool operator==(const Hypertree&) const = default;
};

// True iff the polygons of the two distinct edges have disjoint interiors:
// disjoint edges must occupy complementary cyclic arcs, edges sharing one
// vertex must span disjoint angular intervals seen from it. More than one
// shared vertex is crossing.
bool edges_noncrossing(const std::vector<int>& e, const std::vector<int>& f, int n);

// Full invariant check: edge sizes >= 2 and 1 mod d, connectivity,
// sum(|E|-1) = n-1, pairwise noncrossing.
bool is_valid_hypertree(const Hypertree& t, int d);

// For pi < sigma: for each dual block C' of pi and each maximal set of >= 2
// blocks of pi adjacent to C' and merged inside one block of sigma, the edge
// of their gamma values. Edge sizes are 1 mod d whenever both inputs are
// d-indivisible.
std::vector<std::vector<int>> phi(const NoncrossingPartition& pi, const NoncrossingPartition& sigma);

// Union of phi over consecutive pairs of the chain.
std::vector<std::vector<int>> phi_chain(const std::vector<NoncrossingPartition>& chain);

// All noncrossing hypertrees on [n] whose edge sizes are 1 mod d, built
// recursively over the interval structure of maximal edge spans.
std::vector<Hypertree> enumerate_hypertrees(int n, int d);

// Schmitt's alternating sum over chains of interval-factorization products.
HopfElement antipode_schmitt(const GradedPoset& p, long long chain_budget = 10'000'000);

// The cancellation-free form: sum over noncrossing hypertrees of
// (-1)^{#edges} times the multiset of edge sizes.
HopfElement antipode_hypertrees(int n, int d);

// Signed hypertree count; equals (-1)^k C(2dk,k)/(2dk-k+1) for n = dk+1.
long long mobius_via_hypertrees(int n, int d);

} // namespace ncd
