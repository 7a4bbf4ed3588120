#pragma once

#include "ncd/rational.hpp"

namespace ncd {

enum class CountKind {
    Cardinality,          // |NC^d_{dk+1}| = 2/(dk+2) * C(dk+k+1, k)
    RankCount,            // rank-j elements, k = i+j
    Mobius,               // (-1)^k / (2dk-k+1) * C(2dk, k)
    Singleton,            // elements containing the singleton {1}
    SingletonRank,        // rank-j elements containing {1}, k = i+j
    SmallBlocks,          // all block and dual block sizes in {1, d+1}
    SmallBlocksSingleton, // additionally containing {1}
    SmallBlocksRank,      // small-block elements of rank j, k = i+j
    FallingChains,        // C(2dk, k) / (2dk-k+1)
};

// Exact integer value of the cited counting formula; every division is
// checked for integrality. The rank-style kinds take (i, j) with i the
// corank and j the rank.
Int closed_form(CountKind kind, int d, int k);
Int closed_form(CountKind kind, int d, int i, int j);

} // namespace ncd
