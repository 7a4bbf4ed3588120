#include "ncd/poset.hpp"

#include "ncd/formulas.hpp"
#include "ncd/plane_tree.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncd {

int GradedPoset::index_of(const NoncrossingPartition& pi) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), pi,
                               [](const NoncrossingPartition& a, const NoncrossingPartition& b) {
                                   return (a <=> b) < 0;
                               });
    if (it == elements.end() || !(*it == pi)) return -1;
    return static_cast<int>(it - elements.begin());
}

GradedPoset build_poset(int n, int d, long long element_budget) {
    if (n < 1 || d < 1) throw std::invalid_argument("build_poset: need n >= 1, d >= 1");
    if (n % d != 1 % d)
        throw std::invalid_argument("build_poset: empty poset family, NC^d_n requires n = 1 mod d");
    const int k = (n - 1) / d;
    Int predicted = closed_form(CountKind::Cardinality, d, k);
    if (predicted > element_budget)
        throw std::runtime_error("build_poset: predicted " + predicted.str() +
                                 " elements exceeds budget " + std::to_string(element_budget) +
                                 "; raise the budget to override");

    GradedPoset p;
    p.n = n;
    p.d = d;
    for (const PlaneTree& shape : enumerate_shapes(n + 1, ShapeConstraint::Degree1ModD, d))
        p.elements.push_back(tree_to_partition(reconstruct_labels(shape)));
    std::sort(p.elements.begin(), p.elements.end(),
              [](const NoncrossingPartition& a, const NoncrossingPartition& b) {
                  return (a <=> b) < 0;
              });

    p.rank_of.resize(p.elements.size());
    for (int i = 0; i < p.size(); ++i) {
        int r = n - p.elements[i].block_count();
        if (r % d != 0) throw std::logic_error("build_poset: rank not divisible by d");
        p.rank_of[i] = r / d;
        if (p.rank_of[i] == 0) p.bottom = i;
        if (p.elements[i].block_count() == 1) p.top = i;
    }
    if (p.bottom < 0 || p.top < 0) throw std::logic_error("build_poset: missing extremes");

    // Covers merge exactly d+1 blocks; accept a merge iff the result is in
    // the element set.
    p.covers_up.resize(p.elements.size());
    std::vector<int> subset(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i < p.size(); ++i) {
        const NoncrossingPartition& pi = p.elements[i];
        const int nb = pi.block_count();
        if (nb < d + 1) continue;
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == d + 1) {
                Blocks merged_blocks;
                Block merged;
                std::size_t next = 0;
                for (int b = 0; b < nb; ++b) {
                    if (next < subset.size() && subset[next] == b) {
                        ++next;
                        merged.insert(merged.end(), pi.block(b).begin(), pi.block(b).end());
                    } else {
                        merged_blocks.push_back(pi.block(b));
                    }
                }
                std::sort(merged.begin(), merged.end());
                merged_blocks.push_back(merged);
                if (!is_noncrossing(pi.n(), merged_blocks)) return;
                int j = p.index_of(NoncrossingPartition(pi.n(), merged_blocks));
                if (j >= 0) p.covers_up[i].push_back(j);
                return;
            }
            for (int b = start; b < nb; ++b) {
                subset[pos] = b;
                self(self, pos + 1, b + 1);
            }
        };
        rec(rec, 0, 0);
        std::sort(p.covers_up[i].begin(), p.covers_up[i].end());
    }
    return p;
}

Int mobius_recursive(const GradedPoset& p) {
    // mu(bottom, x) for every x, filled in rank order.
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return p.rank_of[a] < p.rank_of[b]; });
    std::vector<Int> mu(p.size(), 0);
    for (int idx : order) {
        if (idx == p.bottom) {
            mu[idx] = 1;
            continue;
        }
        if (!p.leq(p.bottom, idx)) continue;
        Int acc = 0;
        for (int z = 0; z < p.size(); ++z)
            if (z != idx && p.leq(p.bottom, z) && p.leq(z, idx)) acc += mu[z];
        mu[idx] = -acc;
    }
    return mu[p.top];
}

Int mobius_hall(const GradedPoset& p) {
    // S(x) = signed count of chains from x to top; chains grouped by their
    // first step give S(x) = -sum_{y > x} S(y).
    std::vector<int> order(p.size());
    for (int i = 0; i < p.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return p.rank_of[a] > p.rank_of[b]; });
    std::vector<Int> s(p.size(), 0);
    for (int idx : order) {
        if (idx == p.top) {
            s[idx] = 1;
            continue;
        }
        Int acc = 0;
        for (int y = 0; y < p.size(); ++y)
            if (y != idx && p.leq(idx, y)) acc += s[y];
        s[idx] = -acc;
    }
    return s[p.bottom];
}

Int mobius(const GradedPoset& p) {
    Int rec = mobius_recursive(p);
    Int hall = mobius_hall(p);
    if (rec != hall)
        throw std::logic_error("mobius: recursive value " + rec.str() +
                               " disagrees with Hall chain sum " + hall.str());
    return rec;
}

GradedPoset interval(const GradedPoset& p, int lo, int hi) {
    if (!p.leq(lo, hi)) throw std::invalid_argument("interval: lo is not below hi");
    GradedPoset q;
    q.n = p.n;
    q.d = p.d;
    std::vector<int> old_index;
    for (int i = 0; i < p.size(); ++i)
        if (p.leq(lo, i) && p.leq(i, hi)) {
            old_index.push_back(i);
            q.elements.push_back(p.elements[i]);
        }
    const int base_rank = p.rank_of[lo];
    q.rank_of.resize(q.elements.size());
    q.covers_up.resize(q.elements.size());
    for (std::size_t i = 0; i < old_index.size(); ++i) {
        q.rank_of[i] = p.rank_of[old_index[i]] - base_rank;
        if (p.elements[old_index[i]] == p.elements[lo]) q.bottom = static_cast<int>(i);
        if (p.elements[old_index[i]] == p.elements[hi]) q.top = static_cast<int>(i);
    }
    // Covers in an interval of a graded poset are covers of the ambient poset.
    for (std::size_t i = 0; i < old_index.size(); ++i)
        for (std::size_t j = 0; j < old_index.size(); ++j)
            if (q.rank_of[j] == q.rank_of[i] + 1 && q.leq(static_cast<int>(i), static_cast<int>(j)))
                q.covers_up[i].push_back(static_cast<int>(j));
    return q;
}

std::vector<int> interval_factorization(const NoncrossingPartition& lo,
                                        const NoncrossingPartition& hi) {
    if (!lo.refines(hi)) throw std::invalid_argument("interval_factorization: lo not below hi");
    NoncrossingPartition dual = lo.kreweras_dual();
    std::vector<int> sizes;
    for (const Block& b : hi.blocks()) {
        for (const Block& c : dual.blocks()) {
            int m = intertwining_number(b, c, lo.n());
            if (m > 0) sizes.push_back(m);
        }
    }
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

std::vector<int> interval_factorization(const GradedPoset& p, int lo, int hi) {
    return interval_factorization(p.elements[lo], p.elements[hi]);
}

std::vector<std::vector<int>> maximal_chains(const GradedPoset& p) {
    std::vector<std::vector<int>> out;
    std::vector<int> chain{p.bottom};
    auto dfs = [&](auto&& self) -> void {
        int cur = chain.back();
        if (cur == p.top) {
            out.push_back(chain);
            return;
        }
        for (int up : p.covers_up[cur]) {
            chain.push_back(up);
            self(self);
            chain.pop_back();
        }
    };
    dfs(dfs);
    return out;
}

std::vector<long long> rank_counts(const GradedPoset& p) {
    std::vector<long long> counts(static_cast<std::size_t>(p.height()) + 1, 0);
    for (int r : p.rank_of) ++counts[r];
    return counts;
}

void for_each_chain(const GradedPoset& p, long long chain_budget,
                    const std::function<void(const std::vector<int>&)>& fn) {
    // Comparability lists, restricted upward.
    std::vector<std::vector<int>> above(p.size());
    for (int i = 0; i < p.size(); ++i)
        for (int j = 0; j < p.size(); ++j)
            if (i != j && p.leq(i, j)) above[i].push_back(j);

    long long count = 0;
    std::vector<int> chain{p.bottom};
    auto dfs = [&](auto&& self) -> void {
        int cur = chain.back();
        if (cur == p.top) {
            if (++count > chain_budget)
                throw std::runtime_error("for_each_chain: chain budget exceeded; "
                                         "raise the budget or use a smaller poset");
            fn(chain);
            return;
        }
        for (int next : above[cur]) {
            chain.push_back(next);
            self(self);
            chain.pop_back();
        }
    };
    dfs(dfs);
}

} // namespace ncd
