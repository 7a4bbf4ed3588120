#include "ncd/hopf.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ncd {

void HopfElement::add(std::vector<int> sizes, long long coeff) {
    if (coeff == 0) return;
    sizes.erase(std::remove(sizes.begin(), sizes.end(), 1), sizes.end());
    std::sort(sizes.begin(), sizes.end());
    auto [it, inserted] = terms_.emplace(std::move(sizes), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

HopfElement& HopfElement::operator+=(const HopfElement& other) {
    for (const auto& [sizes, coeff] : other.terms_) add(sizes, coeff);
    return *this;
}

std::string HopfElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [sizes, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += std::to_string(coeff) + "*[";
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(sizes[i]);
        }
        out += "]";
    }
    return out;
}

bool edges_noncrossing(const std::vector<int>& e, const std::vector<int>& f, int n) {
    std::vector<int> shared;
    std::set_intersection(e.begin(), e.end(), f.begin(), f.end(), std::back_inserter(shared));
    if (shared.size() >= 2) return false;
    if (shared.empty()) {
        // Disjoint convex hulls occupy complementary cyclic arcs.
        return cyclic_alternations(e, f) <= 2;
    }
    // Cut the circle at the shared vertex; the two spans must be disjoint.
    const int v = shared[0];
    auto span = [&](const std::vector<int>& edge) {
        int lo = n, hi = 1;
        for (int x : edge) {
            if (x == v) continue;
            int shifted = (x - v + n) % n; // in [1, n-1]
            lo = std::min(lo, shifted);
            hi = std::max(hi, shifted);
        }
        return std::pair<int, int>{lo, hi};
    };
    auto [elo, ehi] = span(e);
    auto [flo, fhi] = span(f);
    return ehi < flo || fhi < elo;
}

bool is_valid_hypertree(const Hypertree& t, int d) {
    if (t.n < 1) return false;
    long long weight = 0;
    for (const auto& e : t.edges) {
        if (e.size() < 2 || (e.size() - 1) % static_cast<std::size_t>(d) != 0) return false;
        for (int v : e)
            if (v < 1 || v > t.n) return false;
        weight += static_cast<long long>(e.size()) - 1;
    }
    if (weight != t.n - 1) return false;
    for (std::size_t i = 0; i < t.edges.size(); ++i)
        for (std::size_t j = i + 1; j < t.edges.size(); ++j)
            if (!edges_noncrossing(t.edges[i], t.edges[j], t.n)) return false;
    std::vector<int> comp(static_cast<std::size_t>(t.n) + 1);
    for (int v = 1; v <= t.n; ++v) comp[v] = v;
    auto find = [&](auto&& self, int x) -> int {
        return comp[x] == x ? x : comp[x] = self(self, comp[x]);
    };
    for (const auto& e : t.edges)
        for (std::size_t i = 1; i < e.size(); ++i) comp[find(find, e[i])] = find(find, e[0]);
    for (int v = 2; v <= t.n; ++v)
        if (find(find, v) != find(find, 1)) return false;
    return true;
}

std::vector<std::vector<int>> phi(const NoncrossingPartition& pi, const NoncrossingPartition& sigma) {
    if (!(pi.refines(sigma)) || pi == sigma)
        throw std::invalid_argument("phi: requires pi strictly below sigma");
    NoncrossingPartition dual = pi.kreweras_dual();
    // adjacency groups: for each dual block, the adjacent pi-blocks with
    // their gamma values, grouped by the sigma-block swallowing them.
    std::vector<std::vector<std::pair<int, int>>> by_dual(dual.block_count()); // (block, gamma)
    for (const DualAdjacency& a : adjacencies(pi))
        by_dual[a.dual_block_index].emplace_back(a.block_index, a.gamma);

    std::vector<std::vector<int>> edges;
    for (const auto& group : by_dual) {
        std::map<int, std::vector<int>> merged; // sigma block -> gammas
        for (auto [b, gamma] : group)
            merged[sigma.block_index_of(pi.block(b).front())].push_back(gamma);
        for (auto& [sblock, gammas] : merged) {
            if (gammas.size() < 2) continue;
            std::sort(gammas.begin(), gammas.end());
            edges.push_back(std::move(gammas));
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<std::vector<int>> phi_chain(const std::vector<NoncrossingPartition>& chain) {
    std::set<std::vector<int>> edges;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        for (auto& e : phi(chain[i], chain[i + 1])) edges.insert(std::move(e));
    return {edges.begin(), edges.end()};
}

namespace {

bool edge_size_ok(int size, int d) { return size >= 2 && (size - 1) % d == 0; }

// Enumeration of noncrossing hypertrees by maximal edge spans: a structure
// on [a, b] whose top edge contains both a and b (block), a chain of blocks
// glued at shared cut points (chain), and the filling of one gap of an edge,
// which splits into a left chain hanging on the left corner and a right
// chain hanging on the right corner (gap).
struct HypertreeEnumerator {
    int d;
    std::map<std::pair<int, int>, std::vector<std::vector<std::vector<int>>>> memo_block, memo_chain;

    const std::vector<std::vector<std::vector<int>>>& chain(int a, int b) {
        auto key = std::make_pair(a, b);
        if (auto it = memo_chain.find(key); it != memo_chain.end()) return it->second;
        std::vector<std::vector<std::vector<int>>> out;
        if (a == b) {
            out.push_back({});
        } else {
            for (int c = a + 1; c <= b; ++c)
                for (const auto& first : block(a, c))
                    for (const auto& rest : chain(c, b)) {
                        auto combined = first;
                        combined.insert(combined.end(), rest.begin(), rest.end());
                        out.push_back(std::move(combined));
                    }
        }
        return memo_chain.emplace(key, std::move(out)).first->second;
    }

    const std::vector<std::vector<std::vector<int>>>& block(int a, int b) {
        auto key = std::make_pair(a, b);
        if (auto it = memo_block.find(key); it != memo_block.end()) return it->second;
        std::vector<std::vector<std::vector<int>>> out;
        // Choose the interior corners of the top edge.
        const int gap_count = b - a - 1;
        for (int mask = 0; mask < (1 << gap_count); ++mask) {
            std::vector<int> corners{a};
            for (int i = 0; i < gap_count; ++i)
                if (mask & (1 << i)) corners.push_back(a + 1 + i);
            corners.push_back(b);
            if (!edge_size_ok(static_cast<int>(corners.size()), d)) continue;
            std::vector<std::vector<std::vector<int>>> partial{{corners}};
            for (std::size_t i = 0; i + 1 < corners.size(); ++i) {
                std::vector<std::vector<std::vector<int>>> next;
                for (const auto& fill : gap(corners[i], corners[i + 1]))
                    for (const auto& got : partial) {
                        auto combined = got;
                        combined.insert(combined.end(), fill.begin(), fill.end());
                        next.push_back(std::move(combined));
                    }
                partial = std::move(next);
            }
            for (auto& structure : partial) out.push_back(std::move(structure));
        }
        return memo_block.emplace(key, std::move(out)).first->second;
    }

    std::vector<std::vector<std::vector<int>>> gap(int u, int w) {
        std::vector<std::vector<std::vector<int>>> out;
        if (w == u + 1) {
            out.push_back({});
            return out;
        }
        for (int p = u; p < w; ++p)
            for (const auto& left : chain(u, p))
                for (const auto& right : chain(p + 1, w)) {
                    auto combined = left;
                    combined.insert(combined.end(), right.begin(), right.end());
                    out.push_back(std::move(combined));
                }
        return out;
    }
};

} // namespace

std::vector<Hypertree> enumerate_hypertrees(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("enumerate_hypertrees: need n >= 1, d >= 1");
    if (n % d != 1 % d)
        throw std::invalid_argument("enumerate_hypertrees: n must be 1 mod d");
    std::vector<Hypertree> out;
    if (n == 1) {
        out.push_back(Hypertree{1, {}});
        return out;
    }
    HypertreeEnumerator e{d, {}, {}};
    for (const auto& structure : e.chain(1, n)) {
        Hypertree t{n, structure};
        std::sort(t.edges.begin(), t.edges.end());
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(),
              [](const Hypertree& x, const Hypertree& y) { return x.edges < y.edges; });
    return out;
}

HopfElement antipode_schmitt(const GradedPoset& p, long long chain_budget) {
    HopfElement out;
    for_each_chain(p, chain_budget, [&](const std::vector<int>& chain) {
        std::vector<int> sizes;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
            std::vector<int> f = interval_factorization(p, chain[i], chain[i + 1]);
            sizes.insert(sizes.end(), f.begin(), f.end());
        }
        int steps = static_cast<int>(chain.size()) - 1;
        out.add(std::move(sizes), steps % 2 == 0 ? 1 : -1);
    });
    return out;
}

HopfElement antipode_hypertrees(int n, int d) {
    HopfElement out;
    for (const Hypertree& t : enumerate_hypertrees(n, d)) {
        std::vector<int> sizes;
        for (const auto& e : t.edges) sizes.push_back(static_cast<int>(e.size()));
        int r = static_cast<int>(t.edges.size());
        out.add(std::move(sizes), r % 2 == 0 ? 1 : -1);
    }
    return out;
}

long long mobius_via_hypertrees(int n, int d) {
    long long sum = 0;
    for (const Hypertree& t : enumerate_hypertrees(n, d))
        sum += (t.edges.size() % 2 == 0) ? 1 : -1;
    return sum;
}

} // namespace ncd
