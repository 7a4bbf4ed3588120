#include "ncd/parking.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncd {

bool is_d_parking(const std::vector<int>& values, int d) {
    if (d < 1) throw std::invalid_argument("is_d_parking: d must be >= 1");
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 1) return false;
        if (sorted[i] > d * static_cast<int>(i) + 1) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_parking(int d, int k) {
    if (d < 1 || k < 0) throw std::invalid_argument("enumerate_parking: need d >= 1, k >= 0");
    std::vector<std::vector<int>> out;
    std::vector<int> profile(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int pos, int low) -> void {
        if (pos == k) {
            std::vector<int> perm = profile;
            do {
                out.push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.end()));
            return;
        }
        for (int v = low; v <= d * pos + 1; ++v) {
            profile[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, 1);
    return out;
}

namespace {

// Blocks of lo that get merged into one block of hi; throws unless lo < hi
// is a cover in NC^d_n.
std::vector<Block> merged_blocks(const NoncrossingPartition& lo, const NoncrossingPartition& hi,
                                 int d) {
    if (lo.n() != hi.n() || !lo.refines(hi) ||
        lo.block_count() != hi.block_count() + d)
        throw std::invalid_argument("edge_label: not a cover pair");
    std::vector<Block> merged;
    int target = -1;
    for (const Block& b : lo.blocks()) {
        int image = hi.block_index_of(b.front());
        if (hi.block(image).size() == b.size()) continue;
        if (target == -1) target = image;
        if (image != target) throw std::invalid_argument("edge_label: not a cover pair");
        merged.push_back(b);
    }
    if (static_cast<int>(merged.size()) != d + 1)
        throw std::invalid_argument("edge_label: cover must merge exactly d+1 blocks");
    return merged; // already ordered by minima (lo is canonical)
}

} // namespace

int edge_label(const NoncrossingPartition& lo, const NoncrossingPartition& hi, int d) {
    std::vector<Block> merged = merged_blocks(lo, hi, d);
    int bound = merged[1].front();
    int label = -1;
    for (int v : merged[0])
        if (v < bound) label = v;
    if (label < 0) throw std::logic_error("edge_label: empty label candidate set");
    return label;
}

std::vector<int> chain_to_parking(const std::vector<NoncrossingPartition>& chain, int d) {
    std::vector<int> labels;
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        labels.push_back(edge_label(chain[i], chain[i + 1], d));
    if (!is_d_parking(labels, d))
        throw std::logic_error("chain_to_parking: labels fail the d-parking bound");
    return labels;
}

std::vector<NoncrossingPartition> parking_to_chain(const std::vector<int>& pf, int d) {
    if (!is_d_parking(pf, d))
        throw std::invalid_argument("parking_to_chain: not a d-parking function");
    const int k = static_cast<int>(pf.size());
    if (k == 0) return {NoncrossingPartition(1, {{1}})};

    auto max_it = std::max_element(pf.begin(), pf.end());
    const int r = *max_it;
    int s = 0;
    for (int i = 0; i < k; ++i)
        if (pf[i] == r) s = i + 1; // last position, 1-based

    std::vector<int> shorter;
    for (int i = 0; i < k; ++i)
        if (i + 1 != s) shorter.push_back(pf[i]);
    std::vector<NoncrossingPartition> sub = parking_to_chain(shorter, d);

    const int n = d * k + 1;
    auto relabel = [&](const Block& b) {
        Block out;
        for (int v : b) out.push_back(v <= r ? v : v + d);
        return out;
    };
    std::vector<NoncrossingPartition> chain;
    for (int i = 0; i <= k; ++i) {
        Blocks blocks;
        if (i <= s - 1) {
            for (const Block& b : sub[i].blocks()) blocks.push_back(relabel(b));
            for (int v = r + 1; v <= r + d; ++v) blocks.push_back({v});
        } else {
            for (const Block& b : sub[i - 1].blocks()) {
                Block nb = relabel(b);
                if (std::binary_search(b.begin(), b.end(), r))
                    for (int v = r + 1; v <= r + d; ++v) nb.push_back(v);
                blocks.push_back(std::move(nb));
            }
        }
        chain.emplace_back(n, std::move(blocks));
    }
    return chain;
}

ElReport el_check(const GradedPoset& p) {
    ElReport report;

    // Collect maximal chains of [lo, hi] with their lambda* label sequences.
    auto interval_chains = [&](int lo, int hi) {
        std::vector<std::pair<std::vector<int>, std::vector<int>>> out; // (labels, chain)
        std::vector<int> chain{lo};
        std::vector<int> labels;
        auto dfs = [&](auto&& self) -> void {
            int cur = chain.back();
            if (cur == hi) {
                out.emplace_back(labels, chain);
                return;
            }
            for (int up : p.covers_up[cur]) {
                if (!p.leq(up, hi)) continue;
                labels.push_back(p.elements[cur].block_count() -
                                 edge_label(p.elements[cur], p.elements[up], p.d));
                chain.push_back(up);
                self(self);
                chain.pop_back();
                labels.pop_back();
            }
        };
        dfs(dfs);
        return out;
    };

    for (int lo = 0; lo < p.size(); ++lo) {
        for (int hi = 0; hi < p.size(); ++hi) {
            if (lo == hi || !p.leq(lo, hi)) continue;
            auto chains = interval_chains(lo, hi);
            int rising = 0;
            std::size_t rising_at = 0;
            std::size_t lex_least = 0;
            for (std::size_t c = 0; c < chains.size(); ++c) {
                if (std::is_sorted(chains[c].first.begin(), chains[c].first.end())) {
                    ++rising;
                    rising_at = c;
                }
                if (chains[c].first < chains[lex_least].first) lex_least = c;
            }
            bool lex_ok = rising == 1 && chains[rising_at].first == chains[lex_least].first;
            if (rising != 1 || !lex_ok) {
                report.ok = false;
                report.violations.push_back({lo, hi, rising, lex_ok});
            } else if (lo == p.bottom && hi == p.top) {
                for (std::size_t i = 0; i + 1 < chains[rising_at].second.size(); ++i)
                    report.rising_chain_labels.push_back(
                        edge_label(p.elements[chains[rising_at].second[i]],
                                   p.elements[chains[rising_at].second[i + 1]], p.d));
            }
        }
    }
    return report;
}

long long falling_count(int d, int k) {
    long long count = 0;
    for (const std::vector<int>& pf : enumerate_parking(d, k)) {
        bool falling = true;
        for (std::size_t i = 0; i + 1 < pf.size(); ++i)
            if (pf[i] > pf[i + 1] + d - 1) falling = false;
        if (falling) ++count;
    }
    return count;
}

} // namespace ncd
