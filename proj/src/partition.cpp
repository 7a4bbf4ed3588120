#include "ncd/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncd {

int cyclic_alternations(const Block& a, const Block& b) {
    // Merge the two sorted sets, tagging membership, then count label
    // changes around the cycle.
    std::vector<std::pair<int, int>> seq; // (value, tag)
    seq.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j]))
            seq.emplace_back(a[i++], 0);
        else
            seq.emplace_back(b[j++], 1);
    }
    if (seq.size() < 2) return 0;
    int changes = 0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[k].second != seq[(k + 1) % seq.size()].second) ++changes;
    }
    return changes;
}

bool is_noncrossing(int n, const Blocks& blocks) {
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    int count = 0;
    for (const auto& blk : blocks) {
        if (blk.empty()) return false;
        for (std::size_t i = 0; i < blk.size(); ++i) {
            int v = blk[i];
            if (v < 1 || v > n || seen[v]) return false;
            if (i > 0 && blk[i - 1] >= v) return false;
            seen[v] = 1;
            ++count;
        }
    }
    if (count != n) return false;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = i + 1; j < blocks.size(); ++j)
            if (cyclic_alternations(blocks[i], blocks[j]) >= 4) return false;
    return true;
}

int intertwining_number(const Block& b, const Block& c_primed, int n) {
    if (b.empty() || c_primed.empty()) return 0;
    // Interleaved positions: element i at 2i-1, prime i' at 2i.
    std::vector<std::pair<int, int>> seq; // (position, tag: 0=B, 1=C')
    for (int v : b) seq.emplace_back(2 * v - 1, 0);
    for (int v : c_primed) seq.emplace_back(2 * v, 1);
    (void)n;
    std::sort(seq.begin(), seq.end());
    int transitions = 0;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (seq[k].second == 0 && seq[(k + 1) % seq.size()].second == 1) ++transitions;
    }
    return transitions;
}

NoncrossingPartition::NoncrossingPartition(int n, Blocks blocks) : n_(n), blocks_(std::move(blocks)) {
    if (n_ < 1) throw std::invalid_argument("NoncrossingPartition: n must be >= 1");
    for (auto& blk : blocks_) std::sort(blk.begin(), blk.end());
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& x, const Block& y) { return x.front() < y.front(); });
    if (!is_noncrossing(n_, blocks_))
        throw std::invalid_argument("NoncrossingPartition: not a noncrossing partition of [n]");
}

int NoncrossingPartition::block_index_of(int v) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), v)) return static_cast<int>(i);
    throw std::invalid_argument("block_index_of: element out of range");
}

NoncrossingPartition NoncrossingPartition::kreweras_dual() const {
    std::vector<int> region_of(static_cast<std::size_t>(n_) + 1, -1);
    std::vector<int> elem_block(static_cast<std::size_t>(n_) + 1);
    for (std::size_t b = 0; b < blocks_.size(); ++b)
        for (int v : blocks_[b]) elem_block[v] = static_cast<int>(b);

    int next_region = 0;
    int current = next_region++;
    std::vector<int> stack;
    for (int i = 1; i <= n_; ++i) {
        const Block& blk = blocks_[elem_block[i]];
        if (blk.size() > 1) {
            if (i == blk.front()) {
                stack.push_back(current);
                current = next_region++;
            } else if (i == blk.back()) {
                current = stack.back();
                stack.pop_back();
            } else {
                current = next_region++;
            }
        }
        region_of[i] = current;
    }
    if (!stack.empty()) throw std::logic_error("kreweras_dual: unbalanced scan");

    Blocks dual(static_cast<std::size_t>(next_region));
    for (int i = 1; i <= n_; ++i) dual[region_of[i]].push_back(i);
    dual.erase(std::remove_if(dual.begin(), dual.end(), [](const Block& b) { return b.empty(); }),
               dual.end());
    return NoncrossingPartition(n_, std::move(dual));
}

NoncrossingPartition NoncrossingPartition::simion_ullman_dual() const {
    // In the reversed primed order the prime between i and i+1 is (n+1-i)',
    // so the Simion–Ullman dual is the Kreweras dual relabeled by i -> n+1-i.
    NoncrossingPartition kd = kreweras_dual();
    Blocks flipped;
    for (const auto& blk : kd.blocks()) {
        Block f;
        for (int v : blk) f.push_back(n_ + 1 - v);
        flipped.push_back(std::move(f));
    }
    return NoncrossingPartition(n_, std::move(flipped));
}

bool NoncrossingPartition::refines(const NoncrossingPartition& other) const {
    if (n_ != other.n_) return false;
    for (const auto& blk : blocks_) {
        int target = other.block_index_of(blk.front());
        const Block& tb = other.block(target);
        for (int v : blk)
            if (!std::binary_search(tb.begin(), tb.end(), v)) return false;
    }
    return true;
}

NoncrossingPartition NoncrossingPartition::merge_blocks(const std::vector<int>& block_indices) const {
    std::vector<char> merge(blocks_.size(), 0);
    for (int idx : block_indices) merge.at(idx) = 1;
    Blocks out;
    Block merged;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (merge[i])
            merged.insert(merged.end(), blocks_[i].begin(), blocks_[i].end());
        else
            out.push_back(blocks_[i]);
    }
    if (!merged.empty()) out.push_back(std::move(merged));
    return NoncrossingPartition(n_, std::move(out));
}

std::strong_ordering NoncrossingPartition::operator<=>(const NoncrossingPartition& other) const {
    if (auto c = n_ <=> other.n_; c != 0) return c;
    if (auto c = blocks_.size() <=> other.blocks_.size(); c != 0) return c;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (auto c = blocks_[i].size() <=> other.blocks_[i].size(); c != 0) return c;
        for (std::size_t j = 0; j < blocks_[i].size(); ++j)
            if (auto c = blocks_[i][j] <=> other.blocks_[i][j]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

std::string NoncrossingPartition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (i) out += '|';
        for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
            if (j) out += ',';
            out += std::to_string(blocks_[i][j]);
        }
    }
    return out;
}

std::vector<DualAdjacency> adjacencies(const NoncrossingPartition& pi) {
    const int n = pi.n();
    NoncrossingPartition dual = pi.kreweras_dual();
    std::vector<int> dual_block(static_cast<std::size_t>(n) + 1);
    for (int b = 0; b < dual.block_count(); ++b)
        for (int v : dual.block(b)) dual_block[v] = b;

    // Every i realizes one channel: i in B, i' in C', and (j-1)' in C' for
    // j the cyclic successor of i within B. Its gamma is i.
    std::vector<DualAdjacency> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        int b = pi.block_index_of(i);
        const Block& blk = pi.block(b);
        auto it = std::upper_bound(blk.begin(), blk.end(), i);
        int j = (it == blk.end()) ? blk.front() : *it;
        int jm1 = (j == 1) ? n : j - 1;
        if (dual_block[jm1] != dual_block[i])
            throw std::logic_error("adjacencies: channel endpoints land in different dual blocks");
        out.push_back({b, dual_block[i], i});
    }
    return out;
}

bool is_d_indivisible(const NoncrossingPartition& pi, int d) {
    if (d < 1) throw std::invalid_argument("is_d_indivisible: d must be >= 1");
    if (d == 1) return true;
    for (const auto& blk : pi.blocks())
        if ((blk.size() - 1) % static_cast<std::size_t>(d) != 0) return false;
    NoncrossingPartition dual = pi.kreweras_dual();
    for (const auto& blk : dual.blocks())
        if ((blk.size() - 1) % static_cast<std::size_t>(d) != 0) return false;
    return true;
}

bool is_d_indivisible_gaps(const NoncrossingPartition& pi, int d) {
    if (d < 1) throw std::invalid_argument("is_d_indivisible_gaps: d must be >= 1");
    if (d == 1) return true;
    const int n = pi.n();
    if (n % d != 1 % d) return false;
    for (const auto& blk : pi.blocks()) {
        if (blk.size() <= 1) continue;
        for (std::size_t t = 0; t < blk.size(); ++t) {
            int i = blk[t];
            int j = blk[(t + 1) % blk.size()];
            int between = (j - i - 1 + n) % n;
            if (between % d != 0) return false;
        }
    }
    return true;
}

} // namespace ncd
