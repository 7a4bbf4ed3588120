#include "ncd/formulas.hpp"

#include <stdexcept>

namespace ncd {

Int closed_form(CountKind kind, int d, int k) {
    if (d < 1 || k < 0) throw std::invalid_argument("closed_form: need d >= 1, k >= 0");
    long long dd = d, kk = k;
    switch (kind) {
        case CountKind::Cardinality:
            return exact_div(2 * binomial(dd * kk + kk + 1, kk), Int(dd * kk + 2));
        case CountKind::Mobius: {
            Int v = exact_div(binomial(2 * dd * kk, kk), Int(2 * dd * kk - kk + 1));
            return (k % 2 == 0) ? v : -v;
        }
        case CountKind::Singleton:
            return exact_div(binomial(dd * kk + kk, kk), Int(dd * kk + 1));
        case CountKind::SmallBlocks:
            return exact_div(2 * binomial(dd * kk + 2, kk), Int(dd * kk + 2));
        case CountKind::SmallBlocksSingleton:
            return exact_div(binomial(dd * kk + 1, kk), Int(dd * kk + 1));
        case CountKind::FallingChains:
            return exact_div(binomial(2 * dd * kk, kk), Int(2 * dd * kk - kk + 1));
        default:
            throw std::invalid_argument("closed_form: this kind takes (i, j) parameters");
    }
}

Int closed_form(CountKind kind, int d, int i, int j) {
    if (d < 1 || i < 0 || j < 0) throw std::invalid_argument("closed_form: need d >= 1, i,j >= 0");
    long long dd = d, ii = i, jj = j, kk = ii + jj;
    switch (kind) {
        case CountKind::RankCount: {
            Int num = Int(dd * kk + 1) * binomial(ii + dd * jj + 1, ii) * binomial(dd * ii + jj + 1, jj);
            return exact_div(num, Int(ii + dd * jj + 1) * Int(dd * ii + jj + 1));
        }
        case CountKind::SingletonRank: {
            Int num = binomial(ii + dd * jj, ii) * binomial(dd * ii + jj - 1, jj);
            return exact_div(num, Int(dd * jj + 1));
        }
        case CountKind::SmallBlocksRank: {
            Int num = Int(dd * kk + 1) * binomial(dd * jj + 1, ii) * binomial(dd * ii + 1, jj);
            return exact_div(num, Int(dd * jj + 1) * Int(dd * ii + 1));
        }
        default:
            throw std::invalid_argument("closed_form: this kind takes a single k parameter");
    }
}

} // namespace ncd
