#include "ncd/series.hpp"

#include "ncd/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncd {

void Series::add_term(const Monomial& m, const Rat& c) {
    if (c == 0 || m.x > order_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Series Series::constant(const Rat& c, int order) {
    Series out(order);
    out.add_term({0, 0, 0}, c);
    return out;
}

Series Series::monomial(const Rat& c, int x, int s, int t, int order) {
    Series out(order);
    out.add_term({x, s, t}, c);
    return out;
}

Series Series::poly_x(const std::vector<Rat>& coeffs, int order) {
    Series out(order);
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        out.add_term({static_cast<int>(k), 0, 0}, coeffs[k]);
    return out;
}

Rat Series::coeff(int x, int s, int t) const {
    auto it = terms_.find({x, s, t});
    return it == terms_.end() ? Rat(0) : it->second;
}

Series Series::coeff_x(int k) const {
    Series out(kExact);
    for (const auto& [m, c] : terms_)
        if (m.x == k) out.add_term({0, m.s, m.t}, c);
    return out;
}

int Series::x_degree() const {
    int deg = 0;
    for (const auto& [m, c] : terms_) deg = std::max(deg, m.x);
    return deg;
}

Series Series::truncated(int order) const {
    Series out(order);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

Series Series::operator-() const {
    Series out(order_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Series Series::operator+(const Series& other) const {
    Series out(std::min(order_, other.order_));
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    for (const auto& [m, c] : other.terms_) out.add_term(m, c);
    return out;
}

Series Series::operator-(const Series& other) const { return *this + (-other); }

Series Series::operator*(const Series& other) const {
    Series out(std::min(order_, other.order_));
    for (const auto& [ma, ca] : terms_) {
        if (ma.x > out.order_) continue;
        for (const auto& [mb, cb] : other.terms_) {
            if (ma.x + mb.x > out.order_) continue;
            out.add_term({ma.x + mb.x, ma.s + mb.s, ma.t + mb.t}, ca * cb);
        }
    }
    return out;
}

Series Series::pow(int e) const {
    if (e < 0) throw std::invalid_argument("Series::pow: negative exponent");
    Series acc = Series::constant(1, order_);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

Series Series::compose_x(const Series& inner) const {
    for (const auto& [m, c] : terms_)
        if (m.s != 0 || m.t != 0)
            throw std::invalid_argument("compose_x: outer series must be univariate in x");
    for (const auto& [m, c] : inner.terms_)
        if (m.x == 0)
            throw std::invalid_argument("compose_x: inner series must have zero constant term in x");
    const int order = inner.order_;
    Series out(order);
    Series power = Series::constant(1, order);
    for (int k = 0; k <= std::min(order, x_degree()); ++k) {
        Rat c = coeff(k, 0, 0);
        if (c != 0) out += Series::constant(c, order) * power;
        power = power * inner;
        if (power.is_zero()) break;
    }
    return out;
}

Series Series::subst_st(const Series& for_s, const Series& for_t, int order) const {
    Series out(order);
    for (const auto& [m, c] : terms_) {
        if (m.x != 0) throw std::invalid_argument("subst_st: series must be free of x");
        out += Series::constant(c, order) * for_s.pow(m.s).truncated(order) *
               for_t.pow(m.t).truncated(order);
    }
    return out;
}

Series Series::d_ds() const {
    Series out(order_);
    for (const auto& [m, c] : terms_)
        if (m.s > 0) out.add_term({m.x, m.s - 1, m.t}, c * m.s);
    return out;
}

Series Series::d_dt() const {
    Series out(order_);
    for (const auto& [m, c] : terms_)
        if (m.t > 0) out.add_term({m.x, m.s, m.t - 1}, c * m.t);
    return out;
}

Series Series::eval_st_one() const {
    Series out(order_);
    for (const auto& [m, c] : terms_) out.add_term({m.x, 0, 0}, c);
    return out;
}

std::string Series::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        if (!out.empty()) out += " + ";
        out += "(" + c.str() + ")";
        if (m.x) out += " x^" + std::to_string(m.x);
        if (m.s) out += " s^" + std::to_string(m.s);
        if (m.t) out += " t^" + std::to_string(m.t);
    }
    return out;
}

std::pair<Series, Series> solve_cc_star(const Series& a, const Series& a_star, int d, int order) {
    if (d < 1 || order < 0) throw std::invalid_argument("solve_cc_star: need d >= 1, order >= 0");
    if (a.coeff(0, 0, 0) != 1 || a_star.coeff(0, 0, 0) != 1)
        throw std::invalid_argument("solve_cc_star: A and A* must have constant term 1");

    Series c = Series::constant(1, order);
    Series c_star = Series::constant(1, order);
    const Series xs = Series::monomial(1, 1, 1, 0, order);
    const Series xt = Series::monomial(1, 1, 0, 1, order);
    for (int round = 0; round <= order; ++round) {
        Series next_c = a_star.compose_x(xs * c_star.pow(d));
        Series next_c_star = a.compose_x(xt * c.pow(d));
        c = next_c;
        c_star = next_c_star;
    }
    // One more round must be a fixed point below the truncation order.
    if (!(a_star.compose_x(xs * c_star.pow(d)) == c) ||
        !(a.compose_x(xt * c.pow(d)) == c_star))
        throw std::logic_error("solve_cc_star: fixed point not reached at the given order");
    return {c, c_star};
}

Series weighted_sum_b(int k, int d, const std::vector<Rat>& a, const std::vector<Rat>& a_star) {
    if (k < 0 || d < 1) throw std::invalid_argument("weighted_sum_b: need k >= 0, d >= 1");
    if (a.empty() || a_star.empty() || a[0] != 1 || a_star[0] != 1)
        throw std::invalid_argument("weighted_sum_b: sequences must start with 1");
    const int n = d * k + 1;
    GradedPoset p = build_poset(n, d);
    Series out(Series::kExact);
    for (const NoncrossingPartition& pi : p.elements) {
        Rat w = 1;
        for (const Block& b : pi.blocks()) w *= a.at((b.size() - 1) / d);
        NoncrossingPartition dual = pi.kreweras_dual();
        for (const Block& c : dual.blocks()) w *= a_star.at((c.size() - 1) / d);
        int corank = (pi.block_count() - 1) / d;
        int rank = (dual.block_count() - 1) / d;
        out += Series::monomial(w, 0, corank, rank);
    }
    return out;
}

Int algebraic_coefficient(int m, int l, int n) {
    if (m < 1 || l < 1 || n < 0)
        throw std::invalid_argument("algebraic_coefficient: need m >= 1, l >= 1, n >= 0");
    Rat value = Rat(l, static_cast<long long>(m) * n + l) *
                Rat(binomial(static_cast<long long>(m) * n + l, n));
    return rat_to_int(value);
}

GoodInversionSystem::GoodInversionSystem(Series g1, Series g2, int max_total_degree)
    : g1_(std::move(g1)), g2_(std::move(g2)), max_degree_(max_total_degree) {
    if (max_degree_ < 1) throw std::invalid_argument("GoodInversionSystem: degree must be >= 1");
    if (g1_.coeff(0, 0, 0) == 0 || g2_.coeff(0, 0, 0) == 0)
        throw std::invalid_argument("GoodInversionSystem: constant terms must be nonzero");
    // Solve the fixed point with z = x s, w = x t, so the x-exponent tracks
    // total (z, w)-degree.
    f1_ = Series(max_degree_);
    f2_ = Series(max_degree_);
    const Series zs = Series::monomial(1, 1, 1, 0, max_degree_);
    const Series wt = Series::monomial(1, 1, 0, 1, max_degree_);
    for (int round = 0; round <= max_degree_; ++round) {
        Series nf1 = zs * g1_.subst_st(f1_, f2_, max_degree_);
        Series nf2 = wt * g2_.subst_st(f1_, f2_, max_degree_);
        f1_ = nf1;
        f2_ = nf2;
    }
    f1_pow_ = {Series::constant(1, max_degree_)};
    f2_pow_ = {Series::constant(1, max_degree_)};
    g1_pow_ = {Series::constant(1)};
    g2_pow_ = {Series::constant(1)};
}

const Series& GoodInversionSystem::power(const Series& base, std::vector<Series>& cache,
                                         int e) const {
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * base);
    return cache[e];
}

const Series& GoodInversionSystem::determinant(int m, int n) const {
    auto key = std::make_pair(m, n);
    if (auto it = det_.find(key); it != det_.end()) return it->second;
    // The entries live in the (s, t) plane.
    const Series s_var = Series::monomial(1, 0, 1, 0);
    const Series t_var = Series::monomial(1, 0, 0, 1);
    Series m11 = power(g1_, g1_pow_, m) - s_var * g1_.d_ds() * power(g1_, g1_pow_, m - 1);
    Series m12 = -(t_var * g1_.d_dt() * power(g1_, g1_pow_, m - 1));
    Series m21 = -(s_var * g2_.d_ds() * power(g2_, g2_pow_, n - 1));
    Series m22 = power(g2_, g2_pow_, n) - t_var * g2_.d_dt() * power(g2_, g2_pow_, n - 1);
    return det_.emplace(key, m11 * m22 - m12 * m21).first->second;
}

Rat GoodInversionSystem::coefficient(int m, int n, int k, int l) const {
    if (m < 1 || n < 1 || k < 0 || l < 0)
        throw std::invalid_argument("GoodInversionSystem: need m, n >= 1 and k, l >= 0");
    if (m + n > max_degree_)
        throw std::invalid_argument("GoodInversionSystem: m + n exceeds the solved degree");

    Rat by_det = determinant(m, n).coeff(0, m - k, n - l);
    Rat direct = (power(f1_, f1_pow_, k) * power(f2_, f2_pow_, l)).coeff(m + n, m, n);
    if (by_det != direct)
        throw std::logic_error("good inversion: determinant and fixed-point coefficients differ: " +
                               by_det.str() + " vs " + direct.str());
    return by_det;
}

Rat good_inversion_2(const Series& g1, const Series& g2, int m, int n, int k, int l) {
    if (m < 1 || n < 1)
        throw std::invalid_argument("good_inversion_2: need m, n >= 1");
    return GoodInversionSystem(g1, g2, m + n).coefficient(m, n, k, l);
}

SpeicherWitness verify_speicher(int d, int order, const std::vector<Rat>& a) {
    if (d < 1 || order < 1) throw std::invalid_argument("verify_speicher: need d >= 1, order >= 1");
    if (a.size() < static_cast<std::size_t>(order) + 1 || a[0] != 1)
        throw std::invalid_argument("verify_speicher: need a[0] = 1 and order+1 coefficients");
    std::vector<Rat> a_star(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; ++k)
        a_star[k] = (k % 2 == 0 ? 1 : -1) * binomial_neg_recip(d, k);

    Series series_a = Series::poly_x(a).truncated(order);
    Series series_a_star = Series::poly_x(a_star, order);
    auto [c, c_star] = solve_cc_star(series_a, series_a_star, d, order);
    Series b = (c * c_star).eval_st_one();

    Series a_bar = Series::constant(1, order) +
                   Series::monomial(1, 1, 0, 0, order) * series_a.pow(d);
    Series b_bar = Series::constant(1, order) +
                   Series::monomial(1, 1, 0, 0, order) * b.pow(d);
    Series composed = a_bar.compose_x(Series::monomial(1, 1, 0, 0, order) * b_bar);

    SpeicherWitness w;
    w.lhs = b_bar;
    w.rhs = composed;
    w.holds = (b_bar == composed);
    return w;
}

} // namespace ncd
