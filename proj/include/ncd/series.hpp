#pragma once

#include "ncd/formulas.hpp"
#include "ncd/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace ncd {

struct Monomial {
    int x = 0;
    int s = 0;
    int t = 0;
    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in x, s, t with exact rational coefficients, truncated
// in x-degree. Arithmetic on two series truncates to the smaller order;
// kExact marks untruncated polynomials.
class Series {
  public:
    static constexpr int kExact = 1 << 29;

    Series() = default;
    explicit Series(int order) : order_(order) {}

    static Series constant(const Rat& c, int order = kExact);
    static Series monomial(const Rat& c, int x, int s, int t, int order = kExact);
    // sum c[k] * x^k
    static Series poly_x(const std::vector<Rat>& coeffs, int order = kExact);

    int order() const { return order_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    Rat coeff(int x, int s, int t) const;
    // The coefficient of x^k as a polynomial in s and t.
    Series coeff_x(int k) const;
    // Largest x-exponent present (0 when zero).
    int x_degree() const;

    Series truncated(int order) const;

    Series operator-() const;
    Series operator+(const Series& other) const;
    Series operator-(const Series& other) const;
    Series operator*(const Series& other) const;
    Series& operator+=(const Series& other) { return *this = *this + other; }
    Series pow(int e) const;

    bool operator==(const Series& other) const { return terms_ == other.terms_; }

    // Substitutes `inner` for x. Requires *this univariate in x and inner
    // with zero constant term in x.
    Series compose_x(const Series& inner) const;
    // Substitutes series for s and t (for bivariate fixed points); requires
    // *this free of x.
    Series subst_st(const Series& for_s, const Series& for_t, int order) const;

    Series d_ds() const;
    Series d_dt() const;
    // Sets s = t = 1.
    Series eval_st_one() const;

    std::string to_string() const;

  private:
    void add_term(const Monomial& m, const Rat& c);
    std::map<Monomial, Rat> terms_;
    int order_ = kExact;
};

// Solves C = A*(x s C*^d), C* = A(x t C^d) by x-adic fixed-point iteration
// from C = C* = 1; each round gains at least one exact x-degree. A and A*
// must be univariate in x with constant term 1.
std::pair<Series, Series> solve_cc_star(const Series& a, const Series& a_star, int d, int order);

// Brute-force oracle for [x^k] B(x): the weight sum over NC^d_{dk+1} with
// block weights a((|B|-1)/d), dual weights a*((|C'|-1)/d), s^corank t^rank.
// Returns a polynomial in s and t.
Series weighted_sum_b(int k, int d, const std::vector<Rat>& a, const std::vector<Rat>& a_star);

// [z^n] G(z)^l for G = z G^m + 1, i.e. l/(mn+l) * C(mn+l, n); asserts
// integrality.
Int algebraic_coefficient(int m, int l, int n);

// The system f1 = z g1(f1,f2), f2 = w g2(f1,f2) solved once up to a total
// (z,w)-degree, answering coefficient queries by the two-variable inversion
// determinant with an internal cross-check against the solved fixed point.
// g1, g2 are polynomials in (s, t) standing for the two function arguments,
// with nonzero constant terms.
class GoodInversionSystem {
  public:
    GoodInversionSystem(Series g1, Series g2, int max_total_degree);

    // [z^m w^n] f1^k f2^l; throws if the two routes disagree.
    Rat coefficient(int m, int n, int k, int l) const;

  private:
    Series g1_, g2_;
    int max_degree_;
    Series f1_, f2_;
    mutable std::vector<Series> f1_pow_, f2_pow_, g1_pow_, g2_pow_;
    mutable std::map<std::pair<int, int>, Series> det_;
    const Series& power(const Series& base, std::vector<Series>& cache, int e) const;
    const Series& determinant(int m, int n) const;
};

// One-shot convenience wrapper around GoodInversionSystem.
Rat good_inversion_2(const Series& g1, const Series& g2, int m, int n, int k, int l);

struct SpeicherWitness {
    bool holds = false;
    Series lhs; // B-bar
    Series rhs; // A-bar composed at x * B-bar
};

// With s = t = 1 and a*(k) = (-1)^k C(-1/d, k), checks
// B-bar(x) = A-bar(x * B-bar(x)) mod x^{order+1} for the given a-sequence
// (a[0] must be 1).
SpeicherWitness verify_speicher(int d, int order, const std::vector<Rat>& a);

} // namespace ncd
