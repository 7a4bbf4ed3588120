#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ncd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// C(top, k) for integer top (possibly negative is not needed here), k >= 0.
inline Int binomial(long long top, long long k) {
    if (k < 0 || (top >= 0 && k > top)) return 0;
    Int num = 1;
    Int den = 1;
    for (long long i = 0; i < k; ++i) {
        num *= Int(top - i);
        den *= Int(i + 1);
    }
    Int q = num / den;
    if (q * den != num) throw std::logic_error("binomial: nonintegral quotient");
    return q;
}

// Generalized binomial C(-1/d, k) as an exact rational.
inline Rat binomial_neg_recip(long long d, long long k) {
    if (k < 0) return 0;
    Rat r = 1;
    Rat top(-1, d);
    for (long long i = 0; i < k; ++i) {
        r *= (top - i) / Rat(i + 1);
    }
    return r;
}

// Division that must be exact; used by the closed-form counting formulas
// whose integrality is itself a checked property.
inline Int exact_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("exact_div: division by zero");
    Int q = a / b;
    if (q * b != a)
        throw std::logic_error("exact_div: " + a.str() + " not divisible by " + b.str());
    return q;
}

inline Int rat_to_int(const Rat& r) {
    if (denominator(r) != 1) throw std::logic_error("rat_to_int: nonintegral rational " + r.str());
    return numerator(r);
}

} // namespace ncd
