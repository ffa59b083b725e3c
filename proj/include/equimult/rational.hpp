#ifndef EQUIMULT_RATIONAL_HPP
#define EQUIMULT_RATIONAL_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace equimult {

/// Exact rational scalar. Boost keeps it in lowest terms with a positive
/// denominator, and zero is always 0/1. Expression templates are off so that
/// scalar expressions combine with polynomial operators.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return Rational(Integer(num), Integer(den));
}

/// "-3/2" for proper fractions, "5" for integers.
inline std::string to_string(const Rational& q) { return q.str(); }

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

inline Integer factorial(unsigned n) {
    Integer r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r = 1;
    for (unsigned t = 1; t <= k; ++t) {
        r *= n - k + t;
        r /= t;
    }
    return r;
}

} // namespace equimult

#endif
