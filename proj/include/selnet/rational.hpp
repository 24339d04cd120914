#pragma once

#include <gmpxx.h>

#include <string>

#include "selnet/error.hpp"

namespace selnet {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (positive denominator, gcd(num, den) = 1) through every operation, which is
// the representation invariant all predicates in this library rely on.
using Integer = mpz_class;
using Rational = mpq_class;

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

inline Integer numerator(const Rational& q) { return q.get_num(); }
inline Integer denominator(const Rational& q) { return q.get_den(); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw Error(ErrorCode::Precondition, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer floor_int(const Rational& q) {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_int(const Rational& q) {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rational midpoint(const Rational& a, const Rational& b) {
    return (a + b) / 2;
}

// Decimal-string form used by all file formats: "p" or "p/q", base 10.
inline std::string to_decimal(const Integer& z) { return z.get_str(10); }

inline std::string to_decimal(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str(10);
    return q.get_num().get_str(10) + "/" + q.get_den().get_str(10);
}

inline Integer parse_integer(const std::string& s) {
    Integer z;
    if (z.set_str(s, 10) != 0)
        throw Error(ErrorCode::ParseError, "bad integer literal '" + s + "'");
    return z;
}

inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(s));
    Integer num = parse_integer(s.substr(0, slash));
    Integer den = parse_integer(s.substr(slash + 1));
    return make_rational(num, den);
}

} // namespace selnet
