#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "selnet/error.hpp"
#include "selnet/rational.hpp"

namespace selnet {

// Univariate polynomial with arbitrary-precision integer coefficients, stored
// low degree first with a nonzero top coefficient (the zero polynomial is the
// empty list).
class IntPolynomial {
public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPolynomial constant(Integer v) {
        IntPolynomial p;
        if (sgn(v) != 0) p.c_.push_back(std::move(v));
        return p;
    }

    static IntPolynomial from_longs(std::initializer_list<long> coeffs) {
        std::vector<Integer> c;
        c.reserve(coeffs.size());
        for (long v : coeffs) c.emplace_back(v);
        return IntPolynomial(std::move(c));
    }

    // t
    static IntPolynomial identity() { return from_longs({0, 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    const std::vector<Integer>& coefficients() const { return c_; }
    const Integer& coefficient(std::size_t i) const {
        static const Integer zero(0);
        return i < c_.size() ? c_[i] : zero;
    }
    const Integer& leading() const { return c_.back(); }

    bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }
    bool operator!=(const IntPolynomial& o) const { return !(*this == o); }

    IntPolynomial operator-() const {
        IntPolynomial r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
        std::vector<Integer> c(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }

    friend IntPolynomial operator*(const IntPolynomial& a, const Integer& s) {
        if (sgn(s) == 0) return {};
        IntPolynomial r = a;
        for (auto& v : r.c_) v *= s;
        return r;
    }

    IntPolynomial derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Integer> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return IntPolynomial(std::move(d));
    }

    Rational value_at(const Rational& t) const {
        // p(a/b) * b^deg is an integer; evaluate with a two-accumulator Horner
        // to stay in integer arithmetic.
        if (is_zero()) return Rational(0);
        const Integer& a = t.get_num();
        const Integer& b = t.get_den();
        Integer acc = c_.back();
        Integer bpow(1);
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            bpow *= b;
            acc = acc * a + c_[i] * bpow;
        }
        Integer denom;
        mpz_pow_ui(denom.get_mpz_t(), b.get_mpz_t(), c_.size() - 1);
        return make_rational(acc, denom);
    }

    int sign_at(const Rational& t) const {
        if (is_zero()) return 0;
        const Integer& a = t.get_num();
        const Integer& b = t.get_den();
        Integer acc = c_.back();
        Integer bpow(1);
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            bpow *= b;
            acc = acc * a + c_[i] * bpow;
        }
        return sgn(acc); // b > 0, so the denominator never flips the sign
    }

    int sign_at_pos_infinity() const { return is_zero() ? 0 : sgn(c_.back()); }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (sgn(c_[i]) == 0) continue;
            if (!s.empty()) s += sgn(c_[i]) > 0 ? " + " : " - ";
            else if (sgn(c_[i]) < 0) s += "-";
            Integer a = abs(c_[i]);
            bool unit = a == 1 && i > 0;
            if (!unit) s += a.get_str(10);
            if (i > 0) {
                if (!unit) s += "*";
                s += var;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void normalize() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

// gcd of the absolute values of all coefficients (0 for the zero polynomial).
inline Integer content(const IntPolynomial& p) {
    Integer g(0);
    for (const auto& v : p.coefficients()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

inline IntPolynomial divide_by_integer_exact(const IntPolynomial& p, const Integer& s) {
    if (sgn(s) == 0) throw Error(ErrorCode::InternalFailure, "division by zero content");
    std::vector<Integer> c(p.coefficients());
    for (auto& v : c) {
        Integer q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
        if (sgn(r) != 0) throw Error(ErrorCode::InternalFailure, "inexact integer division");
        v = q;
    }
    return IntPolynomial(std::move(c));
}

// Primitive part with the sign kept (content is taken positive).
inline IntPolynomial primitive_part(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    return divide_by_integer_exact(p, content(p));
}

// Pseudo-remainder of a by b premultiplied by an even power of lc(b), so the
// result has the same sign as the true remainder of a by b over the rationals.
inline IntPolynomial pseudo_rem_signed(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::InternalFailure, "pseudo_rem by zero");
    int da = a.degree(), db = b.degree();
    if (da < db) return a;
    unsigned e = static_cast<unsigned>(da - db + 1);
    if (e % 2 == 1) ++e;
    Integer mult;
    mpz_pow_ui(mult.get_mpz_t(), b.leading().get_mpz_t(), e);
    std::vector<Integer> r(a.coefficients());
    for (auto& v : r) v *= mult;
    const auto& bc = b.coefficients();
    for (int k = da; k >= db; --k) {
        if (sgn(r[k]) == 0) continue;
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[k].get_mpz_t(), b.leading().get_mpz_t());
        if (sgn(rem) != 0) throw Error(ErrorCode::InternalFailure, "pseudo_rem: non-divisible head");
        for (int i = 0; i <= db; ++i) r[k - db + i] -= q * bc[i];
    }
    r.resize(db > 0 ? db : 0);
    return IntPolynomial(std::move(r));
}

// Exact quotient; throws if b does not divide a in Q[t] with integer result
// after clearing content. Used only where divisibility is guaranteed.
inline IntPolynomial divide_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error(ErrorCode::InternalFailure, "divide_exact by zero");
    if (a.is_zero()) return {};
    int da = a.degree(), db = b.degree();
    if (da < db) throw Error(ErrorCode::InternalFailure, "divide_exact: degree underflow");
    // Long division over the rationals, verified integral at the end.
    std::vector<Rational> rem(a.coefficients().size());
    for (std::size_t i = 0; i < rem.size(); ++i) rem[i] = Rational(a.coefficients()[i]);
    std::vector<Rational> quot(static_cast<std::size_t>(da - db) + 1, Rational(0));
    Rational lead(b.leading());
    for (int k = da; k >= db; --k) {
        Rational q = rem[k] / lead;
        quot[k - db] = q;
        if (sgn(q) == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k - db + i] -= q * Rational(b.coefficients()[i]);
    }
    for (int i = 0; i < db; ++i)
        if (sgn(rem[i]) != 0) throw Error(ErrorCode::InternalFailure, "divide_exact: nonzero remainder");
    // Clear denominators; for the uses in this library the quotient is
    // integral already, but normalizing through content keeps this general.
    Integer den(1);
    for (const auto& q : quot) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Integer> qi(quot.size());
    for (std::size_t i = 0; i < quot.size(); ++i) {
        Rational v = quot[i] * Rational(den);
        qi[i] = v.get_num();
    }
    IntPolynomial q(std::move(qi));
    if (den != 1) q = primitive_part(q);
    return q;
}

// Primitive positive-leading-coefficient gcd via the primitive PRS.
inline IntPolynomial poly_gcd(IntPolynomial a, IntPolynomial b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.is_zero()) return sgn(b.leading()) < 0 ? -b : b;
    if (b.is_zero()) return sgn(a.leading()) < 0 ? -a : a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_rem_signed(a, b);
        a = std::move(b);
        b = r.is_zero() ? IntPolynomial{} : primitive_part(r);
    }
    return sgn(a.leading()) < 0 ? -a : a;
}

inline IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of 0");
    if (p.degree() == 0) return IntPolynomial::constant(Integer(1));
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return primitive_part(p);
    return primitive_part(divide_exact(primitive_part(p), g));
}

// All real roots of p lie strictly inside (-B, B).
inline Rational cauchy_bound(const IntPolynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of 0");
    Integer mx(0);
    const auto& c = p.coefficients();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        Integer a = abs(c[i]);
        if (a > mx) mx = a;
    }
    Rational b = Rational(1) + make_rational(mx, abs(p.leading()));
    return Rational(ceil_int(b));
}

} // namespace selnet
