#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "selnet/roots.hpp"

namespace selnet {

// Quotient of integer polynomials, stored reduced (gcd of numerator and
// denominator divided out, denominator with positive leading coefficient).
// The time domain everywhere in this library is t >= 0.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(IntPolynomial::constant(Integer(1))) {}

    RationalFunction(IntPolynomial num, IntPolynomial den) {
        if (den.is_zero())
            throw Error(ErrorCode::Precondition, "rational function with zero denominator");
        if (num.is_zero()) {
            num_ = IntPolynomial{};
            den_ = IntPolynomial::constant(Integer(1));
            return;
        }
        IntPolynomial g = poly_gcd(num, den);
        if (g.degree() >= 1) {
            num = divide_exact(num, g);
            den = divide_exact(den, g);
        }
        Integer cn = content(num), cd = content(den);
        Integer cg;
        mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
        if (cg > 1) {
            num = divide_by_integer_exact(num, cg);
            den = divide_by_integer_exact(den, cg);
        }
        if (sgn(den.leading()) < 0) {
            num = -num;
            den = -den;
        }
        num_ = std::move(num);
        den_ = std::move(den);
    }

    static RationalFunction from_polynomial(IntPolynomial p) {
        RationalFunction f;
        f.num_ = std::move(p);
        return f;
    }

    static RationalFunction constant(const Rational& q) {
        return RationalFunction(IntPolynomial::constant(q.get_num()),
                                IntPolynomial::constant(q.get_den()));
    }

    const IntPolynomial& numerator() const { return num_; }
    const IntPolynomial& denominator() const { return den_; }

    bool is_polynomial() const { return den_.degree() == 0; }
    bool is_zero() const { return num_.is_zero(); }

    // Description complexity: max degree of the reduced numerator/denominator.
    int beta() const { return std::max(std::max(num_.degree(), 0), den_.degree()); }

    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    bool defined_at(const Rational& t) const { return den_.sign_at(t) != 0; }

    // Exact value, or nullopt where the denominator vanishes.
    std::optional<Rational> value_at(const Rational& t) const {
        if (!defined_at(t)) return std::nullopt;
        if (num_.is_zero()) return Rational(0);
        return num_.value_at(t) / den_.value_at(t);
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_polynomial() && den_.coefficient(0) == 1) return num_.to_string(var);
        return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
    }

private:
    IntPolynomial num_;
    IntPolynomial den_;
};

// num(f)*den(g) - num(g)*den(f); vanishes exactly where f and g agree (or
// identically when they are the same reduced function).
inline IntPolynomial cross_difference(const RationalFunction& f, const RationalFunction& g) {
    return f.numerator() * g.denominator() - g.numerator() * f.denominator();
}

inline bool identical(const RationalFunction& f, const RationalFunction& g) {
    return f == g;
}

struct CrossRoots {
    bool identical = false;
    std::vector<RootInterval> roots; // coincidence times on [0, oo)
};

inline CrossRoots cross_difference_roots(const RationalFunction& f, const RationalFunction& g) {
    IntPolynomial d = cross_difference(f, g);
    if (d.is_zero()) return {true, {}};
    return {false, isolate_nonneg_roots(d)};
}

// Sign of f - g at an isolated algebraic time (both assumed defined there).
inline int compare_values_at_root(const RationalFunction& f, const RationalFunction& g,
                                  const RootInterval& t) {
    int cd = sign_at_root(cross_difference(f, g), t);
    if (cd == 0) return 0;
    int sf = sign_at_root(f.denominator(), t);
    int sg = sign_at_root(g.denominator(), t);
    return cd * sf * sg;
}

} // namespace selnet
