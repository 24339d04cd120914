#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "selnet/polynomial.hpp"

namespace selnet {

// den*t - num, the linear polynomial vanishing at r.
inline IntPolynomial linear_root_poly(const Rational& r) {
    return IntPolynomial(std::vector<Integer>{-r.get_num(), r.get_den()});
}

// Sturm chain of a squarefree polynomial. Negated pseudo-remainders with even
// premultipliers keep the integer chain sign-faithful to the rational one.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& squarefree) {
        seq_.push_back(squarefree);
        if (squarefree.degree() >= 1) {
            seq_.push_back(squarefree.derivative());
            while (seq_.back().degree() > 0) {
                IntPolynomial r = pseudo_rem_signed(seq_[seq_.size() - 2], seq_.back());
                if (r.is_zero()) break;
                seq_.push_back(primitive_part(-r));
            }
        }
    }

    const IntPolynomial& poly() const { return seq_.front(); }

    int variations_at(const Rational& x) const {
        int var = 0, prev = 0;
        for (const auto& p : seq_) {
            int s = p.sign_at(x);
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    int variations_at_pos_infinity() const {
        int var = 0, prev = 0;
        for (const auto& p : seq_) {
            int s = p.sign_at_pos_infinity();
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    // Number of distinct roots in the open interval (a, b). Both endpoints
    // must be nonroots of poly().
    int count_open(const Rational& a, const Rational& b) const {
        if (a >= b) return 0;
        return variations_at(a) - variations_at(b);
    }

private:
    std::vector<IntPolynomial> seq_;
};

// Distinct roots of `squarefree` in the closed interval [a, b]; endpoint
// roots are divided out first so the Sturm query sees nonvanishing ends.
inline int count_roots_closed(const IntPolynomial& squarefree, const Rational& a, const Rational& b) {
    if (squarefree.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "count_roots_closed(0)");
    if (a > b) return 0;
    if (a == b) return squarefree.sign_at(a) == 0 ? 1 : 0;
    IntPolynomial q = squarefree;
    int ends = 0;
    if (q.sign_at(a) == 0) {
        q = divide_exact(q, linear_root_poly(a));
        ++ends;
    }
    if (!q.is_zero() && q.sign_at(b) == 0) {
        q = divide_exact(q, linear_root_poly(b));
        ++ends;
    }
    if (q.degree() < 1) return ends;
    return ends + SturmChain(q).count_open(a, b);
}

// One real root of a squarefree defining polynomial, bracketed by a closed
// rational interval. lo == hi exactly when the root is rational; otherwise
// the defining polynomial changes sign across [lo, hi] and does not vanish
// at either endpoint.
struct RootInterval {
    Rational lo;
    Rational hi;
    IntPolynomial poly; // squarefree, vanishing exactly once in [lo, hi]

    bool exact() const { return lo == hi; }

    static RootInterval rational_root(const Rational& r) {
        return RootInterval{r, r, linear_root_poly(r)};
    }
};

// One bisection step, preserving the bracket invariants.
inline void refine_step(RootInterval& r) {
    if (r.exact()) return;
    Rational m = midpoint(r.lo, r.hi);
    int sm = r.poly.sign_at(m);
    if (sm == 0) {
        r.lo = r.hi = m;
        return;
    }
    if (r.poly.sign_at(r.lo) == sm) r.lo = m; else r.hi = m;
}

inline void refine_below_width(RootInterval& r, const Rational& width) {
    while (!r.exact() && r.hi - r.lo > width) refine_step(r);
}

namespace detail {

// Try to recognize the single root of `iso` as an exact rational. Handles
// linear defining polynomials directly, then small integer and small
// rational-root-theorem candidates; other roots simply stay bracketed.
inline void snap_rational_root(RootInterval& iso) {
    if (iso.exact()) return;
    const IntPolynomial& p = iso.poly;
    if (p.degree() == 1) {
        Rational r = make_rational(-p.coefficient(0), p.coefficient(1));
        iso.lo = iso.hi = r;
        return;
    }
    for (int i = 0; i < 4 && !iso.exact(); ++i) refine_step(iso);
    if (iso.exact()) return;
    Integer lo_i = ceil_int(iso.lo), hi_i = floor_int(iso.hi);
    for (Integer k = lo_i; k <= hi_i; ++k) {
        if (p.sign_at(Rational(k)) == 0) {
            iso.lo = iso.hi = Rational(k);
            return;
        }
    }
    const Integer factor_bound("1000000000000");
    Integer c0 = abs(p.coefficient(0)), cl = abs(p.leading());
    if (sgn(c0) == 0 || c0 > factor_bound || cl > factor_bound) return;
    auto divisors = [](Integer v) {
        std::vector<Integer> primes, divs{Integer(1)};
        for (Integer f(2); f * f <= v && f < 100000; ++f) {
            while (v % f == 0) {
                primes.push_back(f);
                v /= f;
            }
        }
        if (v > 1) primes.push_back(v);
        for (const auto& f : primes) {
            std::size_t n = divs.size();
            for (std::size_t i = 0; i < n && divs.size() < 128; ++i) divs.push_back(divs[i] * f);
        }
        std::sort(divs.begin(), divs.end());
        divs.erase(std::unique(divs.begin(), divs.end()), divs.end());
        return divs;
    };
    for (const auto& u : divisors(c0)) {
        for (const auto& w : divisors(cl)) {
            for (int s : {1, -1}) {
                Rational cand = make_rational(s > 0 ? u : Integer(-u), w);
                if (cand < iso.lo || cand > iso.hi) continue;
                if (p.sign_at(cand) == 0) {
                    iso.lo = iso.hi = cand;
                    return;
                }
            }
        }
    }
}

// work: the not-yet-isolated factor (endpoints of every call are nonroots of
// work); defining: the full squarefree polynomial the output references.
inline void isolate_recursive(const SturmChain& chain, const IntPolynomial& defining,
                              const Rational& a, const Rational& b, int count,
                              std::vector<RootInterval>& out) {
    if (count <= 0) return;
    if (count == 1) {
        // Shrink until previously split-off roots of `defining` (always
        // rational bisection points) are off both endpoints.
        Rational lo = a, hi = b;
        while (defining.sign_at(lo) == 0 || defining.sign_at(hi) == 0) {
            Rational m = midpoint(lo, hi);
            int sm = chain.poly().sign_at(m);
            if (sm == 0) {
                lo = hi = m;
                break;
            }
            if (chain.poly().sign_at(lo) == sm) lo = m; else hi = m;
        }
        RootInterval iso{lo, hi, defining};
        snap_rational_root(iso);
        out.push_back(std::move(iso));
        return;
    }
    Rational m = midpoint(a, b);
    if (chain.poly().sign_at(m) == 0) {
        // Bisection point hit a root exactly: record it, divide it out, and
        // recurse with clean endpoints.
        out.push_back(RootInterval{m, m, defining});
        IntPolynomial rest = divide_exact(chain.poly(), linear_root_poly(m));
        SturmChain sub(rest);
        isolate_recursive(sub, defining, a, m, sub.count_open(a, m), out);
        isolate_recursive(sub, defining, m, b, sub.count_open(m, b), out);
        return;
    }
    isolate_recursive(chain, defining, a, m, chain.count_open(a, m), out);
    isolate_recursive(chain, defining, m, b, chain.count_open(m, b), out);
}

} // namespace detail

// Isolating intervals for all distinct real roots of p in [0, oo), sorted,
// pairwise disjoint as closed sets, exactly one root each.
inline std::vector<RootInterval> isolate_nonneg_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolate_nonneg_roots(0)");
    IntPolynomial sf = squarefree_part(p);
    std::vector<RootInterval> out;
    if (sf.degree() < 1) return out;
    IntPolynomial work = sf;
    if (work.sign_at(Rational(0)) == 0) {
        out.push_back(RootInterval{Rational(0), Rational(0), sf});
        work = divide_exact(work, IntPolynomial::identity());
    }
    if (work.degree() >= 1) {
        Rational bound = cauchy_bound(work);
        SturmChain chain(work);
        int count = chain.count_open(Rational(0), bound);
        std::vector<RootInterval> positive;
        detail::isolate_recursive(chain, sf, Rational(0), bound, count, positive);
        std::sort(positive.begin(), positive.end(),
                  [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
        for (auto& r : positive) out.push_back(std::move(r));
    }
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
        while (out[i].hi >= out[i + 1].lo) {
            if (!out[i].exact()) refine_step(out[i]);
            if (!out[i + 1].exact()) refine_step(out[i + 1]);
            if (out[i].exact() && out[i + 1].exact()) break;
        }
    }
    return out;
}

// Sign of q at the root bracketed by iso. Zero is certified through the gcd
// with the defining polynomial, never by numeric coincidence.
inline int sign_at_root(const IntPolynomial& q, RootInterval iso) {
    if (q.is_zero()) return 0;
    if (iso.exact()) return q.sign_at(iso.lo);
    IntPolynomial g = poly_gcd(iso.poly, q);
    if (g.degree() >= 1 && count_roots_closed(g, iso.lo, iso.hi) >= 1) return 0;
    IntPolynomial sfq = squarefree_part(q);
    SturmChain qc(sfq);
    for (;;) {
        if (q.sign_at(iso.lo) != 0 && q.sign_at(iso.hi) != 0 &&
            qc.count_open(iso.lo, iso.hi) == 0) {
            return q.sign_at(iso.lo);
        }
        refine_step(iso);
        if (iso.exact()) return q.sign_at(iso.lo);
    }
}

struct SignTriple {
    int left;  // sign on a punctured interval just below the root
    int at;    // sign at the root (0 only when certified)
    int right; // sign just above the root
};

// Signs of q around the root of iso, exact on all three sides.
inline SignTriple signs_near_root(const IntPolynomial& q, const RootInterval& iso_in) {
    if (q.is_zero()) return {0, 0, 0};
    RootInterval iso = iso_in;
    int at = sign_at_root(q, iso);
    IntPolynomial sfq = squarefree_part(q);
    if (!iso.exact()) {
        SturmChain qc(sfq);
        for (;;) {
            bool ends_ok = q.sign_at(iso.lo) != 0 && q.sign_at(iso.hi) != 0;
            if (ends_ok && qc.count_open(iso.lo, iso.hi) == (at == 0 ? 1 : 0)) break;
            refine_step(iso);
            if (iso.exact()) break;
        }
    }
    if (iso.exact()) {
        Rational t = iso.lo;
        IntPolynomial rest = sfq.sign_at(t) == 0 ? divide_exact(sfq, linear_root_poly(t)) : sfq;
        Rational d(1, 2);
        for (;;) {
            Rational a = t - d, b = t + d;
            bool clear = q.sign_at(a) != 0 && q.sign_at(b) != 0;
            if (clear && rest.degree() >= 1) clear = SturmChain(rest).count_open(a, b) == 0;
            if (clear) return {q.sign_at(a), at, q.sign_at(b)};
            d /= 2;
        }
    }
    return {q.sign_at(iso.lo), at, q.sign_at(iso.hi)};
}

// Total order on real algebraic numbers given as isolated roots.
inline int compare_roots(RootInterval a, RootInterval b) {
    auto disjoint_order = [](const RootInterval& x, const RootInterval& y) -> std::optional<int> {
        if (x.hi < y.lo) return -1;
        if (y.hi < x.lo) return 1;
        return std::nullopt;
    };
    if (a.exact() && b.exact()) return a.lo < b.lo ? -1 : (a.lo == b.lo ? 0 : 1);
    for (int step = 0; step < 4; ++step) {
        if (auto o = disjoint_order(a, b)) return *o;
        refine_step(a);
        refine_step(b);
    }
    if (auto o = disjoint_order(a, b)) return *o;
    if (a.exact()) {
        if (b.poly.sign_at(a.lo) == 0 && b.lo <= a.lo && a.lo <= b.hi) return 0;
    } else if (b.exact()) {
        if (a.poly.sign_at(b.lo) == 0 && a.lo <= b.lo && b.lo <= a.hi) return 0;
    } else {
        IntPolynomial g = poly_gcd(a.poly, b.poly);
        if (g.degree() >= 1) {
            Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
            if (lo <= hi && count_roots_closed(g, lo, hi) >= 1) return 0;
        }
    }
    for (;;) {
        if (auto o = disjoint_order(a, b)) return *o;
        refine_step(a);
        refine_step(b);
    }
}

} // namespace selnet
