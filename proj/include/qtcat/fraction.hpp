#pragma once

#include "qtcat/laurent.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <variant>

namespace qtcat {

/// A factor 1 - t^a q^b in canonical orientation: a > 0, or a == 0 and b > 0.
struct BinomialFactor {
    long long a = 0;
    long long b = 0;
    auto operator<=>(const BinomialFactor&) const = default;
};

/// Multiset of canonical binomial factors with positive multiplicities.
using FactorMultiset = std::map<BinomialFactor, long long>;

inline bool factor_is_canonical(long long a, long long b) {
    return a > 0 || (a == 0 && b > 0);
}

struct CanonicalFactor {
    int sign;
    Exp2 unit;
    BinomialFactor factor;
};

/// 1 - t^a q^b = -t^a q^b * (1 - t^-a q^-b); apply the identity at most once
/// so the stored factor is canonical. Rejects (0,0), which would be 0.
inline CanonicalFactor canonicalize_factor(long long a, long long b) {
    if (a == 0 && b == 0) throw std::invalid_argument("canonicalize_factor: (0,0) is zero");
    if (factor_is_canonical(a, b)) return {+1, Exp2{0, 0}, BinomialFactor{a, b}};
    return {-1, Exp2{a, b}, BinomialFactor{-a, -b}};
}

inline LaurentPoly expand(const BinomialFactor& f) {
    LaurentPoly p = one_poly();
    p.add_term(Exp2{f.a, f.b}, -1);
    return p;
}

inline LaurentPoly expand(const FactorMultiset& fs) {
    LaurentPoly p = one_poly();
    for (const auto& [f, mult] : fs)
        for (long long i = 0; i < mult; ++i) p = p - p.shifted(Exp2{f.a, f.b});
    return p;
}

inline void multiset_insert(FactorMultiset& fs, const BinomialFactor& f, long long mult = 1) {
    fs[f] += mult;
    if (fs[f] == 0) fs.erase(f);
}

/// Per-factor maximum of multiplicities.
inline FactorMultiset multiset_max(const FactorMultiset& x, const FactorMultiset& y) {
    FactorMultiset r = x;
    for (const auto& [f, m] : y) {
        auto it = r.find(f);
        if (it == r.end()) r.emplace(f, m);
        else it->second = std::max(it->second, m);
    }
    return r;
}

/// x minus y, clamped at zero per factor.
inline FactorMultiset multiset_diff(const FactorMultiset& x, const FactorMultiset& y) {
    FactorMultiset r;
    for (const auto& [f, m] : x) {
        auto it = y.find(f);
        long long rem = m - (it == y.end() ? 0 : it->second);
        if (rem > 0) r.emplace(f, rem);
    }
    return r;
}

inline FactorMultiset multiset_union(const FactorMultiset& x, const FactorMultiset& y) {
    FactorMultiset r = x;
    for (const auto& [f, m] : y) r[f] += m;
    return r;
}

/// Remove the common part of two multisets in place (cancellation).
inline void multiset_cancel(FactorMultiset& x, FactorMultiset& y) {
    for (auto it = x.begin(); it != x.end();) {
        auto jt = y.find(it->first);
        if (jt == y.end()) { ++it; continue; }
        long long c = std::min(it->second, jt->second);
        it->second -= c;
        jt->second -= c;
        if (jt->second == 0) y.erase(jt);
        if (it->second == 0) it = x.erase(it);
        else ++it;
    }
}

/// Product of binomial factors kept canonical, with the sign and unit
/// monomial shed by canonicalization accumulated on the side:
/// value = sign * t^unit.t q^unit.q * prod expand(factors).
struct FactorProduct {
    int sign = 1;
    Exp2 unit{};
    FactorMultiset factors;

    void append(long long a, long long b, long long mult = 1) {
        CanonicalFactor c = canonicalize_factor(a, b);
        if (c.sign < 0 && (mult % 2)) sign = -sign;
        unit = unit + Exp2{c.unit.t * mult, c.unit.q * mult};
        multiset_insert(factors, c.factor, mult);
    }

    bool operator==(const FactorProduct&) const = default;
};

/// value = sign * t^unit.t q^unit.q * num / prod expand(den).
/// Kept normalized: num has componentwise-minimal exponents (0,0) and its
/// lexicographically least term has a positive coefficient.
struct QTFraction {
    int sign = 1;
    Exp2 unit{};
    LaurentPoly num = one_poly();
    FactorMultiset den;

    static QTFraction zero() {
        QTFraction f;
        f.num = LaurentPoly{};
        return f;
    }

    bool is_zero() const { return num.is_zero(); }
};

inline void frac_normalize(QTFraction& x) {
    if (x.num.is_zero()) {
        x.sign = 1;
        x.unit = Exp2{0, 0};
        return;
    }
    Exp2 m = x.num.min_exp();
    if (m != Exp2{0, 0}) {
        x.num = x.num.shifted(-m);
        x.unit = x.unit + m;
    }
    if (x.num.terms().begin()->second < 0) {
        x.num = -x.num;
        x.sign = -x.sign;
    }
}

inline QTFraction frac_from_poly(LaurentPoly p) {
    QTFraction f;
    f.num = std::move(p);
    frac_normalize(f);
    return f;
}

/// Build sign*t^unit*num / prod(1 - t^a q^b) from possibly non-canonical
/// denominator factors; canonicalization folds signs and units across.
inline QTFraction frac_from_parts(int sign, Exp2 unit, LaurentPoly num,
                                  const std::vector<std::pair<long long, long long>>& den_raw) {
    QTFraction f;
    f.sign = sign;
    f.unit = unit;
    f.num = std::move(num);
    for (auto [a, b] : den_raw) {
        CanonicalFactor c = canonicalize_factor(a, b);
        f.sign *= c.sign;
        f.unit = f.unit - c.unit;
        multiset_insert(f.den, c.factor);
    }
    frac_normalize(f);
    return f;
}

inline QTFraction frac_neg(QTFraction x) {
    x.sign = -x.sign;
    return x;
}

inline QTFraction frac_mul(const QTFraction& x, const QTFraction& y) {
    QTFraction r;
    r.sign = x.sign * y.sign;
    r.unit = x.unit + y.unit;
    r.num = x.num * y.num;
    r.den = multiset_union(x.den, y.den);
    frac_normalize(r);
    return r;
}

/// Common denominator is the per-factor multiplicity maximum; each numerator
/// is cross-multiplied by its missing factors.
inline QTFraction frac_add(const QTFraction& x, const QTFraction& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    QTFraction r;
    r.den = multiset_max(x.den, y.den);
    auto lifted = [&r](const QTFraction& f) {
        LaurentPoly p = f.num.shifted(f.unit);
        if (f.sign < 0) p = -p;
        for (const auto& [fac, mult] : multiset_diff(r.den, f.den))
            for (long long i = 0; i < mult; ++i) p = p - p.shifted(Exp2{fac.a, fac.b});
        return p;
    };
    r.num = lifted(x) + lifted(y);
    if (r.num.is_zero()) return QTFraction::zero();
    frac_normalize(r);
    return r;
}

inline QTFraction frac_sub(const QTFraction& x, const QTFraction& y) {
    return frac_add(x, frac_neg(y));
}

/// Cancel every denominator factor whose expansion exactly divides the
/// numerator. Idempotent, value-preserving.
inline QTFraction frac_reduce(QTFraction x) {
    if (x.num.is_zero()) return QTFraction::zero();
    bool progress = true;
    while (progress) {
        progress = false;
        for (auto it = x.den.begin(); it != x.den.end();) {
            bool erased = false;
            while (it->second > 0) {
                auto q = exact_div(x.num, expand(it->first));
                if (!q) break;
                x.num = std::move(*q);
                progress = true;
                if (--it->second == 0) {
                    it = x.den.erase(it);
                    erased = true;
                    break;
                }
            }
            if (!erased) ++it;
        }
    }
    frac_normalize(x);
    return x;
}

/// Residual left when a fraction fails to reduce to a Laurent polynomial.
struct NotPolynomial {
    QTFraction residual;
};

using PolyOrResidual = std::variant<LaurentPoly, NotPolynomial>;

/// Fully reduced value as a LaurentPoly with unit and sign folded in, or the
/// residual fraction. A remaining denominator is a meaningful outcome for the
/// conjectural series, not a crash.
inline PolyOrResidual to_polynomial(const QTFraction& x) {
    QTFraction r = frac_reduce(x);
    if (!r.den.empty()) return NotPolynomial{std::move(r)};
    LaurentPoly p = r.num.shifted(r.unit);
    if (r.sign < 0) p = -p;
    return p;
}

/// Throwing variant for values that a theorem guarantees to be polynomial.
inline LaurentPoly to_polynomial_or_throw(const QTFraction& x, const char* what) {
    PolyOrResidual r = to_polynomial(x);
    if (std::holds_alternative<NotPolynomial>(r))
        throw std::logic_error(std::string("to_polynomial: non-polynomial value in ") + what);
    return std::get<LaurentPoly>(std::move(r));
}

/// Exact evaluation; the point must not kill any denominator factor.
inline Rat frac_eval(const QTFraction& x, const Rat& q0, const Rat& t0) {
    Rat v = Rat(x.sign) * rat_pow(t0, x.unit.t) * rat_pow(q0, x.unit.q) * poly_eval(x.num, q0, t0);
    for (const auto& [f, mult] : x.den) {
        Rat d = Rat(1) - rat_pow(t0, f.a) * rat_pow(q0, f.b);
        if (d == 0) throw std::domain_error("frac_eval: evaluation at a pole");
        for (long long i = 0; i < mult; ++i) v /= d;
    }
    return v;
}

/// Equality of values by cross-multiplication; exact, no reduction needed.
inline bool frac_equal(const QTFraction& x, const QTFraction& y) {
    LaurentPoly lhs = x.num.shifted(x.unit) * expand(multiset_diff(y.den, x.den));
    LaurentPoly rhs = y.num.shifted(y.unit) * expand(multiset_diff(x.den, y.den));
    if (x.sign < 0) lhs = -lhs;
    if (y.sign < 0) rhs = -rhs;
    return lhs == rhs;
}

inline std::string to_string(const QTFraction& x) {
    std::ostringstream os;
    if (x.sign < 0) os << "-";
    std::string u = monomial_string(x.unit);
    if (!u.empty()) os << u << "*";
    os << "(" << to_string(x.num) << ")";
    if (!x.den.empty()) {
        os << " / ";
        for (const auto& [f, mult] : x.den) {
            os << "(1 - " << monomial_string(Exp2{f.a, f.b}) << ")";
            if (mult > 1) os << "^" << mult;
        }
    }
    return os.str();
}

} // namespace qtcat
