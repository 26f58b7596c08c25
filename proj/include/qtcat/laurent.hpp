#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qtcat {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Exponent pair of a monomial t^t q^q.
struct Exp2 {
    long long t = 0;
    long long q = 0;
    auto operator<=>(const Exp2&) const = default;
};

inline Exp2 operator+(Exp2 a, Exp2 b) { return {a.t + b.t, a.q + b.q}; }
inline Exp2 operator-(Exp2 a, Exp2 b) { return {a.t - b.t, a.q - b.q}; }
inline Exp2 operator-(Exp2 a) { return {-a.t, -a.q}; }

/// Laurent polynomial in t,q over arbitrary-precision integers.
/// Finitely supported map from exponent pairs to nonzero coefficients.
class LaurentPoly {
public:
    LaurentPoly() = default;

    static LaurentPoly constant(Int c) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(Exp2{0, 0}, std::move(c));
        return p;
    }

    static LaurentPoly monomial(long long et, long long eq, Int c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms_.emplace(Exp2{et, eq}, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Exp2, Int>& terms() const { return terms_; }

    Int coeff(long long et, long long eq) const {
        auto it = terms_.find(Exp2{et, eq});
        return it == terms_.end() ? Int(0) : it->second;
    }

    void add_term(Exp2 e, const Int& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator-(const LaurentPoly& a) {
        LaurentPoly r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }

    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const = default;

    /// Multiply by the monomial t^et q^eq (exponent shift).
    LaurentPoly shifted(Exp2 s) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e + s, c);
        return r;
    }

    LaurentPoly scaled(const Int& c) const {
        LaurentPoly r;
        if (c == 0) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }

    /// Componentwise minimum of exponents over the support. Zero poly -> (0,0).
    Exp2 min_exp() const {
        Exp2 m{0, 0};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) { m = e; first = false; continue; }
            m.t = std::min(m.t, e.t);
            m.q = std::min(m.q, e.q);
        }
        return m;
    }

    Exp2 max_exp() const {
        Exp2 m{0, 0};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first) { m = e; first = false; continue; }
            m.t = std::max(m.t, e.t);
            m.q = std::max(m.q, e.q);
        }
        return m;
    }

    bool all_coeffs_nonnegative() const {
        for (const auto& [e, c] : terms_)
            if (c < 0) return false;
        return true;
    }

private:
    std::map<Exp2, Int> terms_;
};

inline LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
inline LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
inline LaurentPoly poly_neg(const LaurentPoly& a) { return -a; }

inline LaurentPoly one_poly() { return LaurentPoly::constant(1); }

/// Swap the roles of q and t in every term.
inline LaurentPoly swap_qt(const LaurentPoly& p) {
    LaurentPoly r;
    for (const auto& [e, c] : p.terms()) r.add_term(Exp2{e.q, e.t}, c);
    return r;
}

inline bool is_qt_symmetric(const LaurentPoly& p) { return p == swap_qt(p); }

inline Rat rat_pow(const Rat& base, long long e) {
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero base with negative exponent");
        return e == 0 ? Rat(1) : Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-e)
                                 : static_cast<unsigned long long>(e);
    Rat r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

/// Exact evaluation at q = q0, t = t0. Nonzero points required when the
/// support has negative exponents.
inline Rat poly_eval(const LaurentPoly& p, const Rat& q0, const Rat& t0) {
    Rat s(0);
    for (const auto& [e, c] : p.terms())
        s += Rat(c) * rat_pow(t0, e.t) * rat_pow(q0, e.q);
    return s;
}

namespace detail {

// Univariate polynomials over Int keyed by exponent; used as the coefficient
// ring Z[q] inside exact_div.
using QPoly = std::map<long long, Int>;

inline void qp_sub_scaled(QPoly& a, const QPoly& b, const Int& c, long long shift) {
    for (const auto& [e, k] : b) {
        auto [it, inserted] = a.emplace(e + shift, -c * k);
        if (!inserted) {
            it->second -= c * k;
            if (it->second == 0) a.erase(it);
        }
    }
}

// Exact division in Z[q]; nullopt when b does not divide a.
inline std::optional<QPoly> qp_exact_div(QPoly a, const QPoly& b) {
    QPoly quot;
    const auto& [db, cb] = *b.rbegin();
    while (!a.empty()) {
        const auto& [da, ca] = *a.rbegin();
        if (da < db || ca % cb != 0) return std::nullopt;
        Int c = ca / cb;
        quot[da - db] = c;
        qp_sub_scaled(a, b, c, da - db);
    }
    return quot;
}

} // namespace detail

/// Exact division of Laurent polynomials: returns r with r*den == num, or
/// nullopt. t is treated as the outer variable; each step divides leading
/// Z[q] coefficients exactly. No rounding anywhere.
inline std::optional<LaurentPoly> exact_div(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
    if (num.is_zero()) return LaurentPoly{};

    const Exp2 shift = num.min_exp() - den.min_exp();

    // regroup as (Z[q])[t] with exponents made nonnegative
    auto regroup = [](const LaurentPoly& p, Exp2 base) {
        std::map<long long, detail::QPoly> out;
        for (const auto& [e, c] : p.terms()) out[e.t - base.t][e.q - base.q] = c;
        return out;
    };
    auto a = regroup(num, num.min_exp());
    const auto b = regroup(den, den.min_exp());

    const long long dbt = b.rbegin()->first;
    const detail::QPoly& blead = b.rbegin()->second;

    std::map<long long, detail::QPoly> quot;
    while (!a.empty()) {
        const long long dat = a.rbegin()->first;
        if (dat < dbt) return std::nullopt;
        auto qc = detail::qp_exact_div(a.rbegin()->second, blead);
        if (!qc) return std::nullopt;
        const long long dq = dat - dbt;
        // a -= qc * b * t^dq
        for (const auto& [tb, pb] : b) {
            detail::QPoly& target = a[tb + dq];
            for (const auto& [eqc, cqc] : *qc)
                for (const auto& [eb, cb2] : pb) {
                    auto [it, ins] = target.emplace(eqc + eb, -cqc * cb2);
                    if (!ins) {
                        it->second -= cqc * cb2;
                        if (it->second == 0) target.erase(it);
                    }
                }
            if (target.empty()) a.erase(tb + dq);
        }
        quot.emplace(dq, std::move(*qc));
    }

    LaurentPoly r;
    for (const auto& [et, qp] : quot)
        for (const auto& [eq, c] : qp) r.add_term(Exp2{et + shift.t, eq + shift.q}, c);
    return r;
}

/// Canonical term order for display: ascending total degree, then ascending
/// q-exponent. Stable golden-file order.
inline std::vector<std::pair<Exp2, Int>> canonical_terms(const LaurentPoly& p) {
    std::vector<std::pair<Exp2, Int>> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        long long da = a.first.t + a.first.q, db = b.first.t + b.first.q;
        if (da != db) return da < db;
        return a.first.q < b.first.q;
    });
    return v;
}

inline std::string monomial_string(Exp2 e) {
    std::ostringstream os;
    bool need_star = false;
    if (e.q != 0) {
        os << 'q';
        if (e.q != 1) os << '^' << e.q;
        need_star = true;
    }
    if (e.t != 0) {
        if (need_star) os << '*';
        os << 't';
        if (e.t != 1) os << '^' << e.t;
    }
    return os.str();
}

/// Render in the canonical term order, e.g. "t + q + t^2 + q*t + q^2".
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : canonical_terms(p)) {
        Int mag = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::string mono = monomial_string(e);
        if (mono.empty()) {
            os << mag.str();
        } else {
            if (mag != 1) os << mag.str() << '*';
            os << mono;
        }
    }
    return os.str();
}

} // namespace qtcat
