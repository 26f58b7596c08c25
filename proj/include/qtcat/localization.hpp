#pragma once

#include "qtcat/fraction.hpp"
#include "qtcat/partition.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace qtcat {

/// Multiset of torus weights t^a q^b with multiplicity.
using WeightMultiset = std::map<Exp2, int>;

/// B_mu(q,t) = sum of t^h q^k over cells.
inline LaurentPoly B_mu(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("B_mu: empty partition");
    LaurentPoly p;
    for (Cell c : cells(mu)) p.add_term(Exp2{c.h, c.k}, 1);
    return p;
}

/// Pi_mu(q,t) = prod over non-origin cells of (1 - t^h q^k), as factors.
inline FactorMultiset Pi_mu_cells(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("Pi_mu_cells: empty partition");
    FactorMultiset fs;
    for (Cell c : cells(mu))
        if (!(c.h == 0 && c.k == 0)) multiset_insert(fs, BinomialFactor{c.h, c.k});
    return fs;
}

/// Cotangent weight product at the fixed point I_mu of Hil^n:
/// prod over cells of (1 - t^{1+l} q^{-a})(1 - t^{-l} q^{1+a}),
/// canonicalized with the shed unit and sign tracked.
inline FactorProduct hilb_cotangent_factors(const Partition& mu) {
    if (mu.empty()) throw std::invalid_argument("hilb_cotangent_factors: empty partition");
    FactorProduct fp;
    for (Cell c : cells(mu)) {
        ArmLeg al = armleg(mu, c);
        fp.append(1 + al.leg, -al.arm);
        fp.append(-al.leg, 1 + al.arm);
    }
    return fp;
}

/// Tangent eigenvalues at a fixed point of the nested Hilbert scheme,
/// split into the eight classes. Sizes: |a1| = |a5| = |Row(zeta)|,
/// |a2| = |a6| = |Col(zeta)|, |a3| = |a4| = 1, |a7| = |a8| = n-1-|Row|-|Col|;
/// total 2n. Arms and legs are taken in mu for a1, a2, a7, a8 and in
/// nu = mu minus zeta for a5, a6.
///
/// a5 carries the nu-side weights over Row(zeta) of u* type
/// (t^{l_nu} q^{-1-a_nu}) and a6 the nu-side weights over Col(zeta) of
/// d* type (t^{-1-l_nu} q^{a_nu}). With those, forming prod (1 - w^{-1})
/// over all eight classes reproduces the (1-t)(1-q) P1 P2 P3 cotangent
/// product exactly, which is what the fixed-point sums consume.
struct NestedWeightClasses {
    WeightMultiset a1, a2, a3, a4, a5, a6, a7, a8;
};

inline NestedWeightClasses nested_weight_classes(const NestedPair& pair) {
    const Partition& mu = pair.mu;
    const Cell zeta = pair.corner;
    const Partition nu = pair.nu();
    NestedWeightClasses w;

    for (Cell c : row_cells(mu, zeta)) {
        ArmLeg in_mu = armleg(mu, c);
        ArmLeg in_nu = armleg(nu, c);
        w.a1[Exp2{-1 - in_mu.leg, in_mu.arm}]++;
        w.a5[Exp2{in_nu.leg, -1 - in_nu.arm}]++;
    }
    for (Cell c : col_cells(mu, zeta)) {
        ArmLeg in_mu = armleg(mu, c);
        ArmLeg in_nu = armleg(nu, c);
        w.a2[Exp2{in_mu.leg, -1 - in_mu.arm}]++;
        w.a6[Exp2{-1 - in_nu.leg, in_nu.arm}]++;
    }
    w.a3[Exp2{0, -1}]++;
    w.a4[Exp2{-1, 0}]++;
    for (Cell c : cells(mu)) {
        if (c == zeta || c.h == zeta.h || c.k == zeta.k) continue;
        ArmLeg al = armleg(mu, c);
        w.a7[Exp2{-1 - al.leg, al.arm}]++;
        w.a8[Exp2{al.leg, -1 - al.arm}]++;
    }
    return w;
}

namespace detail {

// Route (i): the closed products (1-t)(1-q) P1 P2 P3 with arms/legs in mu.
inline FactorProduct nested_denominator_printed(const NestedPair& pair) {
    const Partition& mu = pair.mu;
    const Cell zeta = pair.corner;
    FactorProduct fp;
    fp.append(1, 0);
    fp.append(0, 1);
    for (Cell c : cells(mu)) {
        if (c == zeta) continue;
        ArmLeg al = armleg(mu, c);
        if (c.h == zeta.h) { // P2, row of zeta
            fp.append(1 + al.leg, -al.arm);
            fp.append(-al.leg, al.arm);
        } else if (c.k == zeta.k) { // P3, column of zeta
            fp.append(-al.leg, 1 + al.arm);
            fp.append(al.leg, -al.arm);
        } else { // P1
            fp.append(1 + al.leg, -al.arm);
            fp.append(-al.leg, 1 + al.arm);
        }
    }
    return fp;
}

// Route (ii): prod (1 - w^{-1}) over all tangent eigenvalues w; cotangent
// weights are the reciprocals of the tangent ones.
inline FactorProduct nested_denominator_from_weights(const NestedPair& pair) {
    NestedWeightClasses w = nested_weight_classes(pair);
    FactorProduct fp;
    for (const WeightMultiset* cls : {&w.a1, &w.a2, &w.a3, &w.a4, &w.a5, &w.a6, &w.a7, &w.a8})
        for (const auto& [e, mult] : *cls) fp.append(-e.t, -e.q, mult);
    return fp;
}

} // namespace detail

/// Denominator of a nested fixed-point term, built two independent ways and
/// cross-checked: (i) from the printed P1 P2 P3 closed forms, (ii) from the
/// tangent weight classes. Disagreement is a hard failure.
inline FactorProduct nested_denominator(const NestedPair& pair) {
    FactorProduct printed = detail::nested_denominator_printed(pair);
    FactorProduct from_weights = detail::nested_denominator_from_weights(pair);
    if (!(printed == from_weights))
        throw std::logic_error("nested_denominator: closed-form and weight-class builds disagree");
    return printed;
}

/// Hilbert series of the fiber of O(m) tensor O_{Z_n} at I_mu:
/// t^{m n(mu)} q^{m n(mu')} B_mu (1-t)(1-q) prod_{cells != origin} (1-t^h q^k).
inline LaurentPoly fiber_series(const Partition& mu, int m) {
    if (mu.empty() || m < 1) throw std::invalid_argument("fiber_series: need nonempty mu, m >= 1");
    FactorMultiset fs = Pi_mu_cells(mu);
    multiset_insert(fs, BinomialFactor{1, 0});
    multiset_insert(fs, BinomialFactor{0, 1});
    LaurentPoly p = expand(fs) * B_mu(mu);
    return p.shifted(Exp2{m * n_stat(mu), m * n_stat(mu.conjugate())});
}

namespace detail {

// One fixed-point term as a fraction. The numerator binomials (1-t)(1-q) and
// the Pi_mu cell factors are cancelled against the denominator multiset
// before anything is expanded; only the leftover product times B_mu is
// expanded. Expanding the result times the cancelled factors reproduces
// fiber_series exactly.
inline QTFraction localization_term(const Partition& mu, int m, const FactorProduct& den) {
    FactorMultiset numf = Pi_mu_cells(mu);
    multiset_insert(numf, BinomialFactor{1, 0});
    multiset_insert(numf, BinomialFactor{0, 1});
    FactorMultiset denf = den.factors;
    multiset_cancel(numf, denf);

    QTFraction f;
    f.sign = den.sign;
    f.unit = Exp2{m * n_stat(mu), m * n_stat(mu.conjugate())} - den.unit;
    f.num = expand(numf) * B_mu(mu);
    f.den = std::move(denf);
    frac_normalize(f);
    return f;
}

} // namespace detail

/// Full fixed-point sum for C_n^(m) as a fraction, before reduction.
inline QTFraction catalan_loc_sum(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("catalan_loc: need n >= 1, m >= 1");
    QTFraction acc = QTFraction::zero();
    for (const Partition& mu : enumerate_partitions(n))
        acc = frac_add(acc, detail::localization_term(mu, m, hilb_cotangent_factors(mu)));
    return acc;
}

/// Full fixed-point sum for the nested series, before reduction.
inline QTFraction nested_loc_sum(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("nested_loc: need n >= 1, m >= 1");
    QTFraction acc = QTFraction::zero();
    for (const NestedPair& pair : nested_pairs(n))
        acc = frac_add(acc, detail::localization_term(pair.mu, m, nested_denominator(pair)));
    return acc;
}

/// C_n^(m)(q,t): the equivariant Euler characteristic over Hil^n. The value
/// is a polynomial by theorem, so a residual denominator is an error here.
inline LaurentPoly catalan_loc(int n, int m) {
    return to_polynomial_or_throw(catalan_loc_sum(n, m), "catalan_loc");
}

/// Nested series over Hil^{n,n-1}. Polynomiality is conjectural: a residual
/// denominator is reported to the caller, never thrown.
inline PolyOrResidual nested_loc(int n, int m) {
    return to_polynomial(nested_loc_sum(n, m));
}

/// Convenience for contexts where polynomiality has already been verified.
inline LaurentPoly nested_loc_poly(int n, int m) {
    return to_polynomial_or_throw(nested_loc_sum(n, m), "nested_loc");
}

} // namespace qtcat
