#include "qtcat/localization.hpp"

#include "qtcat/dyck.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

using namespace qtcat;

namespace {
Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

LaurentPoly from_pairs(std::initializer_list<std::pair<long long, long long>> tq) {
    LaurentPoly p;
    for (auto [t, q] : tq) p.add_term({t, q}, 1);
    return p;
}
} // namespace

TEST_CASE("B_mu") {
    REQUIRE(B_mu(P({1})) == LaurentPoly::constant(1));
    REQUIRE(B_mu(P({2, 1})) == from_pairs({{0, 0}, {0, 1}, {1, 0}}));
    SECTION("B_mu(1,1) = n") {
        for (int n = 1; n <= 8; ++n)
            for (const auto& mu : enumerate_partitions(n))
                REQUIRE(poly_eval(B_mu(mu), 1, 1) == Rat(n));
    }
}

TEST_CASE("Pi_mu_cells") {
    REQUIRE(Pi_mu_cells(P({1})).empty());
    REQUIRE(Pi_mu_cells(P({2})) == FactorMultiset{{BinomialFactor{0, 1}, 1}});
    REQUIRE(Pi_mu_cells(P({2, 1})) ==
            FactorMultiset{{BinomialFactor{0, 1}, 1}, {BinomialFactor{1, 0}, 1}});
}

TEST_CASE("hilb_cotangent_factors") {
    SECTION("single cell: (1-t)(1-q)") {
        FactorProduct fp = hilb_cotangent_factors(P({1}));
        REQUIRE(fp.sign == 1);
        REQUIRE(fp.unit == Exp2{0, 0});
        REQUIRE(fp.factors ==
                FactorMultiset{{BinomialFactor{1, 0}, 1}, {BinomialFactor{0, 1}, 1}});
    }
    SECTION("row of two cells") {
        FactorProduct fp = hilb_cotangent_factors(P({2}));
        REQUIRE(fp.sign == 1);
        REQUIRE(fp.unit == Exp2{0, 0});
        REQUIRE(fp.factors == FactorMultiset{{BinomialFactor{1, -1}, 1},
                                             {BinomialFactor{0, 2}, 1},
                                             {BinomialFactor{1, 0}, 1},
                                             {BinomialFactor{0, 1}, 1}});
    }
    SECTION("two factors per cell") {
        for (int n = 1; n <= 8; ++n)
            for (const auto& mu : enumerate_partitions(n)) {
                FactorProduct fp = hilb_cotangent_factors(mu);
                long long total = 0;
                for (const auto& [f, mult] : fp.factors) total += mult;
                REQUIRE(total == 2 * n);
            }
    }
}

TEST_CASE("nested_weight_classes") {
    SECTION("mu=(1): only the corner classes") {
        NestedWeightClasses w = nested_weight_classes({P({1}), Cell{0, 0}});
        REQUIRE(w.a3 == WeightMultiset{{Exp2{0, -1}, 1}});
        REQUIRE(w.a4 == WeightMultiset{{Exp2{-1, 0}, 1}});
        REQUIRE(w.a1.empty());
        REQUIRE(w.a2.empty());
        REQUIRE(w.a5.empty());
        REQUIRE(w.a6.empty());
        REQUIRE(w.a7.empty());
        REQUIRE(w.a8.empty());
    }
    SECTION("mu=(2), zeta=(0,1)") {
        NestedWeightClasses w = nested_weight_classes({P({2}), Cell{0, 1}});
        REQUIRE(w.a1 == WeightMultiset{{Exp2{-1, 1}, 1}}); // t^-1 q, cell (0,0) in mu
        REQUIRE(w.a5 == WeightMultiset{{Exp2{0, -1}, 1}}); // q^-1, cell (0,0) in nu
        REQUIRE(w.a2.empty());
        REQUIRE(w.a6.empty());
        REQUIRE(w.a7.empty());
        REQUIRE(w.a8.empty());
    }
    SECTION("class sizes and the 2n total") {
        for (int n = 1; n <= 8; ++n)
            for (const NestedPair& pair : nested_pairs(n)) {
                NestedWeightClasses w = nested_weight_classes(pair);
                auto size = [](const WeightMultiset& ws) {
                    long long s = 0;
                    for (const auto& [e, m] : ws) s += m;
                    return s;
                };
                long long nrow = static_cast<long long>(row_cells(pair.mu, pair.corner).size());
                long long ncol = static_cast<long long>(col_cells(pair.mu, pair.corner).size());
                REQUIRE(size(w.a1) == nrow);
                REQUIRE(size(w.a5) == nrow);
                REQUIRE(size(w.a2) == ncol);
                REQUIRE(size(w.a6) == ncol);
                REQUIRE(size(w.a3) == 1);
                REQUIRE(size(w.a4) == 1);
                REQUIRE(size(w.a7) == n - 1 - nrow - ncol);
                REQUIRE(size(w.a8) == n - 1 - nrow - ncol);
                long long total = size(w.a1) + size(w.a2) + size(w.a3) + size(w.a4) + size(w.a5) +
                                  size(w.a6) + size(w.a7) + size(w.a8);
                REQUIRE(total == 2 * n);
            }
    }
}

TEST_CASE("nested_denominator") {
    SECTION("mu=(1): (1-t)(1-q)") {
        FactorProduct fp = nested_denominator({P({1}), Cell{0, 0}});
        REQUIRE(fp.sign == 1);
        REQUIRE(fp.unit == Exp2{0, 0});
        REQUIRE(fp.factors ==
                FactorMultiset{{BinomialFactor{1, 0}, 1}, {BinomialFactor{0, 1}, 1}});
    }
    SECTION("mu=(2), zeta=(0,1): (1-t)(1-q)(1-tq^-1)(1-q)") {
        FactorProduct fp = nested_denominator({P({2}), Cell{0, 1}});
        REQUIRE(fp.sign == 1);
        REQUIRE(fp.unit == Exp2{0, 0});
        REQUIRE(fp.factors == FactorMultiset{{BinomialFactor{1, 0}, 1},
                                             {BinomialFactor{0, 1}, 2},
                                             {BinomialFactor{1, -1}, 1}});
    }
    SECTION("the closed-form and weight-class builds agree for all pairs up to n=7") {
        for (int n = 1; n <= 7; ++n)
            for (const NestedPair& pair : nested_pairs(n))
                REQUIRE_NOTHROW(nested_denominator(pair));
    }
}

TEST_CASE("fiber_series") {
    SECTION("mu=(1): (1-t)(1-q) for any twist") {
        LaurentPoly expect = expand(FactorMultiset{{BinomialFactor{1, 0}, 1},
                                                   {BinomialFactor{0, 1}, 1}});
        REQUIRE(fiber_series(P({1}), 1) == expect);
        REQUIRE(fiber_series(P({1}), 3) == expect);
    }
    SECTION("mu=(2), m=1: q(1+q)(1-t)(1-q)^2") {
        LaurentPoly expect = LaurentPoly::monomial(0, 1);
        expect = expect * (one_poly() + LaurentPoly::monomial(0, 1));
        expect = expect * expand(BinomialFactor{1, 0});
        expect = expect * expand(BinomialFactor{0, 1});
        expect = expect * expand(BinomialFactor{0, 1});
        REQUIRE(fiber_series(P({2}), 1) == expect);
    }
    SECTION("vanishes at q = t = 1") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& mu : enumerate_partitions(n)) {
                REQUIRE(poly_eval(fiber_series(mu, 1), 1, 1) == 0);
                REQUIRE(poly_eval(fiber_series(mu, 2), 1, 1) == 0);
            }
    }
}

TEST_CASE("catalan_loc") {
    SECTION("single fixed point at n=1") {
        REQUIRE(catalan_loc(1, 1) == LaurentPoly::constant(1));
        REQUIRE(catalan_loc(1, 4) == LaurentPoly::constant(1));
    }
    SECTION("n=2: q + t") {
        REQUIRE(catalan_loc(2, 1) == from_pairs({{1, 0}, {0, 1}}));
    }
    SECTION("matches the combinatorial series for n <= 8") {
        for (int n = 1; n <= 8; ++n) REQUIRE(catalan_loc(n, 1) == comb_catalan(n));
    }
    SECTION("m=2 at n=2 is the complete homogeneous slice q^2 + qt + t^2") {
        REQUIRE(catalan_loc(2, 2) == from_pairs({{2, 0}, {1, 1}, {0, 2}}));
    }
    SECTION("q<->t symmetric for n <= 7, m <= 3") {
        for (int n = 1; n <= 7; ++n)
            for (int m = 1; m <= 3; ++m) REQUIRE(is_qt_symmetric(catalan_loc(n, m)));
    }
}

TEST_CASE("nested_loc") {
    SECTION("n=2, m=1 reproduces the worked example") {
        REQUIRE(nested_loc_poly(2, 1) ==
                from_pairs({{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}}));
    }
    SECTION("n=3, m=1 is the printed 16-term series") {
        LaurentPoly expect;
        auto add = [&](long long t, long long q, int c) { expect.add_term({t, q}, c); };
        add(0, 3, 1); add(0, 4, 1); add(0, 5, 1); add(1, 1, 1); add(1, 2, 2); add(1, 3, 2);
        add(1, 4, 1); add(2, 1, 2); add(2, 2, 2); add(2, 3, 1); add(3, 0, 1); add(3, 1, 2);
        add(3, 2, 1); add(4, 0, 1); add(4, 1, 1); add(5, 0, 1);
        REQUIRE(nested_loc_poly(3, 1) == expect);
        REQUIRE(poly_eval(expect, 1, 1) == 21);
    }
    SECTION("n=2, m=2 equals the hand-computed two-term sum") {
        REQUIRE(nested_loc_poly(2, 2) ==
                from_pairs({{2, 0}, {1, 1}, {0, 2}, {3, 0}, {2, 1}, {1, 2}, {0, 3}}));
    }
    SECTION("n=1 is the single-pair unit") {
        REQUIRE(nested_loc_poly(1, 1) == LaurentPoly::constant(1));
    }
    SECTION("polynomial with nonnegative coefficients and q<->t symmetric (small range)") {
        for (int n = 1; n <= 4; ++n)
            for (int m = 1; m <= 2; ++m) {
                PolyOrResidual r = nested_loc(n, m);
                REQUIRE(std::holds_alternative<LaurentPoly>(r));
                const auto& p = std::get<LaurentPoly>(r);
                REQUIRE(p.all_coeffs_nonnegative());
                REQUIRE(is_qt_symmetric(p));
            }
    }
    SECTION("specialization (n/2) Catalan(n+1)") {
        for (int n = 1; n <= 5; ++n)
            REQUIRE(poly_eval(nested_loc_poly(n, 1), 1, 1) ==
                    Rat(n) * Rat(oracle::catalan(n + 1)) / 2);
    }
}

TEST_CASE("per-term numerator matches fiber_series") {
    // the factored fast path must expand to exactly the published numerator
    for (int n = 1; n <= 5; ++n)
        for (const auto& mu : enumerate_partitions(n))
            for (int m = 1; m <= 2; ++m) {
                FactorProduct den = hilb_cotangent_factors(mu);
                QTFraction term = detail::localization_term(mu, m, den);
                // term * denominator == fiber_series as values
                QTFraction denom_frac;
                denom_frac.sign = den.sign;
                denom_frac.unit = den.unit;
                denom_frac.num = expand(den.factors);
                frac_normalize(denom_frac);
                QTFraction product = frac_mul(term, denom_frac);
                REQUIRE(frac_equal(product, frac_from_poly(fiber_series(mu, m))));
            }
}

TEST_CASE("fixed-point sums agree with direct rational evaluation") {
    std::mt19937 rng(kRandomSeed);
    for (int trial = 0; trial < 3; ++trial) {
        auto [q0, t0] = safe_point(rng);
        for (int n = 1; n <= 4; ++n) {
            REQUIRE(frac_eval(catalan_loc_sum(n, 1), q0, t0) ==
                    oracle::eval_catalan_sum(n, 1, t0, q0));
            REQUIRE(frac_eval(nested_loc_sum(n, 1), q0, t0) ==
                    oracle::eval_nested_sum(n, 1, t0, q0));
        }
    }
}

TEST_CASE("summation order does not change the canonical reduced form") {
    std::mt19937 rng(kRandomSeed);
    std::vector<QTFraction> terms;
    for (const NestedPair& pair : nested_pairs(4))
        terms.push_back(detail::localization_term(pair.mu, 1, nested_denominator(pair)));
    LaurentPoly base = nested_loc_poly(4, 1);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(terms.begin(), terms.end(), rng);
        QTFraction acc = QTFraction::zero();
        for (const auto& f : terms) acc = frac_add(acc, f);
        REQUIRE(to_polynomial_or_throw(acc, "shuffled nested sum") == base);
    }
}
