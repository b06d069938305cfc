#ifndef PEAKRED_TESTS_SHEAR_ORACLE_HPP
#define PEAKRED_TESTS_SHEAR_ORACLE_HPP

// Brute force over linear changes with small integer entries, monomial shears
// and lambda of bounded height. Deliberately shares nothing with the
// cancellation-system solver beyond polynomial arithmetic.

#include <numeric>
#include <random>
#include <vector>

#include "peakred/automorph.hpp"

namespace peakred::testing {

inline const std::vector<Rational>& lambda_grid() {
    static const std::vector<Rational> grid = [] {
        std::vector<Rational> g;
        for (int den = 1; den <= 20; ++den)
            for (int num = 1; num <= 20; ++num)
                if (std::gcd(num, den) == 1) {
                    g.push_back(make_rational(num, den));
                    g.push_back(make_rational(-num, den));
                }
        return g;
    }();
    return grid;
}

/// True when some (L, shear) with L entries in [-3, 3], k <= 5 and lambda of
/// height <= 20 lowers deg p.
inline bool brute_force_reduces(const BiPoly& p) {
    int d = p.deg();
    if (d < 2) return false;
    BiPoly f = degree_form(p);
    for (int a1 = -3; a1 <= 3; ++a1)
        for (int a2 = -3; a2 <= 3; ++a2)
            for (int b1 = -3; b1 <= 3; ++b1)
                for (int b2 = -3; b2 <= 3; ++b2) {
                    if (a1 * b2 - a2 * b1 == 0) continue;
                    Auto l{BiPoly::monomial(a1, 1, 0) + BiPoly::monomial(a2, 0, 1), BiPoly::monomial(b1, 1, 0) + BiPoly::monomial(b2, 0, 1)};
                    BiPoly fl = apply(l, f);
                    // A shear of x can only lower the degree when the form is
                    // free of x, and symmetrically for y.
                    for (int side = 0; side < 2; ++side) {
                        if ((side == 0 ? fl.deg_x() : fl.deg_y()) != 0) continue;
                        BiPoly q = apply(l, p);
                        for (int k = 2; k <= 5; ++k) {
                            // Coefficient of the top pure power after the shear:
                            // sum over terms on the line k*i + j = d of q_ij lambda^i.
                            std::vector<std::pair<int, Rational>> line;
                            for (const auto& [m, c] : q.terms()) {
                                int i = side == 0 ? m.i : m.j, j = side == 0 ? m.j : m.i;
                                if (k * i + j == d) line.emplace_back(i, c);
                            }
                            for (const auto& lam : lambda_grid()) {
                                Rational top = 0;
                                for (const auto& [i, c] : line) top += c * pow(lam, static_cast<unsigned>(i));
                                if (sgn(top) != 0) continue;
                                BiPoly term = lam * (side == 0 ? BiPoly::y() : BiPoly::x()).pow(static_cast<unsigned>(k));
                                Auto s = side == 0 ? Auto{BiPoly::x() + term, BiPoly::y()} : Auto{BiPoly::x(), BiPoly::y() + term};
                                if (apply(s, q).deg() < d) return true;
                            }
                        }
                    }
                }
    return false;
}

/// Polynomials of degree 2..5 with coefficients in [-2, 2] and at most four
/// terms. Odd draws are uniform supports; even draws start from a pure-power
/// degree form so that reductions actually occur.
inline BiPoly sample_shear_poly(std::mt19937_64& rng, bool structured) {
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto coef = [&] {
        int c = uni(1, 2);
        return Rational(uni(0, 1) ? c : -c);
    };
    for (;;) {
        BiPoly p;
        int d = uni(2, 5);
        int terms = uni(2, 4);
        if (structured) {
            switch (uni(0, 2)) {
                case 0: p = BiPoly::monomial(coef(), d, 0); break;
                case 1: p = BiPoly::monomial(coef(), 0, d); break;
                default:
                    d = 2;
                    p = (BiPoly::x() + Rational(uni(0, 1) ? 1 : -1) * BiPoly::y()).pow(2);
                    if (uni(0, 1)) p = -p;
                    terms = std::min(terms, 3) + 1;
            }
            for (int t = static_cast<int>(p.size()); t < terms; ++t) {
                int tot = uni(1, d - 1);
                int i = uni(0, tot);
                p.add_term(Monomial{i, tot - i}, coef());
            }
        } else {
            for (int t = 0; t < terms; ++t) {
                int tot = uni(0, d);
                int i = uni(0, tot);
                p.add_term(Monomial{i, tot - i}, coef());
            }
        }
        bool small = true;
        for (const auto& [m, c] : p.terms()) small = small && abs(c) <= 2;
        if (p.deg() >= 2 && p.size() <= 4 && small) return p;
    }
}

}  // namespace peakred::testing

#endif
