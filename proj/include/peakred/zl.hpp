#ifndef PEAKRED_ZL_HPP
#define PEAKRED_ZL_HPP

// Screening for polynomials that could be taken to x^k - y^l, and the
// decision from a known polynomial parametrization of the zero fiber.

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "peakred/canon.hpp"
#include "peakred/pairs.hpp"

namespace peakred {

/// A coprime (k, l) with the variable carrying k: x^k - y^l when k_on == X.
struct ZLCandidate {
    int k = 1;
    int l = 1;
    Side k_on = Side::X;
    friend bool operator==(const ZLCandidate&, const ZLCandidate&) = default;
};

struct RuledOut {
    std::string reason;  // shape, coprime, max-bound, divisibility, degenerate-branch
    std::string detail;
};
struct Candidates {
    std::vector<ZLCandidate> pairs;
    bool contains(int k, int l) const {
        for (const auto& c : pairs)
            if (c.k == k && c.l == l) return true;
        return false;
    }
};
/// The weighted leading part equals scale * base^exponent.
struct DegenerateBranch {
    BiPoly base;
    int exponent = 2;
    Rational scale = 1;
};
using ZLScreenResult = std::variant<RuledOut, Candidates, DegenerateBranch>;

/// x = u(t), y = v(t).
struct Parametrization {
    UniPoly u;
    UniPoly v;
};

/// p(u(t), v(t)) is not identically zero.
class FiberError : public std::invalid_argument {
public:
    explicit FiberError(UniPoly residual)
        : std::invalid_argument("parametrization is not on the fiber: p(u, v) = " + residual.str()),
          residual_(std::move(residual)) {}
    const UniPoly& residual() const { return residual_; }

private:
    UniPoly residual_;
};

namespace detail {

/// Monic e-th root of a monic f by the power-series recurrence on the
/// reversed polynomial, verified by expansion.
inline std::optional<UniPoly> monic_root(const UniPoly& f, int e) {
    int n = f.deg();
    if (n < 0 || n % e != 0 || f.leading() != 1) return std::nullopt;
    int r = n / e;
    // F(s) = s^n f(1/s) = 1 + F_1 s + ...; P = F^(1/e).
    auto F = [&](int j) { return f.coeff(n - j); };
    Rational alpha = make_rational(1, e);
    std::vector<Rational> P{Rational(1)};
    for (int k = 1; k <= r; ++k) {
        Rational acc = 0;
        for (int j = 1; j <= k; ++j) acc += (alpha * j - k + j) * F(j) * P[static_cast<std::size_t>(k - j)];
        P.push_back(acc / k);
    }
    std::vector<Rational> h(static_cast<std::size_t>(r) + 1);
    for (int i = 0; i <= r; ++i) h[static_cast<std::size_t>(r - i)] = P[static_cast<std::size_t>(i)];
    UniPoly root(std::move(h));
    if (root.pow(static_cast<unsigned>(e)) != f) return std::nullopt;
    return root;
}

/// Writes the weighted-homogeneous L (weights wx, wy; x^n and y^m present)
/// as scale * g^e for some e >= 2, trying the smallest e first.
inline std::optional<DegenerateBranch> proper_power(const BiPoly& L, int n, int m) {
    int g0 = std::gcd(n, m);
    int wx = m / g0, wy = n / g0;
    int D = n * wx;
    std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
    for (const auto& [mo, a] : L.terms()) c[static_cast<std::size_t>(mo.i)] = a;
    UniPoly f(std::move(c));  // L(x, 1)
    Rational lead = f.leading();
    UniPoly fm = f.monic();
    for (int e = 2; e <= g0; ++e) {
        if (g0 % e != 0) continue;
        auto h = monic_root(fm, e);
        if (!h) continue;
        BiPoly base;
        bool ok = true;
        for (int i = 0; i <= h->deg() && ok; ++i) {
            if (sgn(h->coeff(i)) == 0) continue;
            int rest = D / e - i * wx;
            if (rest < 0 || rest % wy != 0) ok = false;
            else base.add_term(Monomial{i, rest / wy}, h->coeff(i));
        }
        if (!ok) continue;
        if (lead * base.pow(static_cast<unsigned>(e)) != L) continue;
        return DegenerateBranch{base, e, lead};
    }
    return std::nullopt;
}

}  // namespace detail

inline ZLScreenResult zl_screen(const BiPoly& p) {
    if (p.is_constant()) throw std::invalid_argument("zl_screen: constant polynomial");
    auto nd = newton_shape(p);
    if (!nd) return RuledOut{"shape", "the Newton polygon is not a triangle or segment on the axes"};
    int d = p.deg();
    int n = nd->n, m = nd->m;
    if (n % m != 0 && m % n != 0) {
        ZLCandidate c = n >= m ? ZLCandidate{n, m, Side::X} : ZLCandidate{m, n, Side::Y};
        if (std::gcd(c.k, c.l) != 1)
            return RuledOut{"coprime", "(" + std::to_string(c.k) + ", " + std::to_string(c.l) + ") not coprime"};
        if (c.k > d) return RuledOut{"max-bound", std::to_string(c.k) + " > deg p = " + std::to_string(d)};
        if (d % c.k != 0 && d % c.l != 0)
            return RuledOut{"divisibility", "neither exponent divides deg p = " + std::to_string(d)};
        return Candidates{{c}};
    }
    // Divisible exponents: p must be a coordinate or have a proper-power
    // leading part.
    if (d == 1 || std::holds_alternative<CoordYes>(is_coordinate(p))) return Candidates{{ZLCandidate{1, 1, Side::X}}};
    BiPoly L;
    for (const auto& [mo, a] : p.terms())
        if (mo.i * m + mo.j * n == m * n) L.add_term(mo, a);
    if (auto pp = detail::proper_power(L, n, m)) return *pp;
    return RuledOut{"degenerate-branch", "leading part " + L.str() + " is not a proper power"};
}

struct EquivalentToStandard {
    int k = 1;
    int l = 1;
};
struct ZLUnknown {
    std::string reason;
};
using ZLDecision = std::variant<EquivalentToStandard, ZLUnknown>;

namespace detail {

/// Strips constants and a parameter shift; returns (deg u, deg v) when the
/// pair is then (c t^a, d t^b) with possibly one side zero.
inline std::optional<std::pair<int, int>> monomial_degrees(PolyPair q) {
    q.u = q.u - UniPoly::constant(q.u.coeff(0));
    q.v = q.v - UniPoly::constant(q.v.coeff(0));
    const UniPoly& s = q.u.deg() >= q.v.deg() ? q.u : q.v;
    if (s.deg() < 1) return std::nullopt;
    // c (t + b)^a has t^(a-1) coefficient c a b.
    Rational beta = s.coeff(s.deg() - 1) / (s.leading() * s.deg());
    q = reparametrize(q, 1, -beta);
    q.u = q.u - UniPoly::constant(q.u.coeff(0));
    q.v = q.v - UniPoly::constant(q.v.coeff(0));
    auto mono = [](const UniPoly& f) {
        for (int i = 0; i < f.deg(); ++i)
            if (sgn(f.coeff(i)) != 0) return false;
        return true;
    };
    if (!mono(q.u) || !mono(q.v)) return std::nullopt;
    return std::pair{q.u.deg(), q.v.deg()};
}

}  // namespace detail

/// Trusts the classification of curves with a polynomial parametrization: a monomial minimal pair
/// certifies the standard form; anything else stays Unknown.
inline ZLDecision zl_decide(const BiPoly& p, const Parametrization& par) {
    UniPoly residual = p.on_curve(par.u, par.v);
    if (!residual.is_zero()) throw FiberError(residual);
    if (par.u.is_constant() && par.v.is_constant()) return ZLUnknown{"parametrization is constant"};
    auto r = reduce_pair(PolyPair{par.u, par.v});
    auto degs = detail::monomial_degrees(r.minimal);
    if (!degs) return ZLUnknown{"minimal pair " + r.minimal.str() + " is not monomial"};
    auto [a, b] = *degs;
    // x = t^a, y = t^b lies on x^b = y^a. The swap does not change the
    // class, so the larger exponent is attached to y when the input's x
    // parametrization has the larger degree, as for (t^3, t^2) -> (2, 3).
    EquivalentToStandard out{1, 1};
    if (a > 0 && b > 0) {
        if (std::gcd(a, b) != 1) return ZLUnknown{"minimal pair degrees are not coprime"};
        auto [lo, hi] = std::minmax(a, b);
        out = par.u.deg() >= par.v.deg() ? EquivalentToStandard{lo, hi} : EquivalentToStandard{hi, lo};
    } else if (std::max(a, b) != 1) {
        return ZLUnknown{"minimal pair " + r.minimal.str() + " does not parametrize its image injectively"};
    }
    int d = p.deg();
    if (std::max(out.k, out.l) > d || (d % out.k != 0 && d % out.l != 0))
        return ZLUnknown{"p is not the irreducible equation of the parametrized curve"};
    return out;
}

}  // namespace peakred

#endif
