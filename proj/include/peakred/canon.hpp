#ifndef PEAKRED_CANON_HPP
#define PEAKRED_CANON_HPP

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "automorph.hpp"
#include "bipoly.hpp"
#include "linalg.hpp"

namespace peakred {

// ---------------------------------------------------------------------------
// Single-shear reduction

/// A linear change followed by a monomial shear. Orientation X shears
/// x -> x + lambda y^k; orientation Y shears y -> y + lambda x^k.
struct ShearStep {
    Linear pre_linear;
    Side orientation = Side::X;
    int k = 2;
    Rational lambda;

    Generator shear() const {
        if (orientation == Side::X) return TriangularX{UniPoly::monomial(lambda, k), 1};
        return TriangularY{UniPoly::monomial(lambda, k), 1};
    }
    AutoWord word() const {
        AutoWord w;
        if (!(pre_linear == Linear{})) w.factors.emplace_back(pre_linear);
        w.factors.push_back(shear());
        return w;
    }
    friend bool operator==(const ShearStep&, const ShearStep&) = default;
};

struct ShearNone {};
struct ShearNeedsExtension {
    UniPoly minimal_poly;
};
using ShearSearch = std::variant<ShearStep, ShearNone, ShearNeedsExtension>;

namespace detail {

inline BiPoly swap_xy(const BiPoly& p) {
    BiPoly out;
    for (const auto& [m, c] : p.terms()) out.add_term(Monomial{m.j, m.i}, c);
    return out;
}

/// Coefficient of the top pure y power in q(x + lambda y^k, y): the terms on
/// the highest line k i + j = const. Every valid lambda is a root of it.
inline UniPoly x_shear_top_line(const BiPoly& q, int k) {
    int top = -1;
    for (const auto& [m, c] : q.terms()) top = std::max(top, k * m.i + m.j);
    std::vector<Rational> coeffs;
    for (const auto& [m, c] : q.terms()) {
        if (k * m.i + m.j != top) continue;
        if (static_cast<int>(coeffs.size()) <= m.i) coeffs.resize(static_cast<std::size_t>(m.i) + 1);
        coeffs[static_cast<std::size_t>(m.i)] += c;
    }
    return UniPoly(std::move(coeffs));
}

/// Accumulates the coefficients of every monomial of total degree >= d in
/// q(x + lambda y^k, y), with lambda^s supplied by `power` in some ring R.
template <class R, class Power>
std::map<Monomial, R, GradedLex> x_shear_system(const BiPoly& q, int d, int k, Power power) {
    std::map<Monomial, R, GradedLex> acc;
    for (const auto& [m, c] : q.terms()) {
        int need = d - m.total();
        int s_min = need <= 0 ? 0 : (need + k - 2) / (k - 1);
        for (int s = s_min; s <= m.i; ++s) {
            Rational coef = c * Rational(binomial(m.i, s));
            acc[Monomial{m.i - s, m.j + k * s}] += coef * power(s);
        }
    }
    return acc;
}

/// True when the shear with this lambda leaves no term of degree >= d.
inline bool x_shear_reduces(const BiPoly& q, int d, int k, const Rational& lambda) {
    std::vector<Rational> pw{Rational(1)};
    auto power = [&](int s) -> const Rational& {
        while (static_cast<int>(pw.size()) <= s) pw.push_back(pw.back() * lambda);
        return pw[static_cast<std::size_t>(s)];
    };
    for (const auto& [m, v] : x_shear_system<Rational>(q, d, k, power))
        if (sgn(v) != 0) return false;
    return true;
}

/// gcd of f with every coefficient of the cancellation system, computed in
/// Q[lambda]/(f) so the work stays proportional to deg f.
inline UniPoly x_shear_gcd_mod(const BiPoly& q, int d, int k, const UniPoly& f) {
    std::vector<UniPoly> pw{UniPoly::constant(1)};
    auto power = [&](int s) -> const UniPoly& {
        while (static_cast<int>(pw.size()) <= s) pw.push_back((pw.back() * UniPoly::t()).divmod(f).second);
        return pw[static_cast<std::size_t>(s)];
    };
    UniPoly g = f;
    for (const auto& [m, v] : x_shear_system<UniPoly>(q, d, k, power)) {
        g = gcd(g, v.divmod(g).second);
        if (g.is_constant()) break;
    }
    return g;
}

}  // namespace detail

/// Finds a linear change plus monomial shear lowering deg p. The degree form
/// must be a pure power c l^d; the linear change sends l to the axis the
/// shear leaves fixed, and lambda solves the cancellation system exactly.
inline ShearSearch find_reducing_shear(const BiPoly& p) {
    int d = p.deg();
    if (d < 2) return ShearNone{};
    auto lp = linear_power_root(degree_form(p));
    if (!lp) return ShearNone{};

    Linear pre;
    Side side = Side::X;
    Rational beta = lp->form.coeff(0, 1);
    if (lp->form == BiPoly::x()) {
        side = Side::Y;
    } else if (lp->form != BiPoly::y()) {
        pre = Linear{1, 0, -1 / beta, 1 / beta};
    }
    BiPoly q = apply(to_auto(pre), p);
    if (side == Side::Y) q = detail::swap_xy(q);

    std::optional<ShearStep> best;
    std::optional<UniPoly> irrational;
    for (int k = 2; k <= d; ++k) {
        UniPoly line = detail::x_shear_top_line(q, k);
        if (line.is_constant()) continue;
        auto report = rational_roots(line);
        for (const auto& r : report.roots) {
            if (sgn(r) == 0 || (best && height(r) >= height(best->lambda))) continue;
            if (detail::x_shear_reduces(q, d, k, r)) best = ShearStep{pre, side, k, r};
        }
        if (best || irrational) continue;
        for (const auto& f : report.residual) {
            UniPoly g = detail::x_shear_gcd_mod(q, d, k, f);
            if (!g.is_constant()) {
                irrational = g.monic();
                break;
            }
        }
    }
    if (best) return *best;
    if (irrational) return ShearNeedsExtension{*irrational};
    return ShearNone{};
}

inline BiPoly apply(const ShearStep& s, const BiPoly& p) { return apply(s.word(), p); }

// ---------------------------------------------------------------------------
// Canonical models

struct ReductionTrace {
    std::vector<ShearStep> steps;
    std::vector<Degree> degrees;  // degree of the input, then after each step

    /// The automorphism carrying the input to the current polynomial.
    AutoWord word() const {
        AutoWord w;
        for (const auto& s : steps)
            for (auto& g : s.word().factors) w.factors.push_back(std::move(g));
        return w;
    }
};

struct Model {
    BiPoly canonical;
    ReductionTrace trace;
};
struct NeedsExtension {
    BiPoly at;  // the polynomial where only irrational cancellations remain
    UniPoly minimal_poly;
    ReductionTrace trace;
};
using CanonOutcome = std::variant<Model, NeedsExtension>;

inline CanonOutcome canonical_model(const BiPoly& p) {
    ReductionTrace trace;
    BiPoly cur = p;
    trace.degrees.push_back(cur.degree());
    for (;;) {
        ShearSearch r = find_reducing_shear(cur);
        if (auto* step = std::get_if<ShearStep>(&r)) {
            cur = apply(*step, cur);
            trace.steps.push_back(*step);
            trace.degrees.push_back(cur.degree());
            continue;
        }
        if (auto* ext = std::get_if<ShearNeedsExtension>(&r)) return NeedsExtension{cur, ext->minimal_poly, trace};
        return Model{cur, trace};
    }
}

/// The polynomial the outcome stopped at, model or not.
inline const BiPoly& reached(const CanonOutcome& o) {
    if (auto* m = std::get_if<Model>(&o)) return m->canonical;
    return std::get<NeedsExtension>(o).at;
}
inline const ReductionTrace& trace_of(const CanonOutcome& o) {
    if (auto* m = std::get_if<Model>(&o)) return m->trace;
    return std::get<NeedsExtension>(o).trace;
}

struct CoordYes {
    AutoWord witness;  // apply(witness, x) == p
};
struct CoordNo {
    std::string reason;
};
struct CoordUnknown {
    std::string reason;
};
using CoordVerdict = std::variant<CoordYes, CoordNo, CoordUnknown>;

namespace detail {

/// An affine automorphism whose x-image is the nonconstant linear polynomial l.
inline Auto affine_with_x_image(const BiPoly& l) {
    if (sgn(l.coeff(1, 0)) != 0) return Auto{l, BiPoly::y()};
    return Auto{l, BiPoly::x()};
}

inline AutoWord concat(std::initializer_list<const AutoWord*> parts) {
    AutoWord w;
    for (const auto* p : parts) w.factors.insert(w.factors.end(), p->factors.begin(), p->factors.end());
    return w;
}

}  // namespace detail

inline CoordVerdict is_coordinate(const BiPoly& p) {
    if (p.is_constant()) return CoordNo{"constant polynomial"};
    CanonOutcome o = canonical_model(p);
    if (auto* ext = std::get_if<NeedsExtension>(&o))
        return CoordUnknown{"reduction needs a root of " + ext->minimal_poly.str()};
    const auto& m = std::get<Model>(o);
    if (m.canonical.deg() != 1)
        return CoordNo{"canonical model has degree " + std::to_string(m.canonical.deg())};
    // apply(W, p) = l = apply(A, x), so p = apply(A then W^-1, x).
    AutoWord a{affine_word(detail::affine_with_x_image(m.canonical))};
    AutoWord inv = m.trace.word().inverse();
    return CoordYes{detail::concat({&a, &inv})};
}

// ---------------------------------------------------------------------------
// Newton support and the two-power non-equivalence criterion

/// p = a x^n + b y^m + mixed terms inside the triangle i m + j n <= m n.
/// `lower` holds the remaining axis terms and the constant, which the
/// triangle also contains.
struct NewtonData {
    int n = 0;
    int m = 0;
    Rational a;
    Rational b;
    std::map<Monomial, Rational, GradedLex> mixed;
    std::map<Monomial, Rational, GradedLex> lower;

    std::vector<Monomial> support() const {
        std::vector<Monomial> s{{n, 0}, {0, m}};
        for (const auto& [mo, c] : mixed) s.push_back(mo);
        for (const auto& [mo, c] : lower) s.push_back(mo);
        return s;
    }
};

inline std::optional<NewtonData> newton_shape(const BiPoly& p) {
    if (p.is_constant()) throw std::invalid_argument("newton_shape: constant polynomial");
    NewtonData nd;
    for (const auto& [mo, c] : p.terms()) {
        if (mo.j == 0) nd.n = std::max(nd.n, mo.i);
        if (mo.i == 0) nd.m = std::max(nd.m, mo.j);
    }
    if (nd.n == 0 || nd.m == 0) return std::nullopt;
    nd.a = p.coeff(nd.n, 0);
    nd.b = p.coeff(0, nd.m);
    for (const auto& [mo, c] : p.terms()) {
        if (mo.i > 0 && mo.j > 0) {
            if (mo.i * nd.m + mo.j * nd.n > nd.m * nd.n) return std::nullopt;
            nd.mixed.emplace(mo, c);
        } else if (!(mo == Monomial{nd.n, 0}) && !(mo == Monomial{0, nd.m})) {
            nd.lower.emplace(mo, c);
        }
    }
    return nd;
}

struct Thm11Certificate {
    NewtonData p;
    NewtonData q;
};
struct Inapplicable {
    std::string reason;
};
using Thm11Result = std::variant<Thm11Certificate, Inapplicable>;

/// Fires only when both polynomials have exactly the two pure powers plus
/// mixed terms inside the triangle, neither pair of exponents divides the
/// other, and the larger exponents differ.
inline Thm11Result test_nonequiv_thm11(const BiPoly& p, const BiPoly& q) {
    auto strict = [](const BiPoly& f) -> std::optional<NewtonData> {
        if (f.is_constant()) return std::nullopt;
        auto nd = newton_shape(f);
        if (!nd || !nd->lower.empty()) return std::nullopt;
        return nd;
    };
    auto np = strict(p);
    if (!np) return Inapplicable{"p is not of the two-power shape"};
    if (np->m % np->n == 0) return Inapplicable{"n divides m"};
    if (np->n % np->m == 0) return Inapplicable{"m divides n"};
    auto nq = strict(q);
    if (!nq) return Inapplicable{"q is not of the two-power shape"};
    // q = A x^r + B y^s: r is the x exponent, s the y exponent.
    if (nq->n % nq->m == 0) return Inapplicable{"s divides r"};
    if (nq->m % nq->n == 0) return Inapplicable{"r divides s"};
    if (std::max(np->n, np->m) == std::max(nq->n, nq->m)) return Inapplicable{"max degrees equal"};
    return Thm11Certificate{*np, *nq};
}

// ---------------------------------------------------------------------------
// Bounded equivalence search

/// Limits for the degree-preserving search between canonical models.
struct Budget {
    int length = 4;  // generator blocks including the final affine map
    int k = 4;       // largest shear exponent
    int height = 5;  // coefficient height bound

    void validate() const {
        if (length < 1 || k < 2 || height < 1)
            throw std::invalid_argument("budget needs length >= 1, k >= 2, height >= 1");
    }
};

struct EquivWitness {
    Auto phi;  // apply(phi, p) == q
};
struct NotEquivalent {
    std::string rule;  // "thm1.1" or "canon-degree"
    std::optional<Thm11Certificate> thm11;
    int degree_p = 0;
    int degree_q = 0;
};
struct EquivUnknown {
    std::string reason;
};
using EquivVerdict = std::variant<EquivWitness, NotEquivalent, EquivUnknown>;

namespace detail {

/// Rationals of height at most h, simplest first.
inline std::vector<Rational> rational_grid(int h) {
    std::vector<Rational> out{0};
    for (int den = 1; den <= h; ++den)
        for (int num = 1; num <= h; ++num) {
            if (std::gcd(num, den) != 1) continue;
            out.push_back(make_rational(num, den));
            out.push_back(make_rational(-num, den));
        }
    std::stable_sort(out.begin(), out.end(), [](const Rational& a, const Rational& b) { return height(a) < height(b); });
    return out;
}

/// Solves apply(shift(c), pm) = q for the translation c.
inline std::optional<AffineShift> match_translation(const BiPoly& pm, const BiPoly& q) {
    if (pm == q) return AffineShift{};
    int d = pm.deg();
    BiPoly f = degree_form(pm);
    BiPoly fx = f.dx(), fy = f.dy();
    BiPoly rhs = q.homogeneous_part(d - 1) - pm.homogeneous_part(d - 1);
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    for (int i = 0; i <= d - 1; ++i) {
        a.push_back({fx.coeff(i, d - 1 - i), fy.coeff(i, d - 1 - i)});
        b.push_back(rhs.coeff(i, d - 1 - i));
    }
    auto sol = solve_linear(a, b, 2);
    if (!sol) return std::nullopt;
    auto shifted = [&](const Rational& c1, const Rational& c2) {
        return pm.substitute(BiPoly::x() + BiPoly(c1), BiPoly::y() + BiPoly(c2));
    };
    const auto& c0 = sol->particular;
    if (sol->null_basis.empty()) {
        if (shifted(c0[0], c0[1]) == q) return AffineShift{c0[0], c0[1]};
        return std::nullopt;
    }
    // One free direction: pin it by exact evaluation at a few points.
    const auto& w = sol->null_basis.front();
    UniPoly g;
    for (int pt = 0; pt < 3; ++pt) {
        Rational x0 = pt + 2, y0 = 2 * pt - 3;
        UniPoly ux{x0 + c0[0], w[0]}, uy{y0 + c0[1], w[1]};
        UniPoly val = pm.on_curve(ux, uy) - UniPoly::constant(q.at(x0, y0));
        g = gcd(g, val);
    }
    if (g.is_zero()) return std::nullopt;
    if (g.is_constant()) return std::nullopt;
    for (const auto& s : rational_roots(g).roots) {
        Rational c1 = c0[0] + s * w[0], c2 = c0[1] + s * w[1];
        if (shifted(c1, c2) == q) return AffineShift{c1, c2};
    }
    return std::nullopt;
}

/// An affine automorphism A with apply(A, p) == q, searching linear parts
/// with entries of height <= h.
inline std::optional<AutoWord> affine_match(const BiPoly& p, const BiPoly& q, int h) {
    int d = p.deg();
    if (d != q.deg() || p.size() < 1) return p == q ? std::optional<AutoWord>(AutoWord{}) : std::nullopt;
    if (d <= 0) return p == q ? std::optional<AutoWord>(AutoWord{}) : std::nullopt;
    if (d == 1) {
        // x -> p -> q through the two affine maps taking x to each.
        AutoWord to_x = AutoWord{affine_word(affine_with_x_image(p))}.inverse();
        AutoWord to_q{affine_word(affine_with_x_image(q))};
        return concat({&to_x, &to_q});
    }
    BiPoly fp = degree_form(p), fq = degree_form(q);
    Rational qx = fq.coeff(d, 0), qy = fq.coeff(0, d);
    auto grid = rational_grid(h);
    std::vector<std::pair<Rational, Rational>> col1, col2;
    for (const auto& a : grid)
        for (const auto& b : grid) {
            Rational v = fp.at(a, b);
            if (v == qx) col1.emplace_back(a, b);
            if (v == qy) col2.emplace_back(a, b);
        }
    for (const auto& [a1, b1] : col1)
        for (const auto& [a2, b2] : col2) {
            Linear l{a1, a2, b1, b2};
            if (sgn(l.det()) == 0) continue;
            Auto lm = to_auto(l);
            if (apply(lm, fp) != fq) continue;
            BiPoly pm = apply(lm, p);
            auto t = match_translation(pm, q);
            if (!t) continue;
            AutoWord w;
            if (!(l == Linear{})) w.factors.emplace_back(l);
            if (sgn(t->c1) != 0 || sgn(t->c2) != 0) w.factors.emplace_back(*t);
            return w;
        }
    return std::nullopt;
}

/// Degree-preserving blocks for p: a small linear map that makes the degree
/// form a pure power of the fixed axis, then a monomial shear.
inline std::vector<std::pair<AutoWord, BiPoly>> plateau_blocks(const BiPoly& p, const Budget& b) {
    std::vector<std::pair<AutoWord, BiPoly>> out;
    int d = p.deg();
    BiPoly f = degree_form(p);
    for (int a1 = -1; a1 <= 1; ++a1)
        for (int a2 = -1; a2 <= 1; ++a2)
            for (int b1 = -1; b1 <= 1; ++b1)
                for (int b2 = -1; b2 <= 1; ++b2) {
                    Linear l{a1, a2, b1, b2};
                    if (sgn(l.det()) == 0) continue;
                    BiPoly fl = apply(to_auto(l), f);
                    bool x_free = fl.deg_x() == 0, y_free = fl.deg_y() == 0;
                    if (!x_free && !y_free) continue;
                    BiPoly pl = apply(to_auto(l), p);
                    for (int k = 2; k <= b.k; ++k)
                        for (int c = -b.height; c <= b.height; ++c) {
                            if (c == 0) continue;
                            for (Side side : {Side::X, Side::Y}) {
                                if ((side == Side::X && !x_free) || (side == Side::Y && !y_free)) continue;
                                ShearStep s{l, side, k, c};
                                BiPoly img = apply(to_auto(s.shear()), pl);
                                if (img.deg() == d) out.emplace_back(s.word(), std::move(img));
                            }
                        }
                }
    return out;
}

inline std::string key(const BiPoly& p) { return p.str(); }

/// Breadth-first search for a word psi with apply(psi, p) == q.
inline std::optional<AutoWord> plateau_search(const BiPoly& p, const BiPoly& q, const Budget& b) {
    struct Node {
        BiPoly poly;
        AutoWord word;
    };
    std::vector<Node> frontier{{p, {}}};
    std::set<std::string> seen{key(p)};
    for (int depth = 0; depth < b.length; ++depth) {
        for (const auto& n : frontier)
            if (auto a = affine_match(n.poly, q, b.height)) return concat({&n.word, &*a});
        if (depth + 1 == b.length) break;
        std::vector<Node> next;
        for (const auto& n : frontier)
            for (auto& [w, img] : plateau_blocks(n.poly, b)) {
                if (!seen.insert(key(img)).second) continue;
                next.push_back({img, concat({&n.word, &w})});
            }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    return std::nullopt;
}

}  // namespace detail

/// Decides p ~ q where the inputs fall under a certificate or the bounded
/// search finds a witness; otherwise Unknown.
inline EquivVerdict equivalent(const BiPoly& p, const BiPoly& q, const Budget& budget = {}) {
    budget.validate();
    auto t = test_nonequiv_thm11(p, q);
    if (auto* cert = std::get_if<Thm11Certificate>(&t)) return NotEquivalent{"thm1.1", *cert, p.deg(), q.deg()};
    if (p.is_constant() || q.is_constant()) {
        if (p == q) return EquivWitness{Auto::identity()};
        if (p.is_constant() && q.is_constant()) return NotEquivalent{"canon-degree", std::nullopt, p.deg(), q.deg()};
    }
    CanonOutcome cp = canonical_model(p), cq = canonical_model(q);
    const BiPoly &P = reached(cp), &Q = reached(cq);
    bool both_models = std::holds_alternative<Model>(cp) && std::holds_alternative<Model>(cq);
    if (P.deg() != Q.deg()) {
        if (both_models) return NotEquivalent{"canon-degree", std::nullopt, P.deg(), Q.deg()};
        return EquivUnknown{"canonical reduction needs an algebraic extension"};
    }
    AutoWord wp = trace_of(cp).word(), wq_inv = trace_of(cq).word().inverse();
    std::optional<AutoWord> psi = detail::plateau_search(P, Q, budget);
    if (!psi) {
        if (auto back = detail::plateau_search(Q, P, budget)) psi = back->inverse();
    }
    if (!psi) return EquivUnknown{"no witness within the search budget"};
    Auto phi = detail::concat({&wp, &*psi, &wq_inv}).evaluate();
    if (apply(phi, p) != q) return EquivUnknown{"candidate witness failed verification"};
    return EquivWitness{phi};
}

}  // namespace peakred

#endif
