#ifndef PEAKRED_AUTOMORPH_HPP
#define PEAKRED_AUTOMORPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "bipoly.hpp"
#include "parse.hpp"

namespace peakred {

/// A polynomial map given by the images of x and y.
///
/// Maps act on the right: apply(phi, p) substitutes the images into p, and
/// compose(phi, psi) is the map that acts first by phi and then by psi, so
/// apply(compose(phi, psi), p) == apply(psi, apply(phi, p)).
struct Auto {
    BiPoly x_image = BiPoly::x();
    BiPoly y_image = BiPoly::y();

    static Auto identity() { return {}; }
    friend bool operator==(const Auto&, const Auto&) = default;

    bool is_affine() const { return x_image.deg() <= 1 && y_image.deg() <= 1; }

    std::string str() const { return "x -> " + x_image.str() + "; y -> " + y_image.str(); }
};

inline BiPoly apply(const Auto& phi, const BiPoly& p) { return p.substitute(phi.x_image, phi.y_image); }

inline Auto compose(const Auto& phi, const Auto& psi) {
    return Auto{apply(psi, phi.x_image), apply(psi, phi.y_image)};
}

inline BiPoly jacobian(const Auto& phi) {
    return phi.x_image.dx() * phi.y_image.dy() - phi.x_image.dy() * phi.y_image.dx();
}

/// Parses "x -> f; y -> g" or the bare form "f; g".
inline Auto parse_auto(std::string_view text) {
    auto [lhs, rhs] = split_pair(text);
    auto strip = [](std::string s, const char* var) {
        auto arrow = s.find("->");
        if (arrow == std::string::npos) return s;
        std::string head = s.substr(0, arrow);
        head.erase(0, head.find_first_not_of(" \t\n"));
        head.erase(head.find_last_not_of(" \t\n") + 1);
        if (head != var) throw ParseError(std::string("expected '") + var + " ->'", 1, 1);
        return s.substr(arrow + 2);
    };
    return Auto{parse_poly(strip(lhs, "x")), parse_poly(strip(rhs, "y"))};
}

// ---------------------------------------------------------------------------
// Generators

/// x -> a1 x + a2 y, y -> b1 x + b2 y.
struct Linear {
    Rational a1 = 1, a2 = 0, b1 = 0, b2 = 1;
    Rational det() const { return a1 * b2 - a2 * b1; }
    friend bool operator==(const Linear&, const Linear&) = default;
};
/// x -> x + c1, y -> y + c2.
struct AffineShift {
    Rational c1 = 0, c2 = 0;
    friend bool operator==(const AffineShift&, const AffineShift&) = default;
};
/// x -> a x + f(y), y -> y.
struct TriangularX {
    UniPoly f;
    Rational a = 1;
    friend bool operator==(const TriangularX&, const TriangularX&) = default;
};
/// x -> x, y -> b y + f(x).
struct TriangularY {
    UniPoly f;
    Rational b = 1;
    friend bool operator==(const TriangularY&, const TriangularY&) = default;
};

using Generator = std::variant<Linear, AffineShift, TriangularX, TriangularY>;

inline void validate(const Generator& g) {
    bool ok = std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Linear>) return sgn(v.det()) != 0;
            else if constexpr (std::is_same_v<T, AffineShift>) return true;
            else if constexpr (std::is_same_v<T, TriangularX>) return sgn(v.a) != 0;
            else return sgn(v.b) != 0;
        },
        g);
    if (!ok) throw std::invalid_argument("degenerate generator");
}

inline Auto to_auto(const Generator& g) {
    const BiPoly X = BiPoly::x(), Y = BiPoly::y();
    return std::visit(
        [&](const auto& v) -> Auto {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Linear>) {
                return {v.a1 * X + v.a2 * Y, v.b1 * X + v.b2 * Y};
            } else if constexpr (std::is_same_v<T, AffineShift>) {
                return {X + BiPoly(v.c1), Y + BiPoly(v.c2)};
            } else if constexpr (std::is_same_v<T, TriangularX>) {
                return {v.a * X + BiPoly::in_y(v.f), Y};
            } else {
                return {X, v.b * Y + BiPoly::in_x(v.f)};
            }
        },
        g);
}

inline Generator inverse(const Generator& g) {
    return std::visit(
        [](const auto& v) -> Generator {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Linear>) {
                Rational d = v.det();
                return Linear{v.b2 / d, -v.a2 / d, -v.b1 / d, v.a1 / d};
            } else if constexpr (std::is_same_v<T, AffineShift>) {
                return AffineShift{-v.c1, -v.c2};
            } else if constexpr (std::is_same_v<T, TriangularX>) {
                Rational inv = 1 / v.a;
                return TriangularX{Rational(-inv) * v.f, inv};
            } else {
                Rational inv = 1 / v.b;
                return TriangularY{Rational(-inv) * v.f, inv};
            }
        },
        g);
}

/// Generators composed left to right: the first factor acts first.
struct AutoWord {
    std::vector<Generator> factors;

    Auto evaluate() const {
        Auto acc;
        // compose is associative; folding from the right keeps the partial
        // products small when the word ends in affine factors.
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) acc = compose(to_auto(*it), acc);
        return acc;
    }
    AutoWord inverse() const {
        AutoWord w;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) w.factors.push_back(peakred::inverse(*it));
        return w;
    }
    friend bool operator==(const AutoWord&, const AutoWord&) = default;
};

/// compose(phi, w.evaluate()) computed one generator at a time. When w undoes
/// phi factor by factor the intermediate degrees fall instead of multiplying.
inline Auto compose(const Auto& phi, const AutoWord& w) {
    Auto acc = phi;
    for (const auto& g : w.factors) acc = compose(acc, to_auto(g));
    return acc;
}

/// apply(w.evaluate(), p) without expanding the word.
inline BiPoly apply(const AutoWord& w, BiPoly p) {
    for (const auto& g : w.factors) p = apply(to_auto(g), p);
    return p;
}

// ---------------------------------------------------------------------------
// Jung-van der Kulk recognition

enum class Side { X, Y };

/// One reduction: the component on `which` loses mu * (other)^d.
struct ReductionStep21 {
    Rational mu;
    int d = 1;
    Side which = Side::X;
};

struct NotAutomorphism {
    std::string rule;    // jacobian-nonconstant, jacobian-zero, no-reduction, ...
    std::string detail;
    int stage = 0;       // reduction steps completed before the failure
};

namespace detail {

inline const Rational& leading_coeff(const BiPoly& p) { return p.terms().begin()->second; }

}  // namespace detail

/// Finds the unique (mu, d) lowering the larger degree of (g1, g2), or nullopt.
/// On equal degrees the leading forms must be proportional; `tie` picks which
/// component absorbs the d = 1 step.
inline std::optional<ReductionStep21> jvdk_step(const BiPoly& g1, const BiPoly& g2, Side tie = Side::X) {
    int d1 = g1.deg(), d2 = g2.deg();
    if (d1 < 1 || d2 < 1) return std::nullopt;
    BiPoly f1 = degree_form(g1), f2 = degree_form(g2);
    auto reduce = [](const BiPoly& big, const BiPoly& small, int d, Side side) -> std::optional<ReductionStep21> {
        BiPoly sp = small.pow(static_cast<unsigned>(d));
        Rational mu = detail::leading_coeff(big) / detail::leading_coeff(sp);
        if (mu * sp != big) return std::nullopt;
        return ReductionStep21{mu, d, side};
    };
    if (d1 > d2) {
        if (d1 % d2 != 0) return std::nullopt;
        return reduce(f1, f2, d1 / d2, Side::X);
    }
    if (d2 > d1) {
        if (d2 % d1 != 0) return std::nullopt;
        return reduce(f2, f1, d2 / d1, Side::Y);
    }
    return tie == Side::X ? reduce(f1, f2, 1, Side::X) : reduce(f2, f1, 1, Side::Y);
}

/// Applies a reduction step to the pair and returns the generator peeled off
/// on the left, i.e. (g1, g2) == compose(generator, reduced pair).
inline Generator apply_step(const ReductionStep21& s, BiPoly& g1, BiPoly& g2) {
    if (s.which == Side::X) {
        g1 -= s.mu * g2.pow(static_cast<unsigned>(s.d));
        if (s.d == 1) return Linear{1, s.mu, 0, 1};
        return TriangularX{UniPoly::monomial(s.mu, s.d), 1};
    }
    g2 -= s.mu * g1.pow(static_cast<unsigned>(s.d));
    if (s.d == 1) return Linear{1, 0, s.mu, 1};
    return TriangularY{UniPoly::monomial(s.mu, s.d), 1};
}

/// Word for an invertible affine map x -> a1 x + a2 y + c1, y -> b1 x + b2 y + c2:
/// the shift acts first, then the linear part.
inline std::vector<Generator> affine_word(const Auto& a) {
    std::vector<Generator> out;
    Rational c1 = a.x_image.constant_term(), c2 = a.y_image.constant_term();
    Linear l{a.x_image.coeff(1, 0), a.x_image.coeff(0, 1), a.y_image.coeff(1, 0), a.y_image.coeff(0, 1)};
    if (sgn(c1) != 0 || sgn(c2) != 0) out.emplace_back(AffineShift{c1, c2});
    if (!(l == Linear{})) out.emplace_back(l);
    return out;
}

struct JvdkFactorization {
    AutoWord word;
    std::vector<ReductionStep21> steps;
};

using FactorResult = std::variant<JvdkFactorization, NotAutomorphism>;

/// Recognizes (g1, g2) as an automorphism by the Jung-van der Kulk reduction
/// and returns a generator word recomposing to it. The constant-Jacobian test
/// only filters; acceptance requires the reduction to reach an invertible
/// affine map.
inline FactorResult factor_jvdk(const BiPoly& g1, const BiPoly& g2) {
    BiPoly jac = jacobian(Auto{g1, g2});
    if (jac.deg() > 0) return NotAutomorphism{"jacobian-nonconstant", "jacobian = " + jac.str(), 0};
    if (jac.is_zero()) return NotAutomorphism{"jacobian-zero", "jacobian = 0", 0};

    JvdkFactorization out;
    BiPoly u = g1, v = g2;
    while (u.deg() > 1 || v.deg() > 1) {
        auto step = jvdk_step(u, v, Side::X);
        if (!step) {
            return NotAutomorphism{"no-reduction",
                                   "no (mu, d) lowers max(deg) of (" + u.str() + ", " + v.str() + ")",
                                   static_cast<int>(out.steps.size())};
        }
        out.word.factors.push_back(apply_step(*step, u, v));
        out.steps.push_back(*step);
    }
    Auto rest{u, v};
    if (sgn(jacobian(rest).constant_term()) == 0)
        return NotAutomorphism{"singular-linear", "affine residue " + rest.str() + " is not invertible",
                               static_cast<int>(out.steps.size())};
    for (auto& g : affine_word(rest)) out.word.factors.push_back(std::move(g));
    return out;
}

inline FactorResult factor_jvdk(const Auto& phi) { return factor_jvdk(phi.x_image, phi.y_image); }

inline bool is_automorphism(const Auto& phi) {
    return std::holds_alternative<JvdkFactorization>(factor_jvdk(phi));
}

class NotAutomorphismError : public std::runtime_error {
public:
    explicit NotAutomorphismError(NotAutomorphism why)
        : std::runtime_error("not an automorphism: " + why.rule + " (" + why.detail + ")"), why_(std::move(why)) {}
    const NotAutomorphism& why() const { return why_; }

private:
    NotAutomorphism why_;
};

inline AutoWord factor_or_throw(const Auto& phi) {
    auto r = factor_jvdk(phi);
    if (auto* bad = std::get_if<NotAutomorphism>(&r)) throw NotAutomorphismError(*bad);
    return std::get<JvdkFactorization>(r).word;
}

inline Auto invert(const Auto& phi) { return factor_or_throw(phi).inverse().evaluate(); }

// ---------------------------------------------------------------------------
// Classification

enum class AutoClass { Affine, TUT, TLT, General };

inline const char* name(AutoClass c) {
    switch (c) {
        case AutoClass::Affine: return "Affine";
        case AutoClass::TUT: return "TUT";
        case AutoClass::TLT: return "TLT";
        default: return "General";
    }
}

namespace detail {

// a*x + p(y) with a != 0.
inline bool x_plus_poly_in_y(const BiPoly& p) {
    if (sgn(p.coeff(1, 0)) == 0) return false;
    for (const auto& [m, c] : p.terms())
        if (m.i > 0 && !(m.i == 1 && m.j == 0)) return false;
    return true;
}
inline bool y_plus_poly_in_x(const BiPoly& p) {
    if (sgn(p.coeff(0, 1)) == 0) return false;
    for (const auto& [m, c] : p.terms())
        if (m.j > 0 && !(m.i == 0 && m.j == 1)) return false;
    return true;
}

}  // namespace detail

/// Shape-only classification; the automorphism check is factor_jvdk's job.
inline AutoClass classify_shape(const Auto& phi) {
    if (phi.is_affine()) return AutoClass::Affine;
    if (detail::x_plus_poly_in_y(phi.x_image) && phi.y_image.deg() <= 1 && sgn(phi.y_image.coeff(0, 1)) != 0)
        return AutoClass::TUT;
    if (detail::y_plus_poly_in_x(phi.y_image) && phi.x_image.deg() <= 1 && sgn(phi.x_image.coeff(1, 0)) != 0)
        return AutoClass::TLT;
    return AutoClass::General;
}

/// Most specific of Affine, TUT, TLT, General; throws NotAutomorphismError.
inline AutoClass classify(const Auto& phi) {
    factor_or_throw(phi);
    return classify_shape(phi);
}

}  // namespace peakred

#endif
