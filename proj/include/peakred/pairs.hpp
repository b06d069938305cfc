#ifndef PEAKRED_PAIRS_HPP
#define PEAKRED_PAIRS_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "parse.hpp"
#include "unipoly.hpp"

namespace peakred {

/// A pair of one-variable polynomials, typically a parametrization x = u(t), y = v(t).
struct PolyPair {
    UniPoly u;
    UniPoly v;
    friend bool operator==(const PolyPair&, const PolyPair&) = default;
    std::string str() const { return u.str() + "; " + v.str(); }
};

inline PolyPair parse_pair(std::string_view text) {
    auto [a, b] = split_pair(text);
    return {parse_unipoly(a), parse_unipoly(b)};
}

/// (u, v) -> (u + mu v^k, v)
struct ET1 {
    Rational mu;
    int k = 2;
    friend bool operator==(const ET1&, const ET1&) = default;
};
/// (u, v) -> (u, v + mu u^k)
struct ET2 {
    Rational mu;
    int k = 2;
    friend bool operator==(const ET2&, const ET2&) = default;
};
/// (u, v) -> (a1 u + a2 v, b1 u + b2 v)
struct ET3 {
    Rational a1 = 1, a2 = 0, b1 = 0, b2 = 1;
    Rational det() const { return a1 * b2 - a2 * b1; }
    friend bool operator==(const ET3&, const ET3&) = default;
};

using ETMove = std::variant<ET1, ET2, ET3>;

inline PolyPair apply_et(const ETMove& m, const PolyPair& p) {
    return std::visit(
        [&](const auto& e) -> PolyPair {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ET1>) {
                return {p.u + e.mu * p.v.pow(static_cast<unsigned>(e.k)), p.v};
            } else if constexpr (std::is_same_v<T, ET2>) {
                return {p.u, p.v + e.mu * p.u.pow(static_cast<unsigned>(e.k))};
            } else {
                return {e.a1 * p.u + e.a2 * p.v, e.b1 * p.u + e.b2 * p.v};
            }
        },
        m);
}

inline ETMove inverse(const ETMove& m) {
    return std::visit(
        [](const auto& e) -> ETMove {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ET3>) {
                Rational d = e.det();
                return ET3{e.b2 / d, -e.a2 / d, -e.b1 / d, e.a1 / d};
            } else {
                return T{-e.mu, e.k};
            }
        },
        m);
}

/// Lexicographic complexity: the larger degree, then how many components attain it.
/// The zero polynomial counts as degree -1.
struct Measure {
    int maxdeg = -1;
    int count = 0;
    friend auto operator<=>(const Measure&, const Measure&) = default;
    std::string str() const { return "(" + std::to_string(maxdeg) + ", " + std::to_string(count) + ")"; }
};

inline Measure measure(const PolyPair& p) {
    int du = p.u.deg(), dv = p.v.deg();
    int m = std::max(du, dv);
    return {m, (du == m) + (dv == m)};
}

struct ETWord {
    std::vector<ETMove> moves;
    std::vector<Measure> measures;  // measure after each move; empty for hand-built words
};

inline PolyPair apply_word(const ETWord& w, PolyPair p) {
    for (const auto& m : w.moves) p = apply_et(m, p);
    return p;
}

enum class Component { U, V };

/// A single move lowering measure(p), or nullopt. Degree-raising moves never
/// help: the multiplier mu is forced by cancelling leading coefficients.
/// On equal degrees `tie` names the component the linear move rewrites.
inline std::optional<ETMove> find_reducing_et(const PolyPair& p, Component tie = Component::V) {
    int du = p.u.deg(), dv = p.v.deg();
    if (du < 0 || dv < 0) return std::nullopt;
    if (du == dv) {
        Rational c;
        if (tie == Component::V) {
            c = p.v.leading() / p.u.leading();
            return ET3{1, 0, -c, 1};
        }
        c = p.u.leading() / p.v.leading();
        return ET3{1, -c, 0, 1};
    }
    if (du < dv) {
        if (du >= 1 && dv % du == 0) {
            int k = dv / du;
            return ET2{-p.v.leading() / pow(p.u.leading(), static_cast<unsigned>(k)), k};
        }
        return std::nullopt;
    }
    if (dv >= 1 && du % dv == 0) {
        int k = du / dv;
        return ET1{-p.u.leading() / pow(p.v.leading(), static_cast<unsigned>(k)), k};
    }
    return std::nullopt;
}

namespace detail {

inline Component rewritten(const ETMove& m) {
    if (std::holds_alternative<ET1>(m)) return Component::U;
    if (std::holds_alternative<ET2>(m)) return Component::V;
    const auto& e = std::get<ET3>(m);
    return e.a1 == 1 && sgn(e.a2) == 0 ? Component::V : Component::U;
}

}  // namespace detail

struct Reduction {
    PolyPair minimal;
    ETWord trace;
};

/// Greedy peak reduction. Equal-degree ties rewrite the component the previous
/// move rewrote, so (t^3 + t, t) ends at (0, t).
inline Reduction reduce_pair(const PolyPair& p) {
    Reduction r{p, {}};
    Component tie = Component::V;
    while (auto m = find_reducing_et(r.minimal, tie)) {
        r.minimal = apply_et(*m, r.minimal);
        r.trace.moves.push_back(*m);
        r.trace.measures.push_back(measure(r.minimal));
        tie = detail::rewritten(*m);
    }
    return r;
}

/// p(alpha t + beta) applied to both components.
inline PolyPair reparametrize(const PolyPair& p, const Rational& alpha, const Rational& beta) {
    UniPoly s{beta, alpha};
    return {p.u.compose(s), p.v.compose(s)};
}

/// Certificate that two pairs are ET-equivalent up to an affine change of
/// parameter: link(reparametrize(reduce(p1), alpha, beta)) = reduce(p2).
struct PairWitness {
    ETWord first;
    ETWord second;
    Rational alpha = 1;
    Rational beta = 0;
    ETWord link;
};

struct PairsUnknown {
    std::string reason;
};

using PairVerdict = std::variant<PairWitness, PairsUnknown>;

namespace detail {

/// Coefficients (in Q[alpha]) of e(alpha t + beta(alpha)), indexed by the power of t.
inline std::vector<UniPoly> symbolic_reparam(const UniPoly& e, const UniPoly& beta) {
    std::vector<UniPoly> out(static_cast<std::size_t>(std::max(e.deg(), 0)) + 1);
    std::vector<UniPoly> bpow{UniPoly::constant(1)};
    for (int i = 1; i <= e.deg(); ++i) bpow.push_back(bpow.back() * beta);
    for (int i = 0; i <= e.deg(); ++i) {
        if (sgn(e.coeff(i)) == 0) continue;
        for (int j = 0; j <= i; ++j) {
            Rational c = e.coeff(i) * Rational(binomial(i, j));
            out[static_cast<std::size_t>(j)] += c * (UniPoly::monomial(1, j) * bpow[static_cast<std::size_t>(i - j)]);
        }
    }
    return out;
}

/// Nonzero rational alpha (with beta linear in alpha) such that
/// monic(e(alpha t + beta)) and monic(f) agree in every coefficient of t^j,
/// j >= jmin. `free` means every alpha works.
struct ReparamSolve {
    bool free = false;
    UniPoly beta;
    std::vector<Rational> alphas;
};

inline ReparamSolve match_monic(const UniPoly& e0, const UniPoly& f0, int jmin) {
    ReparamSolve r;
    UniPoly e = e0.monic(), f = f0.monic();
    int d = e.deg();
    if (d != f.deg()) return r;
    if (d - 1 < jmin) {
        r.free = true;
        return r;
    }
    r.beta = UniPoly{-e.coeff(d - 1) / d, f.coeff(d - 1) / d};
    auto img = symbolic_reparam(e, r.beta);
    UniPoly ad = UniPoly::monomial(1, d);
    UniPoly g;
    for (int j = jmin; j <= d; ++j) g = gcd(g, img[static_cast<std::size_t>(j)] - f.coeff(j) * ad);
    if (g.is_zero()) {
        r.free = true;
        return r;
    }
    if (!g.is_constant()) r.alphas = rational_roots(g).roots;
    std::erase_if(r.alphas, [](const Rational& a) { return sgn(a) == 0; });
    return r;
}

/// Drops from b the terms expressible as sum_{k >= 1, k deg s < bound} h_k s^k
/// (for constant s: the constant term), leaving a remainder unique modulo
/// those moves. The digits h_k are returned alongside.
inline UniPoly normalize_mod_powers(const UniPoly& b, const UniPoly& s, int bound,
                                    std::vector<Rational>* digits = nullptr) {
    if (s.deg() == 0) {
        if (digits) *digits = {b.coeff(0)};
        return b - UniPoly::constant(b.coeff(0));
    }
    int ds = s.deg();
    std::vector<UniPoly> spow{UniPoly::constant(1)};
    for (int k = 1; k * ds < bound; ++k) spow.push_back(spow.back() * s);
    std::vector<Rational> h(spow.size());
    UniPoly rest = b;
    for (int k = static_cast<int>(spow.size()) - 1; k >= 1; --k) {
        const UniPoly& sk = spow[static_cast<std::size_t>(k)];
        Rational c = rest.coeff(k * ds) / sk.leading();
        if (sgn(c) == 0) continue;
        h[static_cast<std::size_t>(k)] = c;
        rest = rest - c * sk;
    }
    if (digits) *digits = h;
    return rest;
}

struct Oriented {
    PolyPair pair;  // small component in u
    bool swapped = false;
};

inline Oriented orient(const PolyPair& p) {
    if (p.u.deg() > p.v.deg()) return {{p.v, p.u}, true};
    return {p, false};
}

/// Reparametrizations (alpha, beta) worth checking for carrying a onto b.
/// Both pairs are oriented minimal pairs with equal degrees.
inline std::vector<std::pair<Rational, Rational>> reparam_candidates(const PolyPair& a, const PolyPair& b) {
    std::vector<std::pair<Rational, Rational>> out;
    auto collect = [&](const ReparamSolve& r) {
        if (r.free) {
            out.emplace_back(1, r.beta(Rational(1)));
            return;
        }
        for (const auto& al : r.alphas) out.emplace_back(al, r.beta(al));
    };
    int ds = a.u.deg(), db = a.v.deg();
    if (db < 1) {
        out.emplace_back(1, 0);
    } else if (ds < 0) {
        collect(match_monic(a.v, b.v, 0));
    } else if (ds == 0) {
        collect(match_monic(a.v, b.v, 1));
    } else {
        ReparamSolve r = match_monic(a.u, b.u, 0);
        if (!r.free) {
            collect(r);
        } else {
            // The small components are pure powers of shifted parameters
            // L (t - c)^ds; centre both and scale alpha against the big ones.
            auto centre = [&](const UniPoly& s) -> Rational { return -s.monic().coeff(ds - 1) / ds; };
            Rational c1 = centre(a.u), c2 = centre(b.u);
            UniPoly s = UniPoly::monomial(1, ds);
            UniPoly n1 = normalize_mod_powers(a.v.compose(UniPoly{c1, 1}), s, db).monic();
            UniPoly n2 = normalize_mod_powers(b.v.compose(UniPoly{c2, 1}), s, db).monic();
            if (n1.deg() != n2.deg()) return out;
            UniPoly g;
            UniPoly ad = UniPoly::monomial(1, n1.deg());
            for (int j = 0; j <= n1.deg(); ++j) g = gcd(g, UniPoly::monomial(n1.coeff(j), j) - n2.coeff(j) * ad);
            std::vector<Rational> alphas;
            if (g.is_zero()) {
                alphas.push_back(1);
            } else if (!g.is_constant()) {
                alphas = rational_roots(g).roots;
            }
            for (const auto& al : alphas)
                if (sgn(al) != 0) out.emplace_back(al, c1 - al * c2);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        if (height(x.first) != height(y.first)) return height(x.first) < height(y.first);
        return x.first > y.first;
    });
    return out;
}

/// Moves carrying oriented a onto oriented b with a degree-preserving word,
/// or nullopt: scale both components, then add a polynomial in the small one
/// to the big one.
inline std::optional<std::vector<ETMove>> link_oriented(const PolyPair& a, const PolyPair& b) {
    auto ratio = [](const UniPoly& x, const UniPoly& y) -> std::optional<Rational> {
        if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero() ? std::optional<Rational>(1) : std::nullopt;
        return y.leading() / x.leading();
    };
    auto cs = ratio(a.u, b.u);
    if (!cs || *cs * a.u != b.u) return std::nullopt;
    auto cb = ratio(a.v, b.v);
    if (!cb) return std::nullopt;
    std::vector<ETMove> moves;
    if (*cs != 1 || *cb != 1) moves.push_back(ET3{*cs, 0, 0, *cb});
    UniPoly diff = b.v - *cb * a.v;
    if (diff.is_zero()) return moves;
    if (b.u.is_zero()) return std::nullopt;
    std::vector<Rational> h;
    if (!normalize_mod_powers(diff, b.u, b.v.deg(), &h).is_zero()) return std::nullopt;
    if (b.u.deg() == 0) {
        // A constant small component turns ET2 with k = 2 into a translation.
        moves.push_back(ET2{h[0] / (b.u.leading() * b.u.leading()), 2});
        return moves;
    }
    for (std::size_t k = 1; k < h.size(); ++k) {
        if (sgn(h[k]) == 0) continue;
        if (k == 1) moves.push_back(ET3{1, 0, h[k], 1});
        else moves.push_back(ET2{h[k], static_cast<int>(k)});
    }
    return moves;
}

/// Conjugates a move on the swapped pair back to the original orientation.
inline ETMove unswap(const ETMove& m) {
    return std::visit(
        [](const auto& e) -> ETMove {
            using T = std::decay_t<decltype(e)>;
            if constexpr (std::is_same_v<T, ET1>) return ET2{e.mu, e.k};
            else if constexpr (std::is_same_v<T, ET2>) return ET1{e.mu, e.k};
            else return ET3{e.b2, e.b1, e.a2, e.a1};
        },
        m);
}

}  // namespace detail

/// Conservative equivalence of parametrizations: both pairs are reduced, then
/// matched by an affine change of parameter and degree-preserving moves.
/// Never claims non-equivalence.
inline PairVerdict pairs_equivalent(const PolyPair& p1, const PolyPair& p2) {
    Reduction r1 = reduce_pair(p1), r2 = reduce_pair(p2);
    if (measure(r1.minimal) != measure(r2.minimal)) return PairsUnknown{"minimal measures differ"};
    auto o1 = detail::orient(r1.minimal), o2 = detail::orient(r2.minimal);
    if (o1.pair.u.deg() != o2.pair.u.deg() || o1.pair.v.deg() != o2.pair.v.deg())
        return PairsUnknown{"minimal degrees differ"};
    const ET3 swap{0, 1, 1, 0};
    for (const auto& [alpha, beta] : detail::reparam_candidates(o1.pair, o2.pair)) {
        auto moves = detail::link_oriented(reparametrize(o1.pair, alpha, beta), o2.pair);
        if (!moves) continue;
        ETWord link;
        if (o1.swapped) link.moves.push_back(swap);
        for (const auto& m : *moves) link.moves.push_back(m);
        if (o2.swapped) link.moves.push_back(swap);
        if (apply_word(link, reparametrize(r1.minimal, alpha, beta)) != r2.minimal) continue;
        return PairWitness{r1.trace, r2.trace, alpha, beta, link};
    }
    return PairsUnknown{"no affine reparametrization matches the minimal pairs"};
}

/// Replays a witness; true when it carries p1 onto p2 as claimed.
inline bool verify(const PairWitness& w, const PolyPair& p1, const PolyPair& p2) {
    if (sgn(w.alpha) == 0) return false;
    PolyPair a = apply_word(w.link, reparametrize(apply_word(w.first, p1), w.alpha, w.beta));
    return a == apply_word(w.second, p2);
}

}  // namespace peakred

#endif
