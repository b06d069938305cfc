#ifndef PEAKRED_BIPOLY_HPP
#define PEAKRED_BIPOLY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degree.hpp"
#include "rational.hpp"
#include "unipoly.hpp"

namespace peakred {

/// Exponent pair (power of x, power of y).
struct Monomial {
    int i = 0;
    int j = 0;

    int total() const { return i + j; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x before y: higher total degree first,
/// then higher power of x first. Maps keyed by this iterate in print order.
struct GradedLex {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.total() != b.total()) return a.total() > b.total();
        return a.i > b.i;
    }
};

/// Sparse polynomial in x, y over Q. Stored coefficients are never zero.
class BiPoly {
public:
    using Terms = std::map<Monomial, Rational, GradedLex>;

    BiPoly() = default;
    explicit BiPoly(Terms terms) : terms_(std::move(terms)) { prune(); }
    BiPoly(const Rational& c) {  // NOLINT: constants convert implicitly
        if (sgn(c) != 0) terms_.emplace(Monomial{0, 0}, c);
    }
    BiPoly(long c) : BiPoly(Rational(c)) {}  // NOLINT

    static BiPoly monomial(const Rational& c, int i, int j) {
        BiPoly p;
        if (sgn(c) != 0) p.terms_.emplace(Monomial{i, j}, c);
        return p;
    }
    static BiPoly x() { return monomial(1, 1, 0); }
    static BiPoly y() { return monomial(1, 0, 1); }
    /// f(x) or f(y) as a bivariate polynomial.
    static BiPoly in_x(const UniPoly& f) {
        BiPoly p;
        for (int k = 0; k <= f.deg(); ++k)
            if (sgn(f.coeff(k)) != 0) p.terms_.emplace(Monomial{k, 0}, f.coeff(k));
        return p;
    }
    static BiPoly in_y(const UniPoly& f) {
        BiPoly p;
        for (int k = 0; k <= f.deg(); ++k)
            if (sgn(f.coeff(k)) != 0) p.terms_.emplace(Monomial{0, k}, f.coeff(k));
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    Rational coeff(int i, int j) const {
        auto it = terms_.find(Monomial{i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    /// Total degree; the first stored term has the highest.
    Degree degree() const {
        return terms_.empty() ? Degree::minus_infinity() : Degree(terms_.begin()->first.total());
    }
    int deg() const { return terms_.empty() ? -1 : terms_.begin()->first.total(); }
    int deg_x() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.i);
        return d;
    }
    int deg_y() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.j);
        return d;
    }
    bool is_constant() const { return deg() <= 0; }
    Rational constant_term() const { return coeff(0, 0); }

    /// Part of total degree exactly d.
    BiPoly homogeneous_part(int d) const {
        BiPoly out;
        for (const auto& [m, c] : terms_)
            if (m.total() == d) out.terms_.emplace(m, c);
        return out;
    }
    /// Terms of total degree at most d.
    BiPoly truncate(int d) const {
        BiPoly out;
        for (const auto& [m, c] : terms_)
            if (m.total() <= d) out.terms_.emplace(m, c);
        return out;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(Monomial{ma.i + mb.i, ma.j + mb.j}, ca * cb);
        return r;
    }
    BiPoly& operator*=(const BiPoly& o) { return *this = *this * o; }
    friend BiPoly operator*(const Rational& s, const BiPoly& a) {
        if (sgn(s) == 0) return {};
        BiPoly r = a;
        for (auto& [m, c] : r.terms_) c *= s;
        return r;
    }

    BiPoly pow(unsigned e) const {
        BiPoly result(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    BiPoly dx() const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.i > 0) r.add_term(Monomial{m.i - 1, m.j}, c * m.i);
        return r;
    }
    BiPoly dy() const {
        BiPoly r;
        for (const auto& [m, c] : terms_)
            if (m.j > 0) r.add_term(Monomial{m.i, m.j - 1}, c * m.j);
        return r;
    }

    /// Evaluates p(a, b) in any commutative ring R given a constant embedding.
    /// Horner in x over coefficients that are polynomials in y.
    template <class R, class Embed>
    R evaluate(const R& a, const R& b, Embed embed) const {
        std::map<int, std::map<int, Rational>> rows;  // x power -> (y power -> c)
        for (const auto& [m, c] : terms_) rows[m.i][m.j] = c;
        R acc = embed(Rational(0));
        int prev = -1;
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            if (prev >= 0)
                for (int s = it->first; s < prev; ++s) acc = acc * a;
            // Horner in y for this row.
            R row = embed(Rational(0));
            int prev_j = -1;
            for (auto jt = it->second.rbegin(); jt != it->second.rend(); ++jt) {
                if (prev_j >= 0)
                    for (int s = jt->first; s < prev_j; ++s) row = row * b;
                row = row + embed(jt->second);
                prev_j = jt->first;
            }
            for (int s = 0; s < prev_j; ++s) row = row * b;
            acc = acc + row;
            prev = it->first;
        }
        for (int s = 0; s < prev; ++s) acc = acc * a;
        return acc;
    }

    /// p(a, b) for bivariate a, b.
    BiPoly substitute(const BiPoly& a, const BiPoly& b) const {
        return evaluate<BiPoly>(a, b, [](const Rational& c) { return BiPoly(c); });
    }
    /// p(u(t), v(t)).
    UniPoly on_curve(const UniPoly& u, const UniPoly& v) const {
        return evaluate<UniPoly>(u, v, [](const Rational& c) { return UniPoly::constant(c); });
    }
    Rational at(const Rational& a, const Rational& b) const {
        return evaluate<Rational>(a, b, [](const Rational& c) { return c; });
    }

    /// Univariate view when p involves only x (or only y); nullopt otherwise.
    std::optional<UniPoly> as_poly_in_x() const {
        std::vector<Rational> c(static_cast<std::size_t>(std::max(deg_x(), 0)) + 1);
        for (const auto& [m, a] : terms_) {
            if (m.j != 0) return std::nullopt;
            c[static_cast<std::size_t>(m.i)] = a;
        }
        return UniPoly(std::move(c));
    }
    std::optional<UniPoly> as_poly_in_y() const {
        std::vector<Rational> c(static_cast<std::size_t>(std::max(deg_y(), 0)) + 1);
        for (const auto& [m, a] : terms_) {
            if (m.i != 0) return std::nullopt;
            c[static_cast<std::size_t>(m.j)] = a;
        }
        return UniPoly(std::move(c));
    }

    std::string str(const std::string& xv = "x", const std::string& yv = "y") const;

    void add_term(const Monomial& m, const Rational& c) {
        if (sgn(c) == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0) terms_.erase(it);
        }
    }

private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (sgn(it->second) == 0)
                it = terms_.erase(it);
            else
                ++it;
        }
    }
    Terms terms_;
};

/// Homogeneous component of top total degree; throws on the zero polynomial.
inline BiPoly degree_form(const BiPoly& p) {
    if (p.is_zero()) throw std::domain_error("degree_form: zero polynomial has no degree form");
    return p.homogeneous_part(p.deg());
}

inline bool is_homogeneous(const BiPoly& p) {
    if (p.is_zero()) return true;
    int d = p.deg();
    for (const auto& [m, c] : p.terms()) if (m.total() != d) return false;
    return true;
}

/// f = scale * form^d with form = x + beta*y or form = y.
struct LinearPower {
    Rational scale;
    BiPoly form;
};

/// Writes a homogeneous f of degree d >= 1 as c*l^d with l monic in its
/// leading variable, if possible over Q. The top two coefficients fix the
/// only candidate, which is then verified by expansion.
inline std::optional<LinearPower> linear_power_root(const BiPoly& f) {
    if (f.is_zero()) throw std::domain_error("linear_power_root: zero form");
    if (!is_homogeneous(f)) throw std::invalid_argument("linear_power_root: input is not homogeneous");
    int d = f.deg();
    if (d < 1) return std::nullopt;
    Rational c = f.coeff(d, 0);
    BiPoly l;
    if (sgn(c) != 0) {
        Rational beta = f.coeff(d - 1, 1) / (c * d);
        l = BiPoly::x() + beta * BiPoly::y();
    } else {
        c = f.coeff(0, d);
        if (sgn(c) == 0) return std::nullopt;
        l = BiPoly::y();
    }
    if (c * l.pow(static_cast<unsigned>(d)) != f) return std::nullopt;
    return LinearPower{c, l};
}

namespace detail {

inline void append_term(std::string& out, const Rational& a, const std::string& mono) {
    bool neg = sgn(a) < 0;
    Rational mag = abs(a);
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? " - " : " + ";
    }
    if (mono.empty()) {
        out += mag.get_str();
    } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
    }
}

inline std::string power_str(const std::string& v, int e) {
    if (e == 0) return "";
    return e == 1 ? v : v + "^" + std::to_string(e);
}

}  // namespace detail

inline std::string BiPoly::str(const std::string& xv, const std::string& yv) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        std::string mono = detail::power_str(xv, m.i);
        std::string ys = detail::power_str(yv, m.j);
        if (!ys.empty()) mono = mono.empty() ? ys : mono + "*" + ys;
        detail::append_term(out, c, mono);
    }
    return out;
}

}  // namespace peakred

#endif
