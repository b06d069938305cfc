#ifndef PEAKRED_UNIPOLY_HPP
#define PEAKRED_UNIPOLY_HPP

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degree.hpp"
#include "rational.hpp"

namespace peakred {

/// Dense univariate polynomial over Q; coefficient i multiplies t^i.
/// The coefficient vector never carries trailing zeros.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& a) { return UniPoly(std::vector<Rational>{a}); }
    static UniPoly monomial(const Rational& a, int e) {
        std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
        c.back() = a;
        return UniPoly(std::move(c));
    }
    static UniPoly t() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    Degree degree() const { return c_.empty() ? Degree::minus_infinity() : Degree(static_cast<int>(c_.size()) - 1); }
    /// Degree as an int with -1 for zero; for loops only.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const {
        return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<std::size_t>(i)] : Rational(0);
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    bool is_constant() const { return c_.size() <= 1; }

    Rational operator()(const Rational& x) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return UniPoly(std::move(c));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (sgn(a.c_[i]) == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(c));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) {
        if (sgn(s) == 0) return {};
        UniPoly r = a;
        for (auto& x : r.c_) x *= s;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly pow(unsigned e) const {
        UniPoly result = constant(1), base = *this;
        while (e) {
            if (e & 1u) result *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return result;
    }

    /// this(q(t)).
    UniPoly compose(const UniPoly& q) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Rational> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
        return UniPoly(std::move(d));
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return Rational(1 / leading()) * *this;
    }

    /// Euclidean division; throws on a zero divisor.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const {
        if (d.is_zero()) throw std::domain_error("division by the zero polynomial");
        std::vector<Rational> rem = c_;
        int dd = d.deg();
        int qd = deg() - dd;
        if (qd < 0) return {UniPoly(), *this};
        std::vector<Rational> q(static_cast<std::size_t>(qd) + 1);
        Rational inv = 1 / d.leading();
        for (int i = deg(); i >= dd; --i) {
            Rational f = rem[static_cast<std::size_t>(i)] * inv;
            if (sgn(f) == 0) continue;
            q[static_cast<std::size_t>(i - dd)] = f;
            for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= f * d.c_[static_cast<std::size_t>(j)];
        }
        return {UniPoly(std::move(q)), UniPoly(std::move(rem))};
    }

    /// Scales to a primitive integer polynomial with positive leading coefficient.
    std::vector<Integer> primitive_integer() const {
        std::vector<Integer> out;
        if (is_zero()) return out;
        Integer l = 1;
        for (const auto& x : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        Integer g = 0;
        out.reserve(c_.size());
        for (const auto& x : c_) {
            Integer v = x.get_num() * (l / x.get_den());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
            out.push_back(v);
        }
        if (sgn(out.back()) < 0) g = -g;
        for (auto& v : out) v /= g;
        return out;
    }

    std::string str(const std::string& var = "t") const;

private:
    void trim() {
        while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        // Keep the intermediate coefficients small.
        a = std::move(b);
        b = r.monic();
    }
    return a.monic();
}

inline UniPoly square_free_part(const UniPoly& g) {
    if (g.is_constant()) return g.monic();
    return g.divmod(gcd(g, g.derivative())).first.monic();
}

/// Result of rational root finding: the distinct rational roots in ascending
/// order plus the square-free part of what remains after removing them.
struct RootReport {
    std::vector<Rational> roots;
    std::vector<UniPoly> residual;
};

namespace detail {

inline std::vector<Integer> prime_factors(Integer n) {
    std::vector<Integer> ps;
    n = abs(n);
    if (n <= 1) return ps;
    auto take = [&](const Integer& p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    };
    take(2);
    take(3);
    for (Integer p = 5; p * p <= n && p < 1000000; p += 6) {
        take(p);
        take(p + 2);
    }
    if (n == 1) return ps;
    std::vector<Integer> stack{n};
    while (!stack.empty()) {
        Integer m = stack.back();
        stack.pop_back();
        if (m == 1) continue;
        if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
            ps.push_back(m);
            continue;
        }
        // Pollard rho with Brent's cycle detection.
        Integer d = m;
        for (unsigned long c = 1; d == m; ++c) {
            Integer x = 2, y = 2;
            d = 1;
            while (d == 1) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                Integer diff = abs(x - y);
                mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), m.get_mpz_t());
            }
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

inline std::vector<Integer> positive_divisors(const Integer& n) {
    std::vector<Integer> divs{1};
    Integer rest = abs(n);
    for (const auto& p : prime_factors(rest)) {
        std::size_t base = divs.size();
        Integer pk = 1;
        while (rest % p == 0) {
            rest /= p;
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace detail

/// Rational roots of a nonzero polynomial by the rational root theorem on its
/// primitive integer form; every candidate is checked by exact evaluation.
inline RootReport rational_roots(const UniPoly& g) {
    if (g.is_zero()) throw std::domain_error("rational_roots: the zero polynomial has no finite root set");
    RootReport report;
    UniPoly rest = square_free_part(g);
    if (rest.is_constant()) return report;
    if (sgn(rest.coeff(0)) == 0) {
        report.roots.push_back(0);
        rest = rest.divmod(UniPoly::t()).first;
    }
    while (!rest.is_constant()) {
        if (rest.deg() == 1) {
            report.roots.push_back(-rest.coeff(0) / rest.coeff(1));
            rest = UniPoly::constant(1);
            break;
        }
        auto ints = rest.primitive_integer();
        auto nums = detail::positive_divisors(ints.front());
        auto dens = detail::positive_divisors(ints.back());
        bool found = false;
        for (const auto& q : dens) {
            for (const auto& p : nums) {
                for (int s : {1, -1}) {
                    Integer pn = s * p;
                    Integer g0 = gcd(pn, q);
                    if (g0 != 1) continue;
                    Rational r = make_rational(pn, q);
                    if (sgn(rest(r)) != 0) continue;
                    report.roots.push_back(r);
                    rest = rest.divmod(UniPoly{-r, 1}).first;
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) break;
    }
    if (!rest.is_constant()) report.residual.push_back(rest.monic());
    std::sort(report.roots.begin(), report.roots.end());
    return report;
}

inline std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = deg(); i >= 0; --i) {
        const Rational& a = c_[static_cast<std::size_t>(i)];
        if (sgn(a) == 0) continue;
        bool neg = sgn(a) < 0;
        Rational mag = abs(a);
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        bool unit = mag == 1;
        if (i == 0) {
            out += mag.get_str();
            continue;
        }
        if (!unit) out += mag.get_str() + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace peakred

#endif
