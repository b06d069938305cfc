#ifndef PEAKRED_RATIONAL_HPP
#define PEAKRED_RATIONAL_HPP

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace peakred {

// Exact rationals. mpq_class keeps values canonical (lowest terms, positive
// denominator, zero as 0/1) as long as every constructed value goes through
// canonicalize(); the helpers below do that.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Height of a/b in lowest terms: max(|a|, b).
inline Integer height(const Rational& r) {
    Integer a = abs(r.get_num());
    return a > r.get_den() ? a : Integer(r.get_den());
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "a" or "a/b" with optional leading sign; throws std::invalid_argument.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
}

inline Integer binomial(int n, int k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Rational pow(const Rational& base, unsigned e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return out;
}

/// Exact e-th root of a rational if one exists.
inline bool exact_root(const Rational& r, unsigned e, Rational& out) {
    if (e == 0) return false;
    if (sgn(r) < 0 && e % 2 == 0) return false;
    Integer n = abs(r.get_num());
    Integer d = r.get_den();
    Integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), n.get_mpz_t(), e) == 0) return false;
    if (mpz_root(rd.get_mpz_t(), d.get_mpz_t(), e) == 0) return false;
    out = make_rational(sgn(r) < 0 ? Integer(-rn) : rn, rd);
    return true;
}

/// Orders rationals by height, then by value. Used wherever a deterministic
/// "simplest first" choice is needed.
inline bool simpler(const Rational& a, const Rational& b) {
    Integer ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
}

}  // namespace peakred

#endif
