#ifndef PEAKRED_RANDOM_HPP
#define PEAKRED_RANDOM_HPP

#include <random>

#include "automorph.hpp"

namespace peakred {

/// Bounds for random tame words.
struct WordShape {
    int max_length = 4;  // generators per word, at least 1
    int max_k = 3;       // top degree of triangular factors
    int height = 3;      // integer coefficients drawn from [-height, height]
};

namespace detail {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Rational nonzero(std::mt19937_64& rng, int h) {
    int v = uniform(rng, 1, h);
    return Rational(uniform(rng, 0, 1) ? v : -v);
}

inline UniPoly random_shear_poly(std::mt19937_64& rng, const WordShape& s) {
    int k = uniform(rng, 2, std::max(2, s.max_k));
    std::vector<Rational> c(static_cast<std::size_t>(k) + 1);
    for (int e = 0; e < k; ++e) c[static_cast<std::size_t>(e)] = uniform(rng, -s.height, s.height);
    c.back() = nonzero(rng, s.height);
    return UniPoly(std::move(c));
}

}  // namespace detail

/// Random generator: triangular factors half the time, otherwise an
/// invertible integer linear map or an integer shift.
inline Generator random_generator(std::mt19937_64& rng, const WordShape& s) {
    using detail::uniform;
    switch (uniform(rng, 0, 5)) {
        case 0:
        case 1: return TriangularX{detail::random_shear_poly(rng, s), uniform(rng, 0, 3) ? Rational(1) : detail::nonzero(rng, s.height)};
        case 2:
        case 3: return TriangularY{detail::random_shear_poly(rng, s), uniform(rng, 0, 3) ? Rational(1) : detail::nonzero(rng, s.height)};
        case 4: {
            for (;;) {
                Linear l{uniform(rng, -s.height, s.height), uniform(rng, -s.height, s.height),
                         uniform(rng, -s.height, s.height), uniform(rng, -s.height, s.height)};
                if (sgn(l.det()) != 0) return l;
            }
        }
        default: return AffineShift{uniform(rng, -s.height, s.height), uniform(rng, -s.height, s.height)};
    }
}

inline AutoWord random_word(std::mt19937_64& rng, const WordShape& s) {
    AutoWord w;
    int n = detail::uniform(rng, 1, std::max(1, s.max_length));
    for (int i = 0; i < n; ++i) w.factors.push_back(random_generator(rng, s));
    return w;
}

}  // namespace peakred

#endif
