#pragma once

#include <random>
#include <vector>

#include "lierep/repzoo.hpp"

namespace lierep::testutil {

inline Vec<GaussRat> unit_vec(std::size_t d, std::size_t k) {
    Vec<GaussRat> e(d);
    e[k] = GaussRat(1);
    return e;
}

inline Rat random_rat(std::mt19937& rng, long span = 6) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, span);
    return Rat(num(rng), den(rng));
}

inline GaussRat random_gauss(std::mt19937& rng, long span = 6) {
    return GaussRat(random_rat(rng, span), random_rat(rng, span));
}

inline GaussRat random_nonzero_gauss(std::mt19937& rng, long span = 6) {
    GaussRat z = random_gauss(rng, span);
    while (z.is_zero()) z = random_gauss(rng, span);
    return z;
}

inline Mat<GaussRat> random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                                   long span = 4) {
    Mat<GaussRat> m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_gauss(rng, span);
    return m;
}

/// Polynomial as a coordinate vector on a monomial basis, from
/// (coefficient, exponent vector) terms.
inline Vec<GaussRat> poly_vec(const MonomialBasis& basis,
                              const std::vector<std::pair<GaussRat, std::vector<unsigned>>>& terms) {
    Vec<GaussRat> v(basis.size());
    for (const auto& [c, e] : terms) v[basis.index_of(e)] += c;
    return v;
}

/// Realification of the su(2) defining representation: 4x4 real matrices
/// acting irreducibly on R^4 with quaternionic commutant.
inline LieAlgebra su2_realified() {
    auto lift = [](const Mat<GaussRat>& m2) {
        Mat<GaussRat> m(4, 4);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                const GaussRat& z = m2(i, j);
                m(2 * i, 2 * j) = GaussRat(z.re());
                m(2 * i, 2 * j + 1) = GaussRat(-z.im());
                m(2 * i + 1, 2 * j) = GaussRat(z.im());
                m(2 * i + 1, 2 * j + 1) = GaussRat(z.re());
            }
        return m;
    };
    GaussRat i = GaussRat::i();
    Mat<GaussRat> u1(2, 2), u2(2, 2), u3(2, 2);
    u1(0, 0) = i;
    u1(1, 1) = -i;
    u2(0, 1) = GaussRat(1);
    u2(1, 0) = GaussRat(-1);
    u3(0, 1) = i;
    u3(1, 0) = i;
    return LieAlgebra({lift(u1), lift(u2), lift(u3)});
}

/// Direct sum of a representation with itself.
inline Representation double_rep(const LieAlgebra& g, const Representation& rep) {
    std::size_t n = rep.space_dim();
    std::vector<Mat<GaussRat>> images;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        Mat<GaussRat> d(2 * n, 2 * n);
        const Mat<GaussRat>& m = rep.image(k);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                d(i, j) = m(i, j);
                d(n + i, n + j) = m(i, j);
            }
        images.push_back(std::move(d));
    }
    return Representation(g, std::move(images), rep.is_anti());
}

}  // namespace lierep::testutil
