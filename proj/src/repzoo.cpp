#include "lierep/repzoo.hpp"

#include <algorithm>
#include <map>

namespace lierep {

MonomialBasis::MonomialBasis(std::size_t n_vars, std::size_t degree) : n_(n_vars), d_(degree) {
    std::vector<unsigned> cur(n_, 0);
    // descending lexicographic enumeration of exponent vectors of total degree d
    auto rec = [&](auto&& self, std::size_t k, unsigned rem) -> void {
        if (k + 1 == n_) {
            cur[k] = rem;
            mons_.push_back(cur);
            return;
        }
        for (unsigned e = rem + 1; e-- > 0;) {
            cur[k] = e;
            self(self, k + 1, rem - e);
        }
    };
    rec(rec, 0, static_cast<unsigned>(d_));
}

std::size_t MonomialBasis::index_of(const std::vector<unsigned>& expo) const {
    for (std::size_t k = 0; k < mons_.size(); ++k)
        if (mons_[k] == expo) return k;
    throw Error(ErrorCode::ValidationError, "MonomialBasis: exponent vector not in basis");
}

LieAlgebra so_pq(std::size_t p, std::size_t q) {
    const std::size_t n = p + q;
    if (n < 2) throw Error(ErrorCode::ValidationError, "so_pq: need p + q >= 2");
    std::vector<Mat<GaussRat>> basis;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            int si = i < p ? 1 : -1, sj = j < p ? 1 : -1;
            Mat<GaussRat> m(n, n);
            m(i, j) = GaussRat(1);
            m(j, i) = (si * sj == 1) ? GaussRat(-1) : GaussRat(1);
            basis.push_back(std::move(m));
        }
    return LieAlgebra(std::move(basis));
}

LieAlgebra sl_n(std::size_t n) {
    if (n < 2) throw Error(ErrorCode::ValidationError, "sl_n: need n >= 2");
    std::vector<Mat<GaussRat>> basis;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Mat<GaussRat> m(n, n);
        m(i + 1, i + 1) = GaussRat(1);
        m(i, i) = GaussRat(-1);
        basis.push_back(std::move(m));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            Mat<GaussRat> m(n, n);
            m(i, j) = GaussRat(1);
            basis.push_back(std::move(m));
        }
    return LieAlgebra(std::move(basis));
}

std::vector<Vec<GaussRat>> sl_default_cartan(const LieAlgebra& g, std::size_t n) {
    std::vector<Vec<GaussRat>> cart;
    // first element: diag(a_1..a_n) with a_i = 2(i-1) - (n-1), expressed over
    // the h_k = e_{k+1,k+1} - e_kk generators as t_k = -(a_1 + ... + a_k)
    Vec<GaussRat> c1(g.dim());
    long partial = 0;
    for (std::size_t k = 1; k < n; ++k) {
        partial += 2 * static_cast<long>(k - 1) - static_cast<long>(n - 1);
        c1[k - 1] = GaussRat(Rat(-partial));
    }
    cart.push_back(std::move(c1));
    for (std::size_t k = 0; k + 2 < n; ++k) {
        Vec<GaussRat> e(g.dim());
        e[k] = GaussRat(1);
        cart.push_back(std::move(e));
    }
    return cart;
}

Representation poly_rep(const LieAlgebra& g, const MonomialBasis& basis) {
    const std::size_t n = g.ambient_dim();
    const std::size_t N = basis.size();
    std::vector<Mat<GaussRat>> images;
    for (const Mat<GaussRat>& a : g.basis()) {
        Mat<GaussRat> m(N, N);
        for (std::size_t k = 0; k < N; ++k) {
            const std::vector<unsigned>& e = basis.exponents(k);
            for (std::size_t i = 0; i < n; ++i) {
                if (e[i] == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (a(i, j).is_zero()) continue;
                    // x_j d/dx_i on x^e
                    std::vector<unsigned> f = e;
                    --f[i];
                    ++f[j];
                    m(basis.index_of(f), k) += a(i, j) * GaussRat(Rat(static_cast<long>(e[i])));
                }
            }
        }
        images.push_back(std::move(m));
    }
    return Representation(g, std::move(images), /*anti=*/true);
}

Representation poly_rep(const LieAlgebra& g, std::size_t degree) {
    MonomialBasis basis(g.ambient_dim(), degree);
    return poly_rep(g, basis);
}

Representation endo_left_rep(const LieAlgebra& g) {
    const std::size_t n = g.ambient_dim();
    std::vector<Mat<GaussRat>> images;
    for (const Mat<GaussRat>& a : g.basis()) {
        Mat<GaussRat> m(n * n, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k)
                    if (!a(i, k).is_zero()) m(i * n + j, k * n + j) = a(i, k);
        images.push_back(std::move(m));
    }
    return Representation(g, std::move(images), /*anti=*/false);
}

Representation adjoint_rep(const LieAlgebra& g) {
    std::vector<Mat<GaussRat>> images;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        Vec<GaussRat> e(g.dim());
        e[k] = GaussRat(1);
        images.push_back(g.ad(e));
    }
    return Representation(g, std::move(images), /*anti=*/false);
}

Representation defining_rep(const LieAlgebra& g) {
    return Representation(g, g.basis(), /*anti=*/false);
}

Representation tensor_square_rep(const LieAlgebra& g) {
    const std::size_t n = g.ambient_dim();
    std::vector<Mat<GaussRat>> images;
    for (const Mat<GaussRat>& a : g.basis()) {
        // vector-field matrix on the x basis: V_A(x_k) = sum_j a_kj x_j
        Mat<GaussRat> p(n, n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) p(j, k) = a(k, j);
        Mat<GaussRat> m(n * n, n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < n; ++t) {
                    if (!p(t, i).is_zero()) m(t * n + j, i * n + j) += p(t, i);
                    if (!p(t, j).is_zero()) m(i * n + t, i * n + j) += p(t, j);
                }
        images.push_back(std::move(m));
    }
    return Representation(g, std::move(images), /*anti=*/true);
}

}  // namespace lierep
