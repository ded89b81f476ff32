#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace lierep;
using namespace lierep::testutil;

namespace {

const GaussRat I = GaussRat::i();

// test-only oracle: characteristic polynomial by cofactor expansion of tI - A
// over polynomials
using PolyVec = std::vector<GaussRat>;

PolyVec pmul(const PolyVec& a, const PolyVec& b) {
    PolyVec out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

PolyVec padd(PolyVec a, const PolyVec& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

PolyVec pscale(const GaussRat& c, PolyVec a) {
    for (auto& x : a) x *= c;
    return a;
}

PolyVec cofactor_charpoly(const std::vector<std::vector<PolyVec>>& m) {
    const std::size_t n = m.size();
    if (n == 1) return m[0][0];
    PolyVec det{GaussRat(0)};
    GaussRat sign(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<std::vector<PolyVec>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<PolyVec> row;
            for (std::size_t j = 0; j < n; ++j)
                if (j != k) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        det = padd(det, pscale(sign, pmul(m[0][k], cofactor_charpoly(minor))));
        sign = -sign;
    }
    return det;
}

Poly charpoly_oracle(const Mat<GaussRat>& a) {
    const std::size_t n = a.rows();
    std::vector<std::vector<PolyVec>> m(n, std::vector<PolyVec>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) m[i][j] = PolyVec{-a(i, j), GaussRat(1)};
            else m[i][j] = PolyVec{-a(i, j)};
        }
    return Poly(cofactor_charpoly(m));
}

}  // namespace

TEST_CASE("char_poly on small fixed matrices") {
    Mat<GaussRat> d(2, 2);
    d(0, 0) = GaussRat(1);
    d(1, 1) = GaussRat(2);
    // (t-1)(t-2) = 2 - 3t + t^2
    CHECK(char_poly(d) == Poly({GaussRat(2), GaussRat(-3), GaussRat(1)}));
    Mat<GaussRat> jordan(3, 3);
    jordan(0, 1) = GaussRat(1);
    jordan(1, 2) = GaussRat(1);
    CHECK(char_poly(jordan) == Poly({GaussRat(0), GaussRat(0), GaussRat(0), GaussRat(1)}));
}

TEST_CASE("char_poly agrees with the cofactor oracle") {
    std::mt19937 rng(53);
    for (std::size_t n = 1; n <= 5; ++n)
        for (int k = 0; k < 12; ++k) {
            Mat<GaussRat> m = random_matrix(rng, n, n, 3);
            CHECK(char_poly(m) == charpoly_oracle(m));
        }
}

TEST_CASE("gauss_rational_roots on fixed polynomials") {
    // t^2 + 1
    RootList rl = gauss_rational_roots(Poly({GaussRat(1), GaussRat(0), GaussRat(1)}));
    CHECK(rl.full_degree);
    REQUIRE(rl.roots.size() == 2);
    CHECK(rl.roots[0].first == -I);
    CHECK(rl.roots[1].first == I);
    // t^2 - 2 has no Gaussian rational roots
    RootList r2 = gauss_rational_roots(Poly({GaussRat(-2), GaussRat(0), GaussRat(1)}));
    CHECK(!r2.full_degree);
    CHECK(r2.roots.empty());
    // mixed: t^3 - 2t = t (t^2 - 2)
    RootList r3 =
        gauss_rational_roots(Poly({GaussRat(0), GaussRat(-2), GaussRat(0), GaussRat(1)}));
    CHECK(!r3.full_degree);
    REQUIRE(r3.roots.size() == 1);
    CHECK(r3.roots[0].first == GaussRat(0));
}

TEST_CASE("gauss_rational_roots handles rational and Gaussian coefficients") {
    // (t - 1/2)(t - 3) = t^2 - 7/2 t + 3/2
    RootList rl =
        gauss_rational_roots(Poly({GaussRat(Rat(3, 2)), GaussRat(Rat(-7, 2)), GaussRat(1)}));
    CHECK(rl.full_degree);
    REQUIRE(rl.roots.size() == 2);
    CHECK(rl.roots[0].first == GaussRat(Rat(1, 2)));
    CHECK(rl.roots[1].first == GaussRat(Rat(3)));
    // (t - (1+i))^2
    Poly p({GaussRat(Rat(0), Rat(2)), GaussRat(Rat(-2), Rat(-2)), GaussRat(1)});
    RootList r2 = gauss_rational_roots(p);
    CHECK(r2.full_degree);
    REQUIRE(r2.roots.size() == 1);
    CHECK(r2.roots[0].first == GaussRat(Rat(1), Rat(1)));
    CHECK(r2.roots[0].second == 2);
}

TEST_CASE("roots of the bidiagonal Cartan matrix on degree-4 invariants") {
    // I1(e_ab) = -a e_ab - 2b e_{a+2, b-1} on the basis e_40, e_21, e_02
    Mat<GaussRat> m(3, 3);
    m(0, 0) = GaussRat(-4);
    m(0, 1) = GaussRat(-2);
    m(1, 1) = GaussRat(-2);
    m(1, 2) = GaussRat(-4);
    RootList rl = gauss_rational_roots(char_poly(m));
    CHECK(rl.full_degree);
    REQUIRE(rl.roots.size() == 3);
    CHECK(rl.roots[0].first == GaussRat(-4));
    CHECK(rl.roots[1].first == GaussRat(-2));
    CHECK(rl.roots[2].first == GaussRat(0));
}

TEST_CASE("random roots round trip") {
    std::mt19937 rng(59);
    std::uniform_int_distribution<long> small(-4, 4);
    for (int k = 0; k < 40; ++k) {
        // build a polynomial from known Gaussian-integer roots
        std::vector<GaussRat> roots;
        PolyVec p{GaussRat(1)};
        for (int t = 0; t < 4; ++t) {
            GaussRat r(Rat(small(rng)), Rat(small(rng)));
            roots.push_back(r);
            p = pmul(p, PolyVec{-r, GaussRat(1)});
        }
        RootList rl = gauss_rational_roots(Poly(p));
        CHECK(rl.full_degree);
        std::size_t total = 0;
        for (auto& [r, m] : rl.roots) {
            total += m;
            std::size_t expected = 0;
            for (const GaussRat& x : roots)
                if (x == r) ++expected;
            CHECK(m == expected);
        }
        CHECK(total == 4);
    }
}

TEST_CASE("simultaneous eigenspaces, single operator") {
    Mat<GaussRat> d(2, 2);
    d(0, 0) = GaussRat(1);
    d(1, 1) = GaussRat(2);
    auto blocks = simultaneous_eigenspaces({d}, Subspace<GaussRat>::full(2));
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0].values[0] == GaussRat(1));
    CHECK(blocks[0].space.dim() == 1);
    CHECK(blocks[1].values[0] == GaussRat(2));
}

TEST_CASE("simultaneous eigenspaces error paths") {
    // eigenvalues outside Q(i)
    Mat<GaussRat> m(2, 2);
    m(0, 1) = GaussRat(1);
    m(1, 0) = GaussRat(2);
    CHECK_THROWS_WITH_AS(
        (void)simultaneous_eigenspaces({m}, Subspace<GaussRat>::full(2)),
        doctest::Contains("split"), Error);
    // non-semisimple operator
    Mat<GaussRat> jordan(2, 2);
    jordan(0, 1) = GaussRat(1);
    CHECK_THROWS_AS((void)simultaneous_eigenspaces({jordan}, Subspace<GaussRat>::full(2)),
                    Error);
    // non-commuting family
    Mat<GaussRat> a(2, 2), b(2, 2);
    a(0, 1) = GaussRat(1);
    b(1, 0) = GaussRat(1);
    try {
        simultaneous_eigenspaces({a, b}, Subspace<GaussRat>::full(2));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotCommuting);
    }
}

TEST_CASE("block decomposition is a direct sum filling the ambient space") {
    std::mt19937 rng(61);
    for (int k = 0; k < 20; ++k) {
        // conjugate a pair of commuting integer-diagonal matrices
        std::uniform_int_distribution<long> ev(-2, 2);
        Mat<GaussRat> d1(4, 4), d2(4, 4);
        for (std::size_t t = 0; t < 4; ++t) {
            d1(t, t) = GaussRat(Rat(ev(rng)));
            d2(t, t) = GaussRat(Rat(ev(rng)));
        }
        auto blocks = simultaneous_eigenspaces({d1, d2}, Subspace<GaussRat>::full(4));
        std::size_t total = 0;
        for (auto& b : blocks) {
            total += b.space.dim();
            // each block is a genuine eigenspace for both operators
            for (std::size_t r = 0; r < b.space.dim(); ++r) {
                Vec<GaussRat> v = b.space.basis().row(r);
                CHECK(vec_is_zero(vec_sub(d1.apply(v), vec_scale(b.values[0], v))));
                CHECK(vec_is_zero(vec_sub(d2.apply(v), vec_scale(b.values[1], v))));
            }
        }
        CHECK(total == 4);
    }
}
