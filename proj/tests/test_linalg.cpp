#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"

using namespace lierep;
using namespace lierep::testutil;

namespace {

const GaussRat I = GaussRat::i();

Mat<GaussRat> kron_with_identity(const Mat<GaussRat>& a, std::size_t n) {
    // a (x) I_n in the row-major e_ij frame
    Mat<GaussRat> m(a.rows() * n, a.cols() * n);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k)
            if (!a(i, k).is_zero())
                for (std::size_t j = 0; j < n; ++j) m(i * n + j, k * n + j) = a(i, k);
    return m;
}

Mat<GaussRat> so3_X() {
    // J - i K for J = e23 - e32, K = e13 - e31
    Mat<GaussRat> x(3, 3);
    x(0, 2) = -I;
    x(1, 2) = GaussRat(1);
    x(2, 0) = I;
    x(2, 1) = GaussRat(-1);
    return x;
}

Mat<GaussRat> so3_Y() {
    // the normalized opposite root vector, -(J + i K)
    Mat<GaussRat> y(3, 3);
    y(0, 2) = -I;
    y(1, 2) = GaussRat(-1);
    y(2, 0) = I;
    y(2, 1) = GaussRat(1);
    return y;
}

}  // namespace

TEST_CASE("rref and nullspace basics") {
    Mat<GaussRat> id3 = Mat<GaussRat>::identity(3);
    CHECK(nullspace(id3).dim() == 0);
    Mat<GaussRat> z22(2, 2);
    CHECK(nullspace(z22).dim() == 2);
    std::mt19937 rng(37);
    for (int k = 0; k < 50; ++k) {
        Mat<GaussRat> m = random_matrix(rng, 4, 5);
        Subspace<GaussRat> ns = nullspace(m);
        CHECK(rank(m) + ns.dim() == 5);
        for (std::size_t t = 0; t < ns.dim(); ++t)
            CHECK(vec_is_zero(m.apply(ns.basis().row(t))));
    }
}

TEST_CASE("null space of X acting on End(C^3) by left multiplication") {
    Mat<GaussRat> rho_x = kron_with_identity(so3_X(), 3);
    Subspace<GaussRat> ns = nullspace(rho_x);
    REQUIRE(ns.dim() == 3);
    // e_1j + i e_2j, row-major index (i, j) -> 3 i + j
    for (std::size_t j = 0; j < 3; ++j) {
        Vec<GaussRat> v(9);
        v[0 + j] = GaussRat(1);
        v[3 + j] = I;
        CHECK(ns.contains_vec(v));
    }
}

TEST_CASE("subspace equality is canonical-form equality") {
    std::mt19937 rng(41);
    for (int k = 0; k < 50; ++k) {
        Mat<GaussRat> m = random_matrix(rng, 3, 6);
        std::vector<Vec<GaussRat>> rows{m.row(0), m.row(1), m.row(2)};
        std::vector<Vec<GaussRat>> shuffled{m.row(2), m.row(0), m.row(1)};
        // also rescale a row
        shuffled[0] = vec_scale(GaussRat(Rat(3, 2)), shuffled[0]);
        CHECK(Subspace<GaussRat>(6, rows) == Subspace<GaussRat>(6, shuffled));
    }
}

TEST_CASE("subspace lattice operations") {
    Subspace<GaussRat> s(3, std::vector<Vec<GaussRat>>{unit_vec(3, 0)});
    Subspace<GaussRat> t(3, std::vector<Vec<GaussRat>>{unit_vec(3, 1)});
    CHECK(s.sum(s) == s);
    CHECK(s.intersect(t).dim() == 0);
    CHECK(s.sum(t).dim() == 2);
    CHECK_THROWS_AS(s.sum(Subspace<GaussRat>(4)), Error);
    // Grassmann identity on random subspaces
    std::mt19937 rng(43);
    for (int k = 0; k < 30; ++k) {
        Subspace<GaussRat> a(5, random_matrix(rng, 2, 5));
        Subspace<GaussRat> b(5, random_matrix(rng, 3, 5));
        CHECK(a.sum(b).dim() + a.intersect(b).dim() == a.dim() + b.dim());
        CHECK(a.sum(b).contains(a));
        CHECK(a.contains(a.intersect(b)));
    }
}

TEST_CASE("exp_nilpotent") {
    Mat<GaussRat> z(3, 3);
    CHECK(exp_nilpotent(z) == Mat<GaussRat>::identity(3));
    Mat<GaussRat> e12(2, 2);
    e12(0, 1) = GaussRat(1);
    Mat<GaussRat> expected = Mat<GaussRat>::identity(2);
    expected(0, 1) = GaussRat(1);
    CHECK(exp_nilpotent(e12) == expected);
    CHECK_THROWS_AS(exp_nilpotent(Mat<GaussRat>::identity(2)), Error);
    // inverse property on random strictly upper triangular matrices
    std::mt19937 rng(47);
    for (int k = 0; k < 30; ++k) {
        Mat<GaussRat> m(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j) m(i, j) = random_gauss(rng, 3);
        CHECK(exp_nilpotent(m) * exp_nilpotent(-m) == Mat<GaussRat>::identity(4));
    }
}

TEST_CASE("so(3) reflection representative in the defining representation") {
    Mat<GaussRat> w =
        exp_nilpotent(so3_X()) * exp_nilpotent(-so3_Y()) * exp_nilpotent(so3_X());
    Mat<GaussRat> expected(3, 3);
    expected(0, 0) = GaussRat(1);
    expected(1, 1) = GaussRat(-1);
    expected(2, 2) = GaussRat(-1);
    CHECK(w == expected);
}

TEST_CASE("linearly_dependent") {
    Vec<GaussRat> v{GaussRat(1), GaussRat(2), GaussRat(Rat(1, 3))};
    CHECK(linearly_dependent(v, vec_scale(GaussRat(2), v)));
    CHECK(!linearly_dependent(unit_vec(3, 0), unit_vec(3, 1)));
    Vec<GaussRat> zero(3);
    CHECK_THROWS_AS(linearly_dependent(v, zero), Error);
}

TEST_CASE("real_points") {
    // span{(1, i)} + span{(1, -i)} has real points e1, e2
    Vec<GaussRat> a{GaussRat(1), I}, b{GaussRat(1), -I};
    Subspace<GaussRat> s(2, std::vector<Vec<GaussRat>>{a, b});
    Subspace<GaussRat> rp = real_points(s);
    CHECK(rp == Subspace<GaussRat>::full(2));
    // full ambient space
    CHECK(real_points(Subspace<GaussRat>::full(4)) == Subspace<GaussRat>::full(4));
    // a non-self-conjugate space is rejected
    Subspace<GaussRat> bad(2, std::vector<Vec<GaussRat>>{a});
    CHECK_THROWS_AS(real_points(bad), Error);
}

TEST_CASE("real_points over a quadratic extension") {
    // the same computation goes through with scalars in Q(i, sqrt(2))
    Rat disc(2);
    auto lift = [&](const GaussRat& g) { return QuadExt(g); };
    Vec<QuadExt> a{lift(GaussRat(1)), lift(I)}, b{lift(GaussRat(1)), lift(-I)};
    Subspace<QuadExt> s(2, std::vector<Vec<QuadExt>>{a, b});
    CHECK(real_points(s).dim() == 2);
}
