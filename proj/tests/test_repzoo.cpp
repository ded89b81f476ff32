#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lierep/decomp.hpp"
#include "test_util.hpp"

using namespace lierep;
using namespace lierep::testutil;

namespace {

Mat<GaussRat> eij_minus_eji(std::size_t n, std::size_t i, std::size_t j) {
    Mat<GaussRat> m(n, n);
    m(i, j) = GaussRat(1);
    m(j, i) = GaussRat(-1);
    return m;
}

Mat<GaussRat> eij_plus_eji(std::size_t n, std::size_t i, std::size_t j) {
    Mat<GaussRat> m(n, n);
    m(i, j) = GaussRat(1);
    m(j, i) = GaussRat(1);
    return m;
}

}  // namespace

TEST_CASE("so(3) generator list") {
    LieAlgebra g = so_pq(3, 0);
    REQUIRE(g.dim() == 3);
    CHECK(g.basis()[0] == eij_minus_eji(3, 0, 1));
    CHECK(g.basis()[1] == eij_minus_eji(3, 0, 2));
    CHECK(g.basis()[2] == eij_minus_eji(3, 1, 2));
}

TEST_CASE("so(2,2) generator list matches the split form") {
    LieAlgebra g = so_pq(2, 2);
    REQUIRE(g.dim() == 6);
    CHECK(g.basis()[0] == eij_minus_eji(4, 0, 1));
    CHECK(g.basis()[1] == eij_plus_eji(4, 0, 2));
    CHECK(g.basis()[2] == eij_plus_eji(4, 0, 3));
    CHECK(g.basis()[3] == eij_plus_eji(4, 1, 2));
    CHECK(g.basis()[4] == eij_plus_eji(4, 1, 3));
    CHECK(g.basis()[5] == eij_minus_eji(4, 2, 3));
}

TEST_CASE("so(1,3) generator list") {
    LieAlgebra g = so_pq(1, 3);
    REQUIRE(g.dim() == 6);
    CHECK(g.basis()[0] == eij_plus_eji(4, 0, 1));
    CHECK(g.basis()[1] == eij_plus_eji(4, 0, 2));
    CHECK(g.basis()[2] == eij_plus_eji(4, 0, 3));
    CHECK(g.basis()[3] == eij_minus_eji(4, 1, 2));
    CHECK(g.basis()[4] == eij_minus_eji(4, 1, 3));
    CHECK(g.basis()[5] == eij_minus_eji(4, 2, 3));
}

TEST_CASE("so_pq rejects degenerate signatures") {
    CHECK_THROWS_AS(so_pq(1, 0), Error);
    CHECK_THROWS_AS(so_pq(0, 0), Error);
}

TEST_CASE("monomial basis ordering") {
    MonomialBasis b(3, 2);
    REQUIRE(b.size() == 6);
    using E = std::vector<unsigned>;
    CHECK(b.exponents(0) == E{2, 0, 0});
    CHECK(b.exponents(1) == E{1, 1, 0});
    CHECK(b.exponents(2) == E{1, 0, 1});
    CHECK(b.exponents(3) == E{0, 2, 0});
    CHECK(b.exponents(4) == E{0, 1, 1});
    CHECK(b.exponents(5) == E{0, 0, 2});
    CHECK(b.index_of({1, 0, 1}) == 2);
    // size is C(n + d - 1, d)
    CHECK(MonomialBasis(4, 3).size() == 20);
    CHECK(MonomialBasis(4, 4).size() == 35);
    CHECK(MonomialBasis(2, 5).size() == 6);
}

TEST_CASE("poly_rep of sl(2) in degree 1 is the transposed defining action") {
    LieAlgebra g = sl_n(2);
    Representation p1 = poly_rep(g, 1);
    CHECK(p1.is_anti());
    for (std::size_t k = 0; k < g.dim(); ++k)
        CHECK(p1.image(k) == g.basis()[k].transpose());
}

TEST_CASE("poly_rep of so(3) in degree 2: Cartan image eigenvalues") {
    LieAlgebra g = so_pq(3, 0);
    Representation rep = poly_rep(g, 2);
    // raw vector-field image of I = e1 has eigenvalues {±2i, ±i, 0} on the
    // complexified quadratics
    RootList rl = gauss_rational_roots(char_poly(rep.image(0)));
    REQUIRE(rl.full_degree);
    REQUIRE(rl.roots.size() == 5);
    GaussRat i = GaussRat::i();
    CHECK(rl.roots[0].first == GaussRat(Rat(0), Rat(-2)));
    CHECK(rl.roots[1].first == -i);
    CHECK(rl.roots[2].first == GaussRat(0));
    CHECK(rl.roots[2].second == 2);
    CHECK(rl.roots[3].first == i);
    CHECK(rl.roots[4].first == GaussRat(Rat(0), Rat(2)));
}

TEST_CASE("endo_left_rep is A (x) I with zero trace") {
    LieAlgebra g = so_pq(3, 0);
    Representation rep = endo_left_rep(g);
    CHECK(!rep.is_anti());
    CHECK(rep.space_dim() == 9);
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Mat<GaussRat>& a = g.basis()[k];
        const Mat<GaussRat>& m = rep.image(k);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                for (std::size_t s = 0; s < 3; ++s)
                    for (std::size_t t = 0; t < 3; ++t) {
                        GaussRat expect = (j == t) ? a(i, s) : GaussRat(0);
                        CHECK(m(i * 3 + j, s * 3 + t) == expect);
                    }
        CHECK(rep.image(k).trace().is_zero());
    }
}

TEST_CASE("adjoint_rep matches ad and has algebra dimension") {
    LieAlgebra g = so_pq(2, 2);
    Representation rep = adjoint_rep(g);
    CHECK(rep.space_dim() == 6);
    std::mt19937 rng(73);
    std::uniform_int_distribution<long> ci(-2, 2);
    for (int t = 0; t < 10; ++t) {
        Vec<GaussRat> x(6), y(6);
        for (auto& v : x) v = GaussRat(Rat(ci(rng)));
        for (auto& v : y) v = GaussRat(Rat(ci(rng)));
        CHECK(rep.image_of(x).apply(y) == g.bracket_coords(x, y));
    }
}

TEST_CASE("so(4) adjoint decomposes as 3 + 3, so(3) adjoint stays irreducible") {
    {
        LieAlgebra g = so_pq(4, 0);
        CartanSubalgebra c(g, {unit_vec(6, 0), unit_vec(6, 5)});
        DecompositionReport r = decompose(adjoint_rep(g), g, c);
        REQUIRE(r.components.size() == 2);
        CHECK(r.components[0].dim() == 3);
        CHECK(r.components[1].dim() == 3);
    }
    {
        LieAlgebra g = so_pq(3, 0);
        CartanSubalgebra c(g, {unit_vec(3, 0)});
        DecompositionReport r = decompose(adjoint_rep(g), g, c);
        REQUIRE(r.components.size() == 1);
        CHECK(r.components[0].dim() == 3);
    }
}

TEST_CASE("tensor square of sl(2): 3 + 1") {
    LieAlgebra g = sl_n(2);
    CartanSubalgebra c(g, sl_default_cartan(g, 2));
    Representation rep = tensor_square_rep(g);
    DecompositionReport r = decompose(rep, g, c);
    std::vector<std::size_t> dims;
    for (const auto& comp : r.components) dims.push_back(comp.dim());
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::size_t>{1, 3});
    CHECK(r.checks.all_ok());
}

TEST_CASE("builders verify their own structure") {
    // all builders pass construction-time closure and homomorphism checks,
    // and the claimed-semisimple algebras have nonsingular Killing forms
    for (auto [p, q] : {std::pair<int, int>{3, 0}, {4, 0}, {1, 3}, {2, 2}, {2, 3}}) {
        LieAlgebra g = so_pq(p, q);
        CHECK(g.is_semisimple());
    }
    CHECK(sl_n(2).is_semisimple());
    CHECK(sl_n(3).is_semisimple());
}
