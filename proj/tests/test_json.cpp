#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "lierep/json_io.hpp"
#include "test_util.hpp"

using namespace lierep;
using namespace lierep::testutil;
using nlohmann::json;

TEST_CASE("matrix json round trip") {
    std::mt19937 rng(79);
    for (int k = 0; k < 30; ++k) {
        Mat<GaussRat> m = random_matrix(rng, 3, 4, 9);
        CHECK(matrix_from_json(matrix_to_json(m)) == m);
    }
}

TEST_CASE("matrix json accepts integers and rejects junk") {
    json ok = json::parse(R"([[1, "1/2"], ["-3/4i", "1/2+1/3i"]])");
    Mat<GaussRat> m = matrix_from_json(ok);
    CHECK(m(0, 0) == GaussRat(1));
    CHECK(m(0, 1) == GaussRat(Rat(1, 2)));
    CHECK(m(1, 0) == GaussRat(Rat(0), Rat(-3, 4)));
    CHECK(m(1, 1) == GaussRat(Rat(1, 2), Rat(1, 3)));
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["zzz"]])")), Error);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1],[1,2]])")), Error);
}

TEST_CASE("algebra payload with index and coefficient cartans") {
    json j;
    j["n"] = 3;
    j["generators"] = json::array();
    LieAlgebra g = so_pq(3, 0);
    for (const auto& b : g.basis()) j["generators"].push_back(matrix_to_json(b));
    j["cartan"] = json::array({1});
    AlgebraInput in = algebra_from_json(j);
    CHECK(in.generators.size() == 3);
    REQUIRE(in.cartan.size() == 1);
    CHECK(in.cartan[0] == unit_vec(3, 0));
    // coefficient-vector form
    j["cartan"] = json::array({json::array({"1/2", 0, 0})});
    AlgebraInput in2 = algebra_from_json(j);
    CHECK(in2.cartan[0][0] == GaussRat(Rat(1, 2)));
    // out-of-range index
    j["cartan"] = json::array({7});
    CHECK_THROWS_AS(algebra_from_json(j), Error);
}

TEST_CASE("decomposition report round trips through json") {
    LieAlgebra g = so_pq(3, 0);
    CartanSubalgebra c(g, {unit_vec(3, 0)});
    Representation rep = poly_rep(g, 2);
    DecompositionReport report = decompose(rep, g, c);
    json j = report_to_json(report, g, c);
    ParsedReport parsed = report_from_json(j);
    REQUIRE(parsed.dims.size() == report.components.size());
    for (std::size_t k = 0; k < parsed.dims.size(); ++k) {
        CHECK(parsed.dims[k] == report.components[k].dim());
        CHECK(parsed.case_tags[k] == case_tag_name(report.components[k].case_tag));
        CHECK(parsed.bases[k] == report.components[k].basis.basis());
    }
    CHECK(parsed.word_letters == report.word.letters);
    CHECK(parsed.omega_defining == report.word.omega_defining);
    CHECK(parsed.checks_ok);
    // a second emit of the parsed content is identical
    CHECK(report_to_json(report, g, c) == j);
}

TEST_CASE("text and json outputs carry the same component bases") {
    LieAlgebra g = so_pq(1, 3);
    CartanSubalgebra c(g, {unit_vec(6, 0), unit_vec(6, 5)});
    Representation rep = adjoint_rep(g);
    DecompositionReport report = decompose(rep, g, c);
    json j = report_to_json(report, g, c);
    ParsedReport parsed = report_from_json(j);
    for (std::size_t k = 0; k < report.components.size(); ++k) {
        Subspace<GaussRat> from_json(report.components[k].basis.ambient_dim(),
                                     parsed.bases[k]);
        CHECK(from_json == report.components[k].basis);
    }
}
