#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "lierep/decomp.hpp"
#include "lierep/repzoo.hpp"

namespace lierep {

/// Wire format for matrices: rows of scalar strings ("a/b" / "a/b+c/di").
nlohmann::json matrix_to_json(const Mat<GaussRat>& m);
Mat<GaussRat> matrix_from_json(const nlohmann::json& j);

/// Algebra / representation payload:
///   {"n": int, "generators": [[[scalar, ...], ...], ...], "cartan": [...]}
/// cartan entries are 1-based generator indices or coefficient vectors.
struct AlgebraInput {
    std::vector<Mat<GaussRat>> generators;
    std::vector<Vec<GaussRat>> cartan;  // coordinates over the generators
};
AlgebraInput algebra_from_json(const nlohmann::json& j);

struct RepInput {
    std::vector<Mat<GaussRat>> images;
    bool anti = false;
};
RepInput rep_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DecompositionReport& report, const LieAlgebra& g,
                              const CartanSubalgebra& c);

/// Structural parse of an emitted report, for round-trip checks and the
/// `check` command.
struct ParsedReport {
    std::vector<std::string> case_tags;
    std::vector<std::size_t> dims;
    std::vector<Mat<GaussRat>> bases;
    std::vector<std::vector<std::string>> weights;
    std::vector<std::size_t> word_letters;
    Mat<GaussRat> omega_defining;
    bool checks_ok = false;
};
ParsedReport report_from_json(const nlohmann::json& j);

}  // namespace lierep
