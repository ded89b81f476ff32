#include "lierep/json_io.hpp"

#include <nlohmann/json.hpp>

namespace lierep {

using nlohmann::json;

json matrix_to_json(const Mat<GaussRat>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

Mat<GaussRat> matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty())
        throw Error(ErrorCode::ParseError, "matrix: expected nonempty array of rows");
    std::size_t rows = j.size(), cols = j[0].size();
    Mat<GaussRat> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols)
            throw Error(ErrorCode::ParseError, "matrix: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) {
            const json& cell = j[i][c];
            std::optional<GaussRat> v;
            if (cell.is_number_integer()) v = GaussRat(Rat(cell.get<long>()));
            else if (cell.is_string()) v = GaussRat::parse(cell.get<std::string>());
            if (!v)
                throw Error(ErrorCode::ParseError,
                            "matrix: bad scalar at row " + std::to_string(i));
            m(i, c) = *v;
        }
    }
    return m;
}

AlgebraInput algebra_from_json(const json& j) {
    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw Error(ErrorCode::ParseError, "algebra: missing generators");
    AlgebraInput in;
    for (const json& gj : j["generators"]) in.generators.push_back(matrix_from_json(gj));
    std::size_t n = in.generators[0].rows();
    if (j.contains("n") && j["n"].get<std::size_t>() != n)
        throw Error(ErrorCode::ParseError, "algebra: n does not match generator shape");
    for (const auto& m : in.generators)
        if (m.rows() != n || m.cols() != n)
            throw Error(ErrorCode::ParseError, "algebra: generators must be square, equal size");
    std::size_t d = in.generators.size();
    if (j.contains("cartan")) {
        for (const json& cj : j["cartan"]) {
            if (cj.is_number_integer()) {
                long idx = cj.get<long>();
                if (idx < 1 || static_cast<std::size_t>(idx) > d)
                    throw Error(ErrorCode::ParseError, "algebra: cartan index out of range");
                Vec<GaussRat> e(d);
                e[idx - 1] = GaussRat(1);
                in.cartan.push_back(std::move(e));
            } else if (cj.is_array()) {
                if (cj.size() != d)
                    throw Error(ErrorCode::ParseError, "algebra: cartan coefficient length");
                Vec<GaussRat> e(d);
                for (std::size_t k = 0; k < d; ++k) {
                    const json& cell = cj[k];
                    std::optional<GaussRat> v;
                    if (cell.is_number_integer()) v = GaussRat(Rat(cell.get<long>()));
                    else if (cell.is_string()) v = GaussRat::parse(cell.get<std::string>());
                    if (!v || !v->is_real())
                        throw Error(ErrorCode::ParseError, "algebra: cartan coefficients");
                    e[k] = *v;
                }
                in.cartan.push_back(std::move(e));
            } else {
                throw Error(ErrorCode::ParseError, "algebra: cartan entries");
            }
        }
    }
    return in;
}

RepInput rep_from_json(const json& j) {
    if (!j.contains("generators") || !j["generators"].is_array())
        throw Error(ErrorCode::ParseError, "rep: missing generators");
    RepInput in;
    for (const json& gj : j["generators"]) in.images.push_back(matrix_from_json(gj));
    if (j.contains("anti")) in.anti = j["anti"].get<bool>();
    return in;
}

namespace {

json weight_to_json(const Vec<GaussRat>& w) {
    json out = json::array();
    for (const GaussRat& x : w) out.push_back(x.str());
    return out;
}

}  // namespace

json report_to_json(const DecompositionReport& report, const LieAlgebra& g,
                    const CartanSubalgebra& c) {
    json out;
    out["space_dim"] = report.omega_rho_matrix.rows();
    json word;
    word["letters"] = report.word.letters;
    word["omega_defining"] = matrix_to_json(report.word.omega_defining);
    word["omega_adjoint"] = matrix_to_json(report.word.omega_adjoint);
    out["weyl_word"] = std::move(word);
    out["omega_rho"] = matrix_to_json(report.omega_rho_matrix);
    json orbits = json::array();
    for (const ThetaOrbit& orb : report.orbits) {
        json o;
        o["representative"] = weight_to_json(orb.representative);
        o["length"] = orb.length();
        if (orb.partner) o["partner"] = weight_to_json(*orb.partner);
        orbits.push_back(std::move(o));
    }
    out["theta_orbits"] = std::move(orbits);
    json isos = json::array();
    for (const IsotypicalComponent& ic : report.isotypicals) {
        json o;
        o["weight"] = weight_to_json(ic.weight);
        o["multiplicity"] = ic.hw_space.dim();
        o["hw_basis"] = matrix_to_json(ic.hw_space.basis());
        isos.push_back(std::move(o));
    }
    out["isotypical_components"] = std::move(isos);
    json comps = json::array();
    for (const RealComponent& comp : report.components) {
        json o;
        o["dim"] = comp.dim();
        o["case"] = case_tag_name(comp.case_tag);
        json ws = json::array();
        for (const auto& w : comp.weights) ws.push_back(weight_to_json(w));
        o["weights"] = std::move(ws);
        o["basis"] = matrix_to_json(comp.basis.basis());
        json seeds = json::array();
        for (const auto& s : comp.seed_vectors) seeds.push_back(weight_to_json(s));
        o["seeds"] = std::move(seeds);
        if (comp.seed_part_swapped) o["seed_part_swapped"] = true;
        if (comp.sqrt_disc_flagged) {
            o["sqrt_disc"] = comp.disc.str();
            json sq = json::array();
            for (const auto& r : comp.basis_sqrt_part) sq.push_back(weight_to_json(r));
            o["basis_sqrt_part"] = std::move(sq);
        }
        comps.push_back(std::move(o));
    }
    out["components"] = std::move(comps);
    json checks;
    checks["ran"] = report.checks.ran;
    checks["components_invariant"] = report.checks.components_invariant;
    checks["dims_complete"] = report.checks.dims_complete;
    checks["intersections_zero"] = report.checks.intersections_zero;
    checks["spanning_ok"] = report.checks.spanning_ok;
    checks["weyl_dims_ok"] = report.checks.weyl_dims_ok;
    checks["failures"] = report.checks.failures;
    out["checks"] = std::move(checks);
    return out;
}

ParsedReport report_from_json(const json& j) {
    ParsedReport out;
    for (const json& comp : j.at("components")) {
        out.case_tags.push_back(comp.at("case").get<std::string>());
        out.dims.push_back(comp.at("dim").get<std::size_t>());
        out.bases.push_back(matrix_from_json(comp.at("basis")));
        std::vector<std::string> ws;
        for (const json& w : comp.at("weights"))
            for (const json& x : w) ws.push_back(x.get<std::string>());
        out.weights.push_back(std::move(ws));
    }
    for (const json& l : j.at("weyl_word").at("letters"))
        out.word_letters.push_back(l.get<std::size_t>());
    out.omega_defining = matrix_from_json(j.at("weyl_word").at("omega_defining"));
    out.checks_ok = j.at("checks").at("ran").get<bool>() &&
                    j.at("checks").at("failures").empty();
    return out;
}

}  // namespace lierep
