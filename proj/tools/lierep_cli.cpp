#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "lierep/json_io.hpp"

using namespace lierep;
using nlohmann::json;

namespace {

struct JobSpec {
    std::string command;
    std::string algebra;
    std::string cartan;
    std::string rep = "defining";
    std::string out = "text";
    bool verify = true;
    SeedOrder order = SeedOrder::by_pivot;
};

Vec<GaussRat> unit_vec(std::size_t d, std::size_t k) {
    Vec<GaussRat> e(d);
    e[k] = GaussRat(1);
    return e;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    json j;
    in >> j;
    return j;
}

struct BuiltAlgebra {
    LieAlgebra g;
    std::vector<Vec<GaussRat>> default_cartan;
    std::string name;
};

BuiltAlgebra build_algebra(const std::string& spec) {
    auto parse_pair = [&](const std::string& body) {
        std::size_t comma = body.find(',');
        if (comma == std::string::npos) return std::pair<long, long>{std::stol(body), 0};
        return std::pair<long, long>{std::stol(body.substr(0, comma)),
                                     std::stol(body.substr(comma + 1))};
    };
    if (spec.rfind("so(", 0) == 0 && spec.back() == ')') {
        auto [p, q] = parse_pair(spec.substr(3, spec.size() - 4));
        if (p < 0 || q < 0) throw Error(ErrorCode::ParseError, "bad signature " + spec);
        LieAlgebra g = so_pq(static_cast<std::size_t>(p), static_cast<std::size_t>(q));
        std::vector<Vec<GaussRat>> cart;
        std::size_t d = g.dim();
        if (p + q == 3) cart = {unit_vec(d, 0)};
        else if (p == 4 && q == 0) cart = {unit_vec(d, 0), unit_vec(d, 5)};
        else if (p == 1 && q == 3) cart = {unit_vec(d, 0), unit_vec(d, 5)};
        else if (p == 2 && q == 2) cart = {unit_vec(d, 1), unit_vec(d, 4)};
        return BuiltAlgebra{std::move(g), std::move(cart), spec};
    }
    if (spec.rfind("sl(", 0) == 0 && spec.back() == ')') {
        long n = std::stol(spec.substr(3, spec.size() - 4));
        if (n < 2) throw Error(ErrorCode::ParseError, "bad rank " + spec);
        LieAlgebra g = sl_n(static_cast<std::size_t>(n));
        std::vector<Vec<GaussRat>> cart = sl_default_cartan(g, static_cast<std::size_t>(n));
        return BuiltAlgebra{std::move(g), std::move(cart), spec};
    }
    // otherwise: a JSON file with generators (+ optional cartan)
    json j = load_json_file(spec);
    AlgebraInput in = algebra_from_json(j);
    LieAlgebra g{std::move(in.generators)};
    return BuiltAlgebra{std::move(g), std::move(in.cartan), spec};
}

std::vector<Vec<GaussRat>> parse_cartan(const std::string& s, std::size_t dim) {
    std::vector<Vec<GaussRat>> out;
    if (s.empty()) return out;
    if (s.front() == '(') {
        // coefficient vectors "(a,b,...);(...)"
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
            if (tok.size() < 2 || tok.front() != '(' || tok.back() != ')')
                throw Error(ErrorCode::ParseError, "bad cartan vector " + tok);
            Vec<GaussRat> v(dim);
            std::stringstream inner(tok.substr(1, tok.size() - 2));
            std::string cell;
            std::size_t k = 0;
            while (std::getline(inner, cell, ',')) {
                if (k >= dim) throw Error(ErrorCode::ParseError, "cartan vector too long");
                auto r = Rat::parse(cell);
                if (!r) throw Error(ErrorCode::ParseError, "bad coefficient " + cell);
                v[k++] = GaussRat(*r);
            }
            if (k != dim) throw Error(ErrorCode::ParseError, "cartan vector too short");
            out.push_back(std::move(v));
        }
        return out;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty() && tok.front() == 'e') tok = tok.substr(1);
        long idx = std::stol(tok);
        if (idx < 1 || static_cast<std::size_t>(idx) > dim)
            throw Error(ErrorCode::ParseError, "cartan index out of range: " + tok);
        out.push_back(unit_vec(dim, static_cast<std::size_t>(idx - 1)));
    }
    return out;
}

Representation build_rep(const std::string& kind, const LieAlgebra& g) {
    if (kind == "defining") return defining_rep(g);
    if (kind == "adjoint") return adjoint_rep(g);
    if (kind == "end-left") return endo_left_rep(g);
    if (kind == "tensor2") return tensor_square_rep(g);
    if (kind.rfind("poly:", 0) == 0) {
        long d = std::stol(kind.substr(5));
        if (d < 1) throw Error(ErrorCode::ParseError, "poly degree must be >= 1");
        return poly_rep(g, static_cast<std::size_t>(d));
    }
    if (kind.rfind("inline:", 0) == 0) {
        RepInput in = rep_from_json(load_json_file(kind.substr(7)));
        return Representation(g, std::move(in.images), in.anti);
    }
    throw Error(ErrorCode::ParseError, "unknown representation kind " + kind);
}

std::string weight_str(const Vec<GaussRat>& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + w[k].str();
    return s + ")";
}

void print_matrix(std::ostream& os, const Mat<GaussRat>& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j).str();
        os << "]\n";
    }
}

int run(const JobSpec& spec) {
    BuiltAlgebra built = build_algebra(spec.algebra);
    std::vector<Vec<GaussRat>> cart =
        spec.cartan.empty() ? built.default_cartan : parse_cartan(spec.cartan, built.g.dim());
    if (cart.empty())
        throw Error(ErrorCode::ValidationError,
                    "no Cartan subalgebra given and no default for " + built.name);
    CartanSubalgebra c(built.g, cart);

    if (spec.command == "info") {
        std::cout << "algebra " << built.name << ": ambient gl(" << built.g.ambient_dim()
                  << "), dimension " << built.g.dim() << "\n";
        std::cout << "semisimple (Killing form nonsingular): "
                  << (built.g.is_semisimple() ? "yes" : "no") << "\n";
        std::cout << "cartan rank: " << c.rank() << "\n";
        return 0;
    }

    RootSystem rs = build_root_system(built.g, c);
    if (spec.command == "roots") {
        auto perm = conjugation_permutation(rs.roots);
        for (std::size_t k = 0; k < rs.roots.size(); ++k) {
            const Root& r = rs.roots[k];
            bool simple = false;
            for (const Root& s : rs.simples)
                if (s.values == r.values) simple = true;
            std::cout << weight_str(r.values)
                      << (r.sign == RootSign::positive ? " positive" : " negative")
                      << (simple ? " simple" : "") << "  sigma-> "
                      << weight_str(rs.roots[perm[k]].values) << "\n";
        }
        return 0;
    }

    Representation rep = build_rep(spec.rep, built.g);
    WeylWord word = borel_matching_word(built.g, c, rs);

    if (spec.command == "omega") {
        std::cout << "word length " << word.letters.size() << ", letters:";
        for (std::size_t bi : word.letters)
            std::cout << " " << weight_str(rs.simples[bi].values);
        std::cout << "\nomega (defining):\n";
        print_matrix(std::cout, word.omega_defining, "  ");
        std::cout << "omega (adjoint):\n";
        print_matrix(std::cout, word.omega_adjoint, "  ");
        std::cout << "omega_rho:\n";
        print_matrix(std::cout, omega_rho(rep, word, rs), "  ");
        return 0;
    }

    if (spec.command == "weights") {
        auto iso = highest_weights(rep, c, rs);
        auto orbits = classify_orbits(iso, built.g, c, word);
        std::cout << "highest weights (" << iso.size() << " distinct):\n";
        for (const auto& ic : iso) {
            Vec<GaussRat> th = theta(built.g, c, word, ic.weight);
            std::cout << "  " << weight_str(ic.weight) << "  multiplicity "
                      << ic.hw_space.dim() << "  Theta-> " << weight_str(th) << "\n";
        }
        std::cout << "Theta orbits:\n";
        for (const auto& orb : orbits) {
            std::cout << "  " << weight_str(orb.representative);
            if (orb.partner) std::cout << " <-> " << weight_str(*orb.partner);
            std::cout << "  (length " << orb.length() << ")\n";
        }
        return 0;
    }

    if (spec.command == "decompose" || spec.command == "check") {
        DecompositionReport report =
            decompose(rep, built.g, c, spec.order, spec.verify || spec.command == "check");
        if (spec.command == "check") {
            CheckReport chk = verify_decomposition(report, rep, built.g, c);
            std::cout << "invariance: " << (chk.components_invariant ? "ok" : "FAIL") << "\n"
                      << "completeness: " << (chk.dims_complete ? "ok" : "FAIL") << "\n"
                      << "intersections: " << (chk.intersections_zero ? "ok" : "FAIL") << "\n"
                      << "spanning: " << (chk.spanning_ok ? "ok" : "FAIL") << "\n"
                      << "weyl dims: " << (chk.weyl_dims_ok ? "ok" : "FAIL") << "\n";
            for (const std::string& f : chk.failures) std::cout << "failure: " << f << "\n";
            return chk.all_ok() ? 0 : 2;
        }
        if (spec.out == "json") {
            std::cout << report_to_json(report, built.g, c).dump(2) << "\n";
            return 0;
        }
        std::cout << "space dimension " << rep.space_dim() << ", " << report.components.size()
                  << " real irreducible components\n";
        for (std::size_t k = 0; k < report.components.size(); ++k) {
            const RealComponent& comp = report.components[k];
            std::cout << "component " << k + 1 << ": dim " << comp.dim() << ", case "
                      << case_tag_name(comp.case_tag) << ", weights";
            for (const auto& w : comp.weights) std::cout << " " << weight_str(w);
            std::cout << "\n";
            print_matrix(std::cout, comp.basis.basis(), "    ");
            if (comp.sqrt_disc_flagged) {
                std::cout << "    basis rows carry + sqrt(" << comp.disc.str()
                          << ") times:\n";
                for (const auto& row : comp.basis_sqrt_part) {
                    std::cout << "    [";
                    for (std::size_t j = 0; j < row.size(); ++j)
                        std::cout << (j ? ", " : "") << row[j].str();
                    std::cout << "]\n";
                }
            }
        }
        if (spec.verify)
            std::cout << "verification: " << (report.checks.all_ok() ? "all ok" : "FAILED")
                      << "\n";
        return 0;
    }

    throw Error(ErrorCode::ParseError, "unknown command " + spec.command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decomposition of real representations of real semisimple Lie algebras"};
    JobSpec spec;
    std::string in_file, verify_flag = "on", seed_order = "default";
    app.add_option("command", spec.command, "info | roots | weights | omega | decompose | check");
    app.add_option("--algebra", spec.algebra, "so(p,q) | sl(n) | algebra JSON file");
    app.add_option("--cartan", spec.cartan,
                   "Cartan basis: generator indices 'e1,e6' or vectors '(...);(...)'");
    app.add_option("--rep", spec.rep, "defining | adjoint | end-left | poly:d | tensor2 | inline:file");
    app.add_option("--out", spec.out, "text | json");
    app.add_option("--verify", verify_flag, "on | off");
    app.add_option("--seed-order", seed_order, "default | lex");
    app.add_option("--in", in_file, "job spec JSON file");
    CLI11_PARSE(app, argc, argv);
    try {
        if (!in_file.empty()) {
            json j = load_json_file(in_file);
            if (j.contains("command")) spec.command = j["command"].get<std::string>();
            if (j.contains("algebra")) spec.algebra = j["algebra"].get<std::string>();
            if (j.contains("cartan")) spec.cartan = j["cartan"].get<std::string>();
            if (j.contains("rep")) spec.rep = j["rep"].get<std::string>();
            if (j.contains("output")) spec.out = j["output"].get<std::string>();
        }
        if (spec.command.empty() || spec.algebra.empty()) {
            std::cerr << "error: command and --algebra are required\n";
            return 2;
        }
        spec.verify = (verify_flag != "off");
        if (seed_order == "lex") spec.order = SeedOrder::lexicographic;
        else if (seed_order != "default")
            throw Error(ErrorCode::ParseError, "bad --seed-order " + seed_order);
        return run(spec);
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return e.code() == ErrorCode::EigenvalueOutsideField ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
