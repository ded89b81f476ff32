#pragma once

#include <optional>
#include <string>

#include "lierep/rep.hpp"

namespace lierep {

enum class CaseTag {
    A_selfconj,             // self-conjugate irreducible, real points
    B_distinct_pair,        // conjugate pair with distinct weights
    C_split_positive_d,     // same weight, d > 0, one of the two split halves
    C_irreducible_negative_d  // same weight, d < 0, real points of M + conj(M)
};

const char* case_tag_name(CaseTag t);

/// One real irreducible summand. The basis is rational (imaginary parts all
/// zero) unless sqrt_disc_flagged is set, in which case rows mean
/// basis + sqrt(disc) * basis_sqrt_part entrywise.
struct RealComponent {
    Subspace<GaussRat> basis;
    CaseTag case_tag;
    std::vector<Vec<GaussRat>> weights;       // hw weight(s) responsible
    std::vector<Vec<GaussRat>> seed_vectors;  // hw vectors used
    bool seed_part_swapped = false;  // fell back from Re to Im (or conversely)
    bool sqrt_disc_flagged = false;
    Rat disc;
    std::vector<Vec<GaussRat>> basis_sqrt_part;

    std::size_t dim() const { return basis.dim(); }
};

struct ThetaOrbit {
    Vec<GaussRat> representative;       // lex-smallest weight in the orbit
    std::optional<Vec<GaussRat>> partner;  // the other weight, when length 2
    std::size_t length() const { return partner ? 2 : 1; }
};

struct CheckReport {
    bool ran = false;
    bool components_invariant = false;
    bool dims_complete = false;
    bool intersections_zero = false;
    bool spanning_ok = false;
    bool weyl_dims_ok = false;
    std::vector<std::string> failures;
    bool all_ok() const { return failures.empty(); }
};

struct DecompositionReport {
    std::vector<RealComponent> components;
    std::vector<ThetaOrbit> orbits;
    std::vector<IsotypicalComponent> isotypicals;
    WeylWord word;
    Mat<GaussRat> omega_rho_matrix;
    CheckReport checks;
};

enum class SeedOrder { by_pivot, lexicographic };

/// Orbit partition of the highest weights under Theta. Length-2 orbits come
/// first, each list sorted by representative.
std::vector<ThetaOrbit> classify_orbits(const std::vector<IsotypicalComponent>& comps,
                                        const LieAlgebra& g, const CartanSubalgebra& c,
                                        const WeylWord& word);

/// Case (b): weights of v and conj(v) differ; the component is the real
/// closure of v + conj(v), cross-checked against the closure of the
/// imaginary part and against the real points of M + conj(M).
RealComponent case_b_extract(const Representation& rep, const WeightVector& v,
                             const LieAlgebra& g, const CartanSubalgebra& c,
                             const WeylWord& word);

/// The scalar d with omega_rho^{-1} conj(omega_rho^{-1} conj(v)) = d v.
Rat schur_scalar_d(const Representation& rep, const Vec<GaussRat>& v,
                   const Mat<GaussRat>& omega_rho_inv);

/// Case (c): d > 0 gives the two components generated by the real part of
/// v + sqrt(d) u and the imaginary part of v - sqrt(d) u (u the conjugate
/// partner); d < 0 gives the single component of real points of M + conj(M).
std::vector<RealComponent> case_c_split(const Representation& rep, const WeightVector& v,
                                        const Rat& d, const Mat<GaussRat>& omega_rho_inv);

/// Case (a): v and its conjugate partner span the same line; the component
/// is the real-point space of the closure of v.
RealComponent case_a_extract(const Representation& rep, const WeightVector& v,
                             const Mat<GaussRat>& omega_rho_inv);

/// Greedy peeling of one self-conjugate isotypical component.
std::vector<RealComponent> isotypical_refine(const Representation& rep,
                                             const IsotypicalComponent& comp,
                                             const Mat<GaussRat>& omega_rho_inv,
                                             SeedOrder order = SeedOrder::by_pivot);

/// The full pipeline: root system, highest weights, matching word, Theta
/// orbits, per-orbit extraction, verification.
DecompositionReport decompose(const Representation& rep, const LieAlgebra& g,
                              const CartanSubalgebra& c, SeedOrder order = SeedOrder::by_pivot,
                              bool run_checks = true);

/// Re-verification of a produced report: exact invariance, completeness,
/// zero pairwise intersections, lowering-span irreducibility spot check and
/// the Weyl dimension cross-check. Failures are reported, not thrown.
CheckReport verify_decomposition(const DecompositionReport& report, const Representation& rep,
                                 const LieAlgebra& g, const CartanSubalgebra& c);

/// Weyl dimension of the irreducible with dominant highest weight lambda.
mpz_class weyl_dimension(const LieAlgebra& g, const CartanSubalgebra& c, const RootSystem& rs,
                         const Vec<GaussRat>& lambda);

}  // namespace lierep
