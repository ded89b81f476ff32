#pragma once

#include "lierep/liealg.hpp"

namespace lierep {

/// A finite-dimensional real representation, stored as the images of the
/// algebra basis elements. Images may come from an anti-homomorphic source
/// (vector-field realizations); the flag records that, and action() always
/// exposes the genuine homomorphic operators.
class Representation {
  public:
    Representation(const LieAlgebra& g, std::vector<Mat<GaussRat>> images,
                   bool anti_homomorphism = false);

    const LieAlgebra& algebra() const { return *g_; }
    std::size_t space_dim() const { return n_; }
    bool is_anti() const { return anti_; }

    /// Raw stored image of the k-th basis element.
    const Mat<GaussRat>& image(std::size_t k) const { return images_[k]; }
    /// Raw image of an algebra element in coordinates.
    Mat<GaussRat> image_of(const Vec<GaussRat>& coords) const;

    /// Effective homomorphic action (negated image when anti-flagged).
    Mat<GaussRat> action(std::size_t k) const;
    Mat<GaussRat> action_of(const Vec<GaussRat>& coords) const;

  private:
    const LieAlgebra* g_;
    std::vector<Mat<GaussRat>> images_;
    bool anti_;
    std::size_t n_;
};

/// Coordinatewise Gaussian conjugation on V^C in the real coordinate frame.
inline Vec<GaussRat> conj_vector(const Vec<GaussRat>& v) { return vec_conj(v); }

struct WeightVector {
    Vec<GaussRat> weight;  // values on the ordered Cartan basis
    Vec<GaussRat> vec;
};

struct IsotypicalComponent {
    Vec<GaussRat> weight;
    Subspace<GaussRat> hw_space;  // highest weight vectors of this weight
};

/// Highest weight data: the joint null space of the simple positive root
/// operators, split into Cartan eigenspaces. Components are sorted by
/// weight, (re, im)-lexicographically.
std::vector<IsotypicalComponent> highest_weights(const Representation& rep,
                                                 const CartanSubalgebra& c, const RootSystem& rs);

/// omega_rho: ordered product over the word letters of
/// exp(rho(x)) exp(-rho(y)) exp(rho(x)).
Mat<GaussRat> omega_rho(const Representation& rep, const WeylWord& word, const RootSystem& rs);

/// Smallest subspace containing the seed and closed under every generator
/// image (breadth-first closure).
Subspace<GaussRat> invariant_span(const Representation& rep, const Vec<GaussRat>& seed);

/// Same closure over a quadratic-extension scalar field.
Subspace<QuadExt> invariant_span_quadext(const Representation& rep, const Vec<QuadExt>& seed,
                                         const Rat& disc);

/// Closure from the seed applying only the negative-root operators; by the
/// big-cell argument this already spans the irreducible generated by a
/// highest weight seed.
Subspace<GaussRat> lowering_span(const Representation& rep, const RootSystem& rs,
                                 const Vec<GaussRat>& seed);

/// Theta(lambda) = omega^{-1} lambda^sigma on weight value vectors.
Vec<GaussRat> theta(const LieAlgebra& g, const CartanSubalgebra& c, const WeylWord& word,
                    const Vec<GaussRat>& lambda);

/// Matrix inverse (exact); throws on singular input.
Mat<GaussRat> inverse(const Mat<GaussRat>& m);

}  // namespace lierep
