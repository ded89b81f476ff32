#pragma once

#include <cstddef>
#include <vector>

#include "lierep/eigen.hpp"

namespace lierep {

/// A real semisimple matrix Lie algebra given by an ordered basis of real
/// n x n matrices. Structure constants are computed and cached on
/// construction; construction fails if the basis is not bracket-closed.
class LieAlgebra {
  public:
    explicit LieAlgebra(std::vector<Mat<GaussRat>> basis);

    std::size_t ambient_dim() const { return n_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Mat<GaussRat>>& basis() const { return basis_; }

    /// Element of gl(n) from coordinates over the algebra basis.
    Mat<GaussRat> element(const Vec<GaussRat>& coords) const;
    /// Coordinates of a matrix known to lie in the span of the basis.
    Vec<GaussRat> coordinates(const Mat<GaussRat>& m) const;

    /// Bracket in basis coordinates, via the cached structure constants.
    Vec<GaussRat> bracket_coords(const Vec<GaussRat>& x, const Vec<GaussRat>& y) const;
    /// Matrix of ad(x) on basis coordinates.
    Mat<GaussRat> ad(const Vec<GaussRat>& x) const;

    /// Killing form nonsingularity (the semisimplicity criterion).
    bool is_semisimple() const;

  private:
    std::size_t n_;
    std::vector<Mat<GaussRat>> basis_;
    // sc_[i][j] = coordinates of [b_i, b_j]
    std::vector<std::vector<Vec<GaussRat>>> sc_;
    Mat<GaussRat> flat_;  // n^2 x dim, columns are vectorized basis elements
};

Mat<GaussRat> bracket(const Mat<GaussRat>& a, const Mat<GaussRat>& b);

/// Ordered Cartan basis, as coordinate vectors over the algebra basis.
/// Pairwise commutation is verified on construction; ad-semisimplicity is
/// verified by root_decomposition.
class CartanSubalgebra {
  public:
    CartanSubalgebra(const LieAlgebra& g, std::vector<Vec<GaussRat>> ordered_basis);

    std::size_t rank() const { return basis_.size(); }
    const std::vector<Vec<GaussRat>>& ordered_basis() const { return basis_; }

    /// Value of a weight (given on the ordered basis) at an element H of the
    /// complexified Cartan, passed in algebra coordinates.
    GaussRat weight_value_at(const Vec<GaussRat>& weight_values, const Vec<GaussRat>& h_coords,
                             const LieAlgebra& g) const;

  private:
    std::vector<Vec<GaussRat>> basis_;
    Subspace<GaussRat> span_;
};

enum class RootSign { positive, negative };

struct Root {
    Vec<GaussRat> values;          // lambda(h_1), ..., lambda(h_r)
    Subspace<GaussRat> space;      // root space inside g^C, algebra coordinates
    RootSign sign = RootSign::positive;
};

struct Sl2Triple {
    Vec<GaussRat> x, y, h;  // algebra coordinates, [x,y]=h, [h,x]=2x, [h,y]=-2y
};

struct WeylWord {
    std::vector<std::size_t> letters;  // indices into the simple-root list
    Mat<GaussRat> omega_defining;      // n x n
    Mat<GaussRat> omega_adjoint;       // dim g x dim g
};

/// Joint ad-eigenspace decomposition of g^C relative to the Cartan. The zero
/// block must equal the Cartan span (else NotCartan). Roots come back sorted
/// by value vector, (re, im)-lexicographically.
std::vector<Root> root_decomposition(const LieAlgebra& g, const CartanSubalgebra& c);

struct PositiveSystem {
    std::vector<Root> positives;  // sorted by value vector
    std::vector<Root> negatives;
};

PositiveSystem positive_system(std::vector<Root> roots);

/// Positive roots that are not sums of two positive roots.
std::vector<Root> simple_roots(const std::vector<Root>& positives);

/// Normalized sl2 triple for a root: x spans the root space (canonical
/// scaling), y in the opposite root space with alpha([x,y]) = 2.
Sl2Triple sl2_triple(const LieAlgebra& g, const CartanSubalgebra& c, const Root& alpha,
                     const std::vector<Root>& all_roots);

/// Reflection on value vectors: beta - beta(H_alpha) * alpha.
Vec<GaussRat> reflect_root(const LieAlgebra& g, const CartanSubalgebra& c,
                           const Vec<GaussRat>& beta_values, const Vec<GaussRat>& alpha_values,
                           const Sl2Triple& alpha_triple);

/// The permutation induced by conjugation on root values: p(alpha) has the
/// componentwise-conjugated value vector. Returned as indices into `roots`.
std::vector<std::size_t> conjugation_permutation(const std::vector<Root>& roots);

struct RootSystem {
    std::vector<Root> roots;      // all roots, sorted
    PositiveSystem system;
    std::vector<Root> simples;
    std::vector<Sl2Triple> simple_triples;    // parallel to simples
    std::vector<Sl2Triple> positive_triples;  // parallel to system.positives
};

RootSystem build_root_system(const LieAlgebra& g, const CartanSubalgebra& c);

/// The word w_{b1}...w_{bl} with p(w(R+)) = R+, built by the descent loop:
/// each appended letter strictly lowers the number of positive roots that the
/// running composition-then-conjugation sends negative.
WeylWord borel_matching_word(const LieAlgebra& g, const CartanSubalgebra& c,
                             const RootSystem& rs);

/// One reflection representative exp(x) exp(-y) exp(x) in the defining
/// representation.
Mat<GaussRat> omega_factor_defining(const LieAlgebra& g, const Sl2Triple& t);

}  // namespace lierep
