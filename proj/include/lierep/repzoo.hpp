#pragma once

#include "lierep/rep.hpp"

namespace lierep {

/// Homogeneous monomials of fixed degree in graded-lexicographic order with
/// x1 > x2 > ... > xn, so x1^d comes first.
class MonomialBasis {
  public:
    MonomialBasis(std::size_t n_vars, std::size_t degree);

    std::size_t n_vars() const { return n_; }
    std::size_t degree() const { return d_; }
    std::size_t size() const { return mons_.size(); }
    const std::vector<unsigned>& exponents(std::size_t k) const { return mons_[k]; }
    std::size_t index_of(const std::vector<unsigned>& expo) const;

  private:
    std::size_t n_, d_;
    std::vector<std::vector<unsigned>> mons_;
};

/// so(p, q) for the form diag(1,...,1,-1,...,-1): generators e_ij - e_ji when
/// the metric signs agree and e_ij + e_ji when they differ, (i, j) ordered
/// lexicographically.
LieAlgebra so_pq(std::size_t p, std::size_t q);

/// sl(n, R): Cartan elements e_{i+1,i+1} - e_{ii} first, then the
/// off-diagonal units in row-major order.
LieAlgebra sl_n(std::size_t n);

/// The canonical ordered Cartan basis for sl_n: the first element is the
/// traceless diagonal diag(2i - n - 1), whose strictly increasing entries
/// make the lower-triangular units the positive root vectors, so the induced
/// nilradical acts by the operators x_i d/dx_{i+1} on polynomials.
std::vector<Vec<GaussRat>> sl_default_cartan(const LieAlgebra& g, std::size_t n);

/// Representation on homogeneous degree-d polynomials by the vector fields
/// sum a_ij x_j d/dx_i. The matrix-to-operator map is an anti-isomorphism;
/// the images are stored as the vector-field matrices themselves and
/// flagged accordingly.
Representation poly_rep(const LieAlgebra& g, const MonomialBasis& basis);
Representation poly_rep(const LieAlgebra& g, std::size_t degree);

/// Left multiplication on End(R^n): rho(A) = A (x) I in the row-major e_ij
/// frame.
Representation endo_left_rep(const LieAlgebra& g);

/// ad on basis coordinates.
Representation adjoint_rep(const LieAlgebra& g);

/// The generators acting as themselves on R^n.
Representation defining_rep(const LieAlgebra& g);

/// V (x) V for V the linear-polynomial realization: P (x) I + I (x) P with
/// P the vector-field matrix on the x-basis; anti-flagged like poly_rep.
Representation tensor_square_rep(const LieAlgebra& g);

}  // namespace lierep
