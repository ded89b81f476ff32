#pragma once

#include <vector>

#include "lierep/linalg.hpp"
#include "lierep/poly.hpp"

namespace lierep {

/// Matrix of op restricted to sub, in sub's basis-row coordinates.
/// Throws if op does not preserve the subspace.
Mat<GaussRat> restrict_operator(const Mat<GaussRat>& op, const Subspace<GaussRat>& sub);

/// Eigenspaces of op within sub. Requires the restriction to be semisimple
/// with all eigenvalues in Q(i).
std::vector<std::pair<GaussRat, Subspace<GaussRat>>> eigenspaces_within(
    const Mat<GaussRat>& op, const Subspace<GaussRat>& sub);

struct EigenBlock {
    std::vector<GaussRat> values;  // one eigenvalue per family member
    Subspace<GaussRat> space;
};

/// Joint eigenspace decomposition of `within` under a commuting family.
/// Blocks are emitted in eigenvalue order, (re, im)-lexicographic per level.
std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<Mat<GaussRat>>& family,
                                                 const Subspace<GaussRat>& within);

template <class S>
S i_scalar();
template <>
inline GaussRat i_scalar<GaussRat>() { return GaussRat::i(); }
template <>
inline QuadExt i_scalar<QuadExt>() { return QuadExt(GaussRat::i()); }

/// Fixed vectors of the coordinatewise conjugation inside a self-conjugate
/// subspace; the returned basis has real entries and the same dimension.
template <class S>
Subspace<S> real_points(const Subspace<S>& s) {
    std::vector<Vec<S>> conj_rows;
    for (std::size_t k = 0; k < s.dim(); ++k) conj_rows.push_back(vec_conj(s.basis().row(k)));
    if (Subspace<S>(s.ambient_dim(), conj_rows) != s)
        throw Error(ErrorCode::NotSelfConjugate, "real_points: subspace not sigma-stable");
    const S half = S(1) / S(2);
    const S neg_half_i = half / i_scalar<S>();
    std::vector<Vec<S>> rows;
    for (std::size_t k = 0; k < s.dim(); ++k) {
        Vec<S> v = s.basis().row(k);
        Vec<S> vc = vec_conj(v);
        rows.push_back(vec_scale(half, vec_add(v, vc)));
        rows.push_back(vec_scale(neg_half_i, vec_sub(v, vc)));
    }
    Subspace<S> out(s.ambient_dim(), rows);
    if (out.dim() != s.dim())
        throw Error(ErrorCode::NotSelfConjugate, "real_points: fixed space has wrong dimension");
    return out;
}

}  // namespace lierep
