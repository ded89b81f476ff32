#include "lierep/eigen.hpp"

#include <algorithm>

namespace lierep {

Mat<GaussRat> restrict_operator(const Mat<GaussRat>& op, const Subspace<GaussRat>& sub) {
    const std::size_t n = sub.dim();
    Mat<GaussRat> r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vec<GaussRat> w = op.apply(sub.basis().row(k));
        auto coeff = sub.coordinates(w);
        if (!coeff)
            throw Error(ErrorCode::ValidationError,
                        "restrict_operator: operator does not preserve subspace");
        for (std::size_t j = 0; j < n; ++j) r(j, k) = (*coeff)[j];
    }
    return r;
}

std::vector<std::pair<GaussRat, Subspace<GaussRat>>> eigenspaces_within(
    const Mat<GaussRat>& op, const Subspace<GaussRat>& sub) {
    Mat<GaussRat> r = restrict_operator(op, sub);
    RootList rl = gauss_rational_roots(char_poly(r));
    if (!rl.full_degree)
        throw Error(ErrorCode::EigenvalueOutsideField,
                    "eigenspaces_within: characteristic polynomial does not split over Q(i)");
    std::vector<std::pair<GaussRat, Subspace<GaussRat>>> out;
    std::size_t total = 0;
    for (const auto& [lam, mult] : rl.roots) {
        Mat<GaussRat> shifted = r - Mat<GaussRat>::identity(sub.dim()).scaled(lam);
        Subspace<GaussRat> ns = nullspace(shifted);
        std::vector<Vec<GaussRat>> rows;
        for (std::size_t t = 0; t < ns.dim(); ++t) {
            Vec<GaussRat> c = ns.basis().row(t);
            Vec<GaussRat> v(sub.ambient_dim());
            for (std::size_t k = 0; k < sub.dim(); ++k)
                if (!c[k].is_zero())
                    for (std::size_t j = 0; j < sub.ambient_dim(); ++j)
                        v[j] += c[k] * sub.basis()(k, j);
            rows.push_back(std::move(v));
        }
        Subspace<GaussRat> es(sub.ambient_dim(), rows);
        total += es.dim();
        out.push_back({lam, std::move(es)});
    }
    if (total != sub.dim())
        throw Error(ErrorCode::NotSemisimpleOperator,
                    "eigenspaces_within: eigenspaces do not fill the subspace");
    return out;
}

std::vector<EigenBlock> simultaneous_eigenspaces(const std::vector<Mat<GaussRat>>& family,
                                                 const Subspace<GaussRat>& within) {
    // commutation check on the restrictions
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            Mat<GaussRat> ri = restrict_operator(family[i], within);
            Mat<GaussRat> rj = restrict_operator(family[j], within);
            if (!commutator(ri, rj).is_zero())
                throw Error(ErrorCode::NotCommuting,
                            "simultaneous_eigenspaces: family does not commute on subspace");
        }
    std::vector<EigenBlock> blocks{EigenBlock{{}, within}};
    for (const Mat<GaussRat>& op : family) {
        std::vector<EigenBlock> next;
        for (const EigenBlock& b : blocks) {
            for (auto& [lam, es] : eigenspaces_within(op, b.space)) {
                EigenBlock nb{b.values, std::move(es)};
                nb.values.push_back(lam);
                next.push_back(std::move(nb));
            }
        }
        blocks = std::move(next);
    }
    return blocks;
}

}  // namespace lierep
