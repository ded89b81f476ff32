#include "lierep/rep.hpp"

#include <algorithm>
#include <deque>

namespace lierep {

Representation::Representation(const LieAlgebra& g, std::vector<Mat<GaussRat>> images, bool anti)
    : g_(&g), images_(std::move(images)), anti_(anti) {
    if (images_.size() != g.dim())
        throw Error(ErrorCode::ValidationError, "Representation: one image per basis element");
    n_ = images_[0].rows();
    for (const auto& m : images_) {
        if (m.rows() != n_ || m.cols() != n_)
            throw Error(ErrorCode::SizeMismatch, "Representation: image shapes differ");
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (!m(i, j).is_real())
                    throw Error(ErrorCode::ValidationError,
                                "Representation: images must be real matrices");
    }
    // (anti-)homomorphism identity on every basis pair
    GaussRat sign = anti_ ? GaussRat(-1) : GaussRat(1);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Vec<GaussRat> ei(g.dim()), ej(g.dim());
            ei[i] = GaussRat(1);
            ej[j] = GaussRat(1);
            Mat<GaussRat> lhs = image_of(g.bracket_coords(ei, ej));
            Mat<GaussRat> rhs = commutator(images_[i], images_[j]).scaled(sign);
            if (!(lhs == rhs))
                throw Error(ErrorCode::ValidationError,
                            "Representation: bracket identity fails on basis pair");
        }
}

Mat<GaussRat> Representation::image_of(const Vec<GaussRat>& coords) const {
    Mat<GaussRat> m(n_, n_);
    for (std::size_t k = 0; k < images_.size(); ++k)
        if (!coords[k].is_zero()) m = m + images_[k].scaled(coords[k]);
    return m;
}

Mat<GaussRat> Representation::action(std::size_t k) const {
    return anti_ ? -images_[k] : images_[k];
}

Mat<GaussRat> Representation::action_of(const Vec<GaussRat>& coords) const {
    Mat<GaussRat> m = image_of(coords);
    return anti_ ? -m : m;
}

std::vector<IsotypicalComponent> highest_weights(const Representation& rep,
                                                 const CartanSubalgebra& c,
                                                 const RootSystem& rs) {
    const std::size_t n = rep.space_dim();
    // joint null space of the simple positive root operators
    Subspace<GaussRat> null = Subspace<GaussRat>::full(n);
    if (!rs.simples.empty()) {
        Mat<GaussRat> stacked(rs.simples.size() * n, n);
        for (std::size_t s = 0; s < rs.simples.size(); ++s) {
            Mat<GaussRat> op = rep.action_of(rs.simple_triples[s].x);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) stacked(s * n + i, j) = op(i, j);
        }
        null = nullspace(stacked);
    }
    // the simple root operators generate the nilradical action, so the joint
    // null space above is already the nilradical null space; cross-check
    // against the full positive system
    for (const Sl2Triple& t : rs.positive_triples) {
        Mat<GaussRat> op = rep.action_of(t.x);
        for (std::size_t k = 0; k < null.dim(); ++k)
            if (!vec_is_zero(op.apply(null.basis().row(k))))
                throw Error(ErrorCode::ValidationError,
                            "highest_weights: null space not annihilated by a positive root");
    }
    std::vector<Mat<GaussRat>> family;
    for (const auto& h : c.ordered_basis()) family.push_back(rep.action_of(h));
    std::vector<EigenBlock> blocks = simultaneous_eigenspaces(family, null);
    std::vector<IsotypicalComponent> out;
    for (EigenBlock& b : blocks) out.push_back({b.values, std::move(b.space)});
    std::sort(out.begin(), out.end(), [](const IsotypicalComponent& a,
                                         const IsotypicalComponent& b) {
        for (std::size_t k = 0; k < a.weight.size(); ++k) {
            if (a.weight[k].re() != b.weight[k].re()) return a.weight[k].re() < b.weight[k].re();
            if (a.weight[k].im() != b.weight[k].im()) return a.weight[k].im() < b.weight[k].im();
        }
        return false;
    });
    return out;
}

Mat<GaussRat> omega_rho(const Representation& rep, const WeylWord& word, const RootSystem& rs) {
    Mat<GaussRat> om = Mat<GaussRat>::identity(rep.space_dim());
    for (std::size_t bi : word.letters) {
        const Sl2Triple& t = rs.simple_triples[bi];
        Mat<GaussRat> x = rep.action_of(t.x);
        Mat<GaussRat> y = rep.action_of(t.y);
        om = om * (exp_nilpotent(x) * exp_nilpotent(-y) * exp_nilpotent(x));
    }
    return om;
}

namespace {

template <class S>
Subspace<S> closure(std::size_t n, const std::vector<Mat<S>>& gens, const Vec<S>& seed) {
    if (vec_is_zero(seed))
        throw Error(ErrorCode::ZeroVector, "invariant_span: zero seed");
    Subspace<S> span(n, std::vector<Vec<S>>{seed});
    std::deque<Vec<S>> queue{seed};
    while (!queue.empty()) {
        Vec<S> v = std::move(queue.front());
        queue.pop_front();
        for (const Mat<S>& m : gens) {
            Vec<S> w = m.apply(v);
            if (span.grow(w)) queue.push_back(std::move(w));
        }
    }
    return span;
}

}  // namespace

Subspace<GaussRat> invariant_span(const Representation& rep, const Vec<GaussRat>& seed) {
    std::vector<Mat<GaussRat>> gens;
    for (std::size_t k = 0; k < rep.algebra().dim(); ++k) gens.push_back(rep.action(k));
    return closure(rep.space_dim(), gens, seed);
}

Subspace<QuadExt> invariant_span_quadext(const Representation& rep, const Vec<QuadExt>& seed,
                                         const Rat&) {
    std::vector<Mat<QuadExt>> gens;
    for (std::size_t k = 0; k < rep.algebra().dim(); ++k) {
        Mat<GaussRat> a = rep.action(k);
        Mat<QuadExt> q(a.rows(), a.cols());
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) q(i, j) = QuadExt(a(i, j));
        gens.push_back(std::move(q));
    }
    return closure(rep.space_dim(), gens, seed);
}

Subspace<GaussRat> lowering_span(const Representation& rep, const RootSystem& rs,
                                 const Vec<GaussRat>& seed) {
    std::vector<Mat<GaussRat>> gens;
    for (const Sl2Triple& t : rs.positive_triples) gens.push_back(rep.action_of(t.y));
    if (gens.empty()) return Subspace<GaussRat>(rep.space_dim(), std::vector<Vec<GaussRat>>{seed});
    return closure(rep.space_dim(), gens, seed);
}

Vec<GaussRat> theta(const LieAlgebra& g, const CartanSubalgebra& c, const WeylWord& word,
                    const Vec<GaussRat>& lambda) {
    const std::size_t r = c.rank();
    Vec<GaussRat> out(r);
    for (std::size_t j = 0; j < r; ++j) {
        Vec<GaussRat> wh = word.omega_adjoint.apply(c.ordered_basis()[j]);
        Vec<GaussRat> swh = vec_conj(wh);
        out[j] = c.weight_value_at(lambda, swh, g).conj();
    }
    return out;
}

Mat<GaussRat> inverse(const Mat<GaussRat>& m) {
    if (m.rows() != m.cols()) throw Error(ErrorCode::SizeMismatch, "inverse: square required");
    const std::size_t n = m.rows();
    Mat<GaussRat> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = GaussRat(1);
    }
    auto piv = rref_in_place(aug);
    for (std::size_t k = 0; k < n; ++k)
        if (k >= piv.size() || piv[k] != k)
            throw Error(ErrorCode::ValidationError, "inverse: singular matrix");
    Mat<GaussRat> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
    return out;
}

}  // namespace lierep
