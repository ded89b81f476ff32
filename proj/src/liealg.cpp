#include "lierep/liealg.hpp"

#include <algorithm>

namespace lierep {

namespace {

Vec<GaussRat> vectorize(const Mat<GaussRat>& m) {
    Vec<GaussRat> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
}

// (re, im) lexicographic order on value vectors
bool value_less(const Vec<GaussRat>& a, const Vec<GaussRat>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].re() != b[k].re()) return a[k].re() < b[k].re();
        if (a[k].im() != b[k].im()) return a[k].im() < b[k].im();
    }
    return false;
}

bool value_eq(const Vec<GaussRat>& a, const Vec<GaussRat>& b) { return a == b; }

GaussRat first_nonzero(const Vec<GaussRat>& v) {
    for (const GaussRat& x : v)
        if (!x.is_zero()) return x;
    return GaussRat(0);
}

}  // namespace

Mat<GaussRat> bracket(const Mat<GaussRat>& a, const Mat<GaussRat>& b) {
    return commutator(a, b);
}

LieAlgebra::LieAlgebra(std::vector<Mat<GaussRat>> basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw Error(ErrorCode::ValidationError, "LieAlgebra: empty basis");
    n_ = basis_[0].rows();
    for (const auto& b : basis_)
        if (b.rows() != n_ || b.cols() != n_)
            throw Error(ErrorCode::SizeMismatch, "LieAlgebra: basis shapes differ");
    const std::size_t d = basis_.size();
    flat_ = Mat<GaussRat>(n_ * n_, d);
    for (std::size_t k = 0; k < d; ++k) {
        Vec<GaussRat> col = vectorize(basis_[k]);
        for (std::size_t i = 0; i < n_ * n_; ++i) flat_(i, k) = col[i];
    }
    if (rank(flat_) != d)
        throw Error(ErrorCode::ValidationError, "LieAlgebra: basis not linearly independent");
    sc_.assign(d, std::vector<Vec<GaussRat>>(d));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sc_[i][j] = coordinates(bracket(basis_[i], basis_[j]));
}

Mat<GaussRat> LieAlgebra::element(const Vec<GaussRat>& coords) const {
    Mat<GaussRat> m(n_, n_);
    for (std::size_t k = 0; k < basis_.size(); ++k)
        if (!coords[k].is_zero()) m = m + basis_[k].scaled(coords[k]);
    return m;
}

Vec<GaussRat> LieAlgebra::coordinates(const Mat<GaussRat>& m) const {
    // solve flat_ * x = vec(m) by eliminating the augmented system
    const std::size_t d = basis_.size();
    Mat<GaussRat> aug(n_ * n_, d + 1);
    for (std::size_t i = 0; i < n_ * n_; ++i)
        for (std::size_t k = 0; k < d; ++k) aug(i, k) = flat_(i, k);
    Vec<GaussRat> v = vectorize(m);
    for (std::size_t i = 0; i < n_ * n_; ++i) aug(i, d) = v[i];
    auto piv = rref_in_place(aug);
    Vec<GaussRat> x(d);
    for (std::size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] == d)
            throw Error(ErrorCode::NotClosed, "LieAlgebra: matrix outside the basis span");
        x[piv[k]] = aug(k, d);
    }
    return x;
}

Vec<GaussRat> LieAlgebra::bracket_coords(const Vec<GaussRat>& x, const Vec<GaussRat>& y) const {
    const std::size_t d = basis_.size();
    Vec<GaussRat> out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero()) continue;
            GaussRat f = x[i] * y[j];
            const Vec<GaussRat>& s = sc_[i][j];
            for (std::size_t t = 0; t < d; ++t)
                if (!s[t].is_zero()) out[t] += f * s[t];
        }
    }
    return out;
}

Mat<GaussRat> LieAlgebra::ad(const Vec<GaussRat>& x) const {
    const std::size_t d = basis_.size();
    Mat<GaussRat> a(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Vec<GaussRat> col(d);
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i].is_zero()) continue;
            const Vec<GaussRat>& s = sc_[i][j];
            for (std::size_t t = 0; t < d; ++t)
                if (!s[t].is_zero()) col[t] += x[i] * s[t];
        }
        for (std::size_t t = 0; t < d; ++t) a(t, j) = col[t];
    }
    return a;
}

bool LieAlgebra::is_semisimple() const {
    const std::size_t d = basis_.size();
    std::vector<Mat<GaussRat>> ads;
    ads.reserve(d);
    for (std::size_t k = 0; k < d; ++k) {
        Vec<GaussRat> e(d);
        e[k] = GaussRat(1);
        ads.push_back(ad(e));
    }
    Mat<GaussRat> killing(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) killing(i, j) = (ads[i] * ads[j]).trace();
    return rank(killing) == d;
}

CartanSubalgebra::CartanSubalgebra(const LieAlgebra& g, std::vector<Vec<GaussRat>> ordered_basis)
    : basis_(std::move(ordered_basis)), span_(g.dim()) {
    if (basis_.empty())
        throw Error(ErrorCode::ValidationError, "CartanSubalgebra: empty basis");
    for (const auto& h : basis_)
        if (h.size() != g.dim())
            throw Error(ErrorCode::ValidationError, "CartanSubalgebra: coordinate length");
    span_ = Subspace<GaussRat>(g.dim(), basis_);
    if (span_.dim() != basis_.size())
        throw Error(ErrorCode::ValidationError, "CartanSubalgebra: basis not independent");
    for (std::size_t i = 0; i < basis_.size(); ++i)
        for (std::size_t j = i + 1; j < basis_.size(); ++j)
            if (!vec_is_zero(g.bracket_coords(basis_[i], basis_[j])))
                throw Error(ErrorCode::ValidationError, "CartanSubalgebra: basis not abelian");
}

GaussRat CartanSubalgebra::weight_value_at(const Vec<GaussRat>& weight_values,
                                           const Vec<GaussRat>& h_coords,
                                           const LieAlgebra& g) const {
    const std::size_t r = basis_.size();
    // express h over the ordered Cartan basis
    Mat<GaussRat> aug(g.dim(), r + 1);
    for (std::size_t t = 0; t < g.dim(); ++t) {
        for (std::size_t k = 0; k < r; ++k) aug(t, k) = basis_[k][t];
        aug(t, r) = h_coords[t];
    }
    auto piv = rref_in_place(aug);
    Vec<GaussRat> coeff(r);
    for (std::size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] == r)
            throw Error(ErrorCode::ValidationError, "weight_value_at: element outside Cartan");
        coeff[piv[k]] = aug(k, r);
    }
    GaussRat out;
    for (std::size_t k = 0; k < r; ++k) out += coeff[k] * weight_values[k];
    return out;
}

std::vector<Root> root_decomposition(const LieAlgebra& g, const CartanSubalgebra& c) {
    std::vector<Mat<GaussRat>> family;
    for (const auto& h : c.ordered_basis()) family.push_back(g.ad(h));
    std::vector<EigenBlock> blocks;
    try {
        blocks = simultaneous_eigenspaces(family, Subspace<GaussRat>::full(g.dim()));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NotSemisimpleOperator)
            throw Error(ErrorCode::NotCartan, "root_decomposition: ad action not semisimple");
        throw;
    }
    std::vector<Root> roots;
    for (EigenBlock& b : blocks) {
        bool zero = true;
        for (const GaussRat& v : b.values)
            if (!v.is_zero()) zero = false;
        if (zero) {
            Subspace<GaussRat> cspan(g.dim(), c.ordered_basis());
            if (!(b.space == cspan))
                throw Error(ErrorCode::NotCartan,
                            "root_decomposition: zero eigenspace exceeds the Cartan span");
            continue;
        }
        Root r;
        r.values = b.values;
        r.space = b.space;
        r.sign = is_positive_complex(first_nonzero(b.values)) ? RootSign::positive
                                                              : RootSign::negative;
        roots.push_back(std::move(r));
    }
    std::size_t root_dims = 0;
    for (const Root& r : roots) root_dims += r.space.dim();
    if (root_dims + c.rank() != g.dim())
        throw Error(ErrorCode::NotCartan, "root_decomposition: dimensions do not add up");
    std::sort(roots.begin(), roots.end(),
              [](const Root& a, const Root& b) { return value_less(a.values, b.values); });
    return roots;
}

PositiveSystem positive_system(std::vector<Root> roots) {
    PositiveSystem ps;
    for (Root& r : roots) {
        if (r.sign == RootSign::positive) ps.positives.push_back(std::move(r));
        else ps.negatives.push_back(std::move(r));
    }
    auto cmp = [](const Root& a, const Root& b) { return value_less(a.values, b.values); };
    std::sort(ps.positives.begin(), ps.positives.end(), cmp);
    std::sort(ps.negatives.begin(), ps.negatives.end(), cmp);
    return ps;
}

std::vector<Root> simple_roots(const std::vector<Root>& positives) {
    std::vector<Root> out;
    for (const Root& r : positives) {
        bool is_sum = false;
        for (const Root& a : positives) {
            for (const Root& b : positives) {
                Vec<GaussRat> s = vec_add(a.values, b.values);
                if (value_eq(s, r.values)) {
                    is_sum = true;
                    break;
                }
            }
            if (is_sum) break;
        }
        if (!is_sum) out.push_back(r);
    }
    return out;
}

namespace {

/// Canonical vector on a root line: divide by the last nonzero coordinate.
Vec<GaussRat> canonical_root_vector(const Subspace<GaussRat>& space) {
    if (space.dim() != 1)
        throw Error(ErrorCode::DegenerateRoot, "root space is not one-dimensional");
    Vec<GaussRat> v = space.basis().row(0);
    std::size_t last = v.size();
    for (std::size_t j = v.size(); j-- > 0;)
        if (!v[j].is_zero()) {
            last = j;
            break;
        }
    GaussRat inv = GaussRat(1) / v[last];
    return vec_scale(inv, v);
}

const Root* find_root(const std::vector<Root>& roots, const Vec<GaussRat>& values) {
    for (const Root& r : roots)
        if (value_eq(r.values, values)) return &r;
    return nullptr;
}

}  // namespace

Sl2Triple sl2_triple(const LieAlgebra& g, const CartanSubalgebra& c, const Root& alpha,
                     const std::vector<Root>& all_roots) {
    Vec<GaussRat> neg(alpha.values.size());
    for (std::size_t k = 0; k < neg.size(); ++k) neg[k] = -alpha.values[k];
    const Root* opposite = find_root(all_roots, neg);
    if (!opposite)
        throw Error(ErrorCode::DegenerateRoot, "sl2_triple: missing opposite root");
    Vec<GaussRat> x = canonical_root_vector(alpha.space);
    Vec<GaussRat> f = canonical_root_vector(opposite->space);
    // conjugation-adapted rescale when sigma maps the root to its negative:
    // make y exactly -conj(x), so the reflection representative is a real
    // matrix in every representation with real generator images
    Vec<GaussRat> conj_values = vec_conj(alpha.values);
    if (value_eq(conj_values, neg)) {
        Vec<GaussRat> sx = vec_conj(x);
        GaussRat t = c.weight_value_at(alpha.values, g.bracket_coords(x, sx), g);
        if (!t.is_real() || t.is_zero())
            throw Error(ErrorCode::DegenerateRoot, "sl2_triple: degenerate sigma pairing");
        Rat rho = (Rat(2) / t.re()).abs();
        auto sq = sqrt_exact(rho);
        if (std::holds_alternative<Rat>(sq)) {
            GaussRat s(std::get<Rat>(sq));
            x = vec_scale(s, x);
            f = vec_conj(x);
        }
    }
    GaussRat pairing = c.weight_value_at(alpha.values, g.bracket_coords(x, f), g);
    if (pairing.is_zero())
        throw Error(ErrorCode::DegenerateRoot, "sl2_triple: alpha([e,f]) = 0");
    Vec<GaussRat> y = vec_scale(GaussRat(2) / pairing, f);
    Vec<GaussRat> h = g.bracket_coords(x, y);
    if (!(g.bracket_coords(h, x) == vec_scale(GaussRat(2), x)) ||
        !(g.bracket_coords(h, y) == vec_scale(GaussRat(-2), y)))
        throw Error(ErrorCode::DegenerateRoot, "sl2_triple: bracket relations failed");
    return Sl2Triple{std::move(x), std::move(y), std::move(h)};
}

Vec<GaussRat> reflect_root(const LieAlgebra& g, const CartanSubalgebra& c,
                           const Vec<GaussRat>& beta_values, const Vec<GaussRat>& alpha_values,
                           const Sl2Triple& alpha_triple) {
    GaussRat bh = c.weight_value_at(beta_values, alpha_triple.h, g);
    Vec<GaussRat> out(beta_values.size());
    for (std::size_t k = 0; k < out.size(); ++k)
        out[k] = beta_values[k] - bh * alpha_values[k];
    return out;
}

std::vector<std::size_t> conjugation_permutation(const std::vector<Root>& roots) {
    std::vector<std::size_t> p(roots.size());
    for (std::size_t k = 0; k < roots.size(); ++k) {
        Vec<GaussRat> cv = vec_conj(roots[k].values);
        bool found = false;
        for (std::size_t t = 0; t < roots.size(); ++t)
            if (value_eq(roots[t].values, cv)) {
                p[k] = t;
                found = true;
                break;
            }
        if (!found)
            throw Error(ErrorCode::ValidationError,
                        "conjugation_permutation: conjugated value vector is not a root");
    }
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (p[p[k]] != k)
            throw Error(ErrorCode::ValidationError, "conjugation_permutation: not an involution");
    return p;
}

RootSystem build_root_system(const LieAlgebra& g, const CartanSubalgebra& c) {
    RootSystem rs;
    rs.roots = root_decomposition(g, c);
    rs.system = positive_system(rs.roots);
    rs.simples = simple_roots(rs.system.positives);
    for (const Root& b : rs.simples) rs.simple_triples.push_back(sl2_triple(g, c, b, rs.roots));
    for (const Root& b : rs.system.positives)
        rs.positive_triples.push_back(sl2_triple(g, c, b, rs.roots));
    return rs;
}

Mat<GaussRat> omega_factor_defining(const LieAlgebra& g, const Sl2Triple& t) {
    Mat<GaussRat> xm = g.element(t.x);
    Mat<GaussRat> ym = g.element(t.y);
    return exp_nilpotent(xm) * exp_nilpotent(-ym) * exp_nilpotent(xm);
}

WeylWord borel_matching_word(const LieAlgebra& g, const CartanSubalgebra& c,
                             const RootSystem& rs) {
    const std::size_t npos = rs.system.positives.size();
    // image of a value vector under w_{b1} o ... o w_{bl} then conjugation
    auto word_then_conj = [&](const std::vector<std::size_t>& word, const Vec<GaussRat>& v) {
        Vec<GaussRat> w = v;
        for (std::size_t k = word.size(); k-- > 0;) {
            const Root& b = rs.simples[word[k]];
            w = reflect_root(g, c, w, b.values, rs.simple_triples[word[k]]);
        }
        return vec_conj(w);
    };
    auto count_negative = [&](const std::vector<std::size_t>& word) {
        std::size_t cnt = 0;
        for (const Root& r : rs.system.positives) {
            Vec<GaussRat> img = word_then_conj(word, r.values);
            if (!is_positive_complex(first_nonzero(img))) ++cnt;
        }
        return cnt;
    };
    std::vector<std::size_t> word;
    std::size_t cnt = count_negative(word);
    while (cnt > 0) {
        bool appended = false;
        for (std::size_t bi = 0; bi < rs.simples.size(); ++bi) {
            Vec<GaussRat> img = word_then_conj(word, rs.simples[bi].values);
            if (!is_positive_complex(first_nonzero(img))) {
                word.push_back(bi);
                appended = true;
                break;
            }
        }
        std::size_t next = appended ? count_negative(word) : cnt;
        if (!appended || next != cnt - 1)
            throw Error(ErrorCode::NonTerminating,
                        "borel_matching_word: descent count failed to drop by one");
        cnt = next;
        if (word.size() > npos)
            throw Error(ErrorCode::NonTerminating, "borel_matching_word: word too long");
    }
    WeylWord ww;
    ww.letters = word;
    ww.omega_defining = Mat<GaussRat>::identity(g.ambient_dim());
    ww.omega_adjoint = Mat<GaussRat>::identity(g.dim());
    for (std::size_t bi : word) {
        const Sl2Triple& t = rs.simple_triples[bi];
        ww.omega_defining = ww.omega_defining * omega_factor_defining(g, t);
        Mat<GaussRat> ax = g.ad(t.x), ay = g.ad(t.y);
        ww.omega_adjoint =
            ww.omega_adjoint * (exp_nilpotent(ax) * exp_nilpotent(-ay) * exp_nilpotent(ax));
    }
    return ww;
}

}  // namespace lierep
