#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lierep/matrix.hpp"

namespace lierep {

/// In-place reduced row echelon form; returns pivot columns.
/// Pivoting is leftmost column, first nonzero row, pivots normalized to 1.
template <class S>
std::vector<std::size_t> rref_in_place(Mat<S>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pr = r;
        while (pr < m.rows() && scalar_is_zero(m(pr, c))) ++pr;
        if (pr == m.rows()) continue;
        if (pr != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(pr, j));
        S inv = S(1) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || scalar_is_zero(m(i, c))) continue;
            S f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class S>
Mat<S> rref(const Mat<S>& m) {
    Mat<S> r = m;
    rref_in_place(r);
    return r;
}

template <class S>
std::size_t rank(const Mat<S>& m) {
    Mat<S> r = m;
    return rref_in_place(r).size();
}

/// A subspace of an ambient coordinate space, stored as its canonical RREF
/// basis (rows). Equality of subspaces is equality of these matrices.
template <class S>
class Subspace {
  public:
    Subspace() : Subspace(0) {}
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    Subspace(std::size_t ambient, const std::vector<Vec<S>>& rows) : ambient_(ambient) {
        Mat<S> m(rows.size(), ambient);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != ambient)
                throw Error(ErrorCode::AmbientMismatch, "Subspace: row length mismatch");
            for (std::size_t j = 0; j < ambient; ++j) m(i, j) = rows[i][j];
        }
        init_from(std::move(m));
    }
    Subspace(std::size_t ambient, const Mat<S>& rows) : ambient_(ambient) {
        if (rows.cols() != ambient && rows.rows() != 0)
            throw Error(ErrorCode::AmbientMismatch, "Subspace: row length mismatch");
        init_from(Mat<S>(rows));
    }

    static Subspace full(std::size_t ambient) {
        return Subspace(ambient, Mat<S>::identity(ambient));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Mat<S>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    /// Residual of v after eliminating along the basis; zero iff v lies in
    /// the subspace.
    Vec<S> reduce(const Vec<S>& v) const {
        if (v.size() != ambient_)
            throw Error(ErrorCode::AmbientMismatch, "Subspace: vector length mismatch");
        Vec<S> w = v;
        for (std::size_t k = 0; k < basis_.rows(); ++k) {
            S f = w[pivots_[k]];
            if (scalar_is_zero(f)) continue;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - f * basis_(k, j);
        }
        return w;
    }

    bool contains_vec(const Vec<S>& v) const { return vec_is_zero(reduce(v)); }

    bool contains(const Subspace& o) const {
        check_ambient(o);
        for (std::size_t k = 0; k < o.dim(); ++k)
            if (!contains_vec(o.basis_.row(k))) return false;
        return true;
    }

    /// Coordinates of v over the basis rows; nullopt if v is outside.
    std::optional<Vec<S>> coordinates(const Vec<S>& v) const {
        Vec<S> w = v;
        Vec<S> coeff(dim());
        for (std::size_t k = 0; k < basis_.rows(); ++k) {
            S f = w[pivots_[k]];
            if (scalar_is_zero(f)) continue;
            coeff[k] = f;
            for (std::size_t j = 0; j < ambient_; ++j) w[j] = w[j] - f * basis_(k, j);
        }
        if (!vec_is_zero(w)) return std::nullopt;
        return coeff;
    }

    Subspace sum(const Subspace& o) const {
        check_ambient(o);
        Mat<S> m(dim() + o.dim(), ambient_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_(i, j);
        for (std::size_t i = 0; i < o.dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) m(dim() + i, j) = o.basis_(i, j);
        return Subspace(ambient_, m);
    }

    Subspace intersect(const Subspace& o) const;

    /// Extends the internal basis with v if independent. Keeps canonical
    /// form; returns true when the dimension grew.
    bool grow(const Vec<S>& v) {
        Vec<S> w = reduce(v);
        if (vec_is_zero(w)) return false;
        Mat<S> m(dim() + 1, ambient_);
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) m(i, j) = basis_(i, j);
        for (std::size_t j = 0; j < ambient_; ++j) m(dim(), j) = w[j];
        init_from(std::move(m));
        return true;
    }

  private:
    void init_from(Mat<S> m) {
        pivots_ = rref_in_place(m);
        Mat<S> b(pivots_.size(), ambient_);
        for (std::size_t i = 0; i < pivots_.size(); ++i)
            for (std::size_t j = 0; j < ambient_; ++j) b(i, j) = m(i, j);
        basis_ = std::move(b);
    }
    void check_ambient(const Subspace& o) const {
        if (ambient_ != o.ambient_)
            throw Error(ErrorCode::AmbientMismatch, "Subspace: ambient mismatch");
    }

    std::size_t ambient_;
    Mat<S> basis_;
    std::vector<std::size_t> pivots_;
};

/// Basis of { x : m x = 0 }, canonical via the RREF free-column construction.
template <class S>
Subspace<S> nullspace(const Mat<S>& m) {
    Mat<S> r = m;
    auto piv = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<Vec<S>> rows;
    for (std::size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec<S> v(m.cols());
        v[fc] = S(1);
        for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = S(0) - r(k, fc);
        rows.push_back(std::move(v));
    }
    return Subspace<S>(m.cols(), rows);
}

template <class S>
Subspace<S> Subspace<S>::intersect(const Subspace& o) const {
    check_ambient(o);
    if (dim() == 0 || o.dim() == 0) return Subspace(ambient_);
    // x = a . B_s = b . B_t  <=>  (a, b) in null of [B_s^T | -B_t^T]
    Mat<S> m(ambient_, dim() + o.dim());
    for (std::size_t i = 0; i < ambient_; ++i) {
        for (std::size_t k = 0; k < dim(); ++k) m(i, k) = basis_(k, i);
        for (std::size_t k = 0; k < o.dim(); ++k) m(i, dim() + k) = S(0) - o.basis_(k, i);
    }
    Subspace<S> ns = nullspace(m);
    std::vector<Vec<S>> rows;
    for (std::size_t t = 0; t < ns.dim(); ++t) {
        Vec<S> c = ns.basis().row(t);
        Vec<S> v(ambient_);
        for (std::size_t k = 0; k < dim(); ++k)
            if (!scalar_is_zero(c[k]))
                for (std::size_t j = 0; j < ambient_; ++j) v[j] += c[k] * basis_(k, j);
        rows.push_back(std::move(v));
    }
    return Subspace(ambient_, rows);
}

/// Exact exponential of a nilpotent matrix.
template <class S>
Mat<S> exp_nilpotent(const Mat<S>& m) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::SizeMismatch, "exp_nilpotent: square required");
    std::size_t n = m.rows();
    Mat<S> sum = Mat<S>::identity(n);
    Mat<S> term = Mat<S>::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        term = term * m;
        if (term.is_zero()) return sum;
        term = term.scaled(S(1) / S(static_cast<long>(k)));
        sum = sum + term;
    }
    throw Error(ErrorCode::NotNilpotent, "exp_nilpotent: no vanishing power up to dimension");
}

/// True iff v and u span a line (rank of the stacked 2-row matrix is 1).
template <class S>
bool linearly_dependent(const Vec<S>& v, const Vec<S>& u) {
    if (v.size() != u.size())
        throw Error(ErrorCode::AmbientMismatch, "linearly_dependent: length mismatch");
    if (vec_is_zero(v) || vec_is_zero(u))
        throw Error(ErrorCode::ZeroVector, "linearly_dependent: zero vector");
    Mat<S> m(2, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) {
        m(0, j) = v[j];
        m(1, j) = u[j];
    }
    return rank(m) == 1;
}

}  // namespace lierep
