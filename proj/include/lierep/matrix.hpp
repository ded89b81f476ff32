#pragma once

#include <cstddef>
#include <vector>

#include "lierep/error.hpp"
#include "lierep/scalar.hpp"

namespace lierep {

template <class S>
using Vec = std::vector<S>;

/// Dense row-major matrix over an exact scalar type.
template <class S>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
    Mat(std::size_t rows, std::size_t cols, std::vector<S> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw Error(ErrorCode::SizeMismatch, "Mat: entry count mismatch");
    }

    static Mat identity(std::size_t n) {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Vec<S> row(std::size_t i) const {
        return Vec<S>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
    }

    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const S& x : e_)
            if (!scalar_is_zero(x)) return false;
        return true;
    }

    Mat operator+(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
        return r;
    }
    Mat operator-(const Mat& o) const {
        check_same_shape(o);
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
        return r;
    }
    Mat operator*(const Mat& o) const {
        if (cols_ != o.rows_) throw Error(ErrorCode::SizeMismatch, "Mat: product shape");
        Mat r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& a = (*this)(i, k);
                if (scalar_is_zero(a)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) {
                    if (scalar_is_zero(o(k, j))) continue;
                    r(i, j) += a * o(k, j);
                }
            }
        return r;
    }
    Mat operator-() const { return scaled(S(0) - S(1)); }

    Mat scaled(const S& c) const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = c * e_[k];
        return r;
    }

    Mat transpose() const {
        Mat r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    Mat conj() const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = scalar_conj(e_[k]);
        return r;
    }

    S trace() const {
        S t{};
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
        return t;
    }

    Vec<S> apply(const Vec<S>& v) const {
        if (v.size() != cols_) throw Error(ErrorCode::SizeMismatch, "Mat: apply shape");
        Vec<S> r(rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!scalar_is_zero((*this)(i, j))) r[i] += (*this)(i, j) * v[j];
        return r;
    }

  private:
    void check_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw Error(ErrorCode::SizeMismatch, "Mat: shape mismatch");
    }

    std::size_t rows_ = 0, cols_ = 0;
    std::vector<S> e_;
};

template <class S>
Mat<S> commutator(const Mat<S>& a, const Mat<S>& b) {
    if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
        throw Error(ErrorCode::SizeMismatch, "commutator: need equal square matrices");
    return a * b - b * a;
}

template <class S>
Vec<S> vec_add(const Vec<S>& a, const Vec<S>& b) {
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

template <class S>
Vec<S> vec_sub(const Vec<S>& a, const Vec<S>& b) {
    Vec<S> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

template <class S>
Vec<S> vec_scale(const S& c, const Vec<S>& v) {
    Vec<S> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

template <class S>
Vec<S> vec_conj(const Vec<S>& v) {
    Vec<S> r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = scalar_conj(v[i]);
    return r;
}

template <class S>
bool vec_is_zero(const Vec<S>& v) {
    for (const S& x : v)
        if (!scalar_is_zero(x)) return false;
    return true;
}

}  // namespace lierep
