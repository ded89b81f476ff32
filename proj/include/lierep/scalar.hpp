#pragma once

#include <optional>
#include <string>

#include "lierep/rat.hpp"

namespace lierep {

/// Gaussian rational a + b*i with exact components.
class GaussRat {
  public:
    GaussRat() = default;
    GaussRat(long n) : re_(n) {}
    GaussRat(const Rat& re) : re_(re) {}
    GaussRat(const Rat& re, const Rat& im) : re_(re), im_(im) {}

    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat conj() const { return GaussRat(re_, -im_); }
    Rat norm() const { return re_ * re_ + im_ * im_; }

    GaussRat operator-() const { return GaussRat(-re_, -im_); }
    GaussRat operator+(const GaussRat& o) const { return GaussRat(re_ + o.re_, im_ + o.im_); }
    GaussRat operator-(const GaussRat& o) const { return GaussRat(re_ - o.re_, im_ - o.im_); }
    GaussRat operator*(const GaussRat& o) const {
        return GaussRat(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
    }
    GaussRat operator/(const GaussRat& o) const {
        Rat n = o.norm();
        if (n.is_zero()) throw Error(ErrorCode::DivisionByZero, "GaussRat: division by zero");
        return GaussRat((re_ * o.re_ + im_ * o.im_) / n, (im_ * o.re_ - re_ * o.im_) / n);
    }
    GaussRat& operator+=(const GaussRat& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRat& operator-=(const GaussRat& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRat& operator*=(const GaussRat& o) { return *this = *this * o; }
    GaussRat& operator/=(const GaussRat& o) { return *this = *this / o; }

    bool operator==(const GaussRat& o) const { return re_ == o.re_ && im_ == o.im_; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    GaussRat inverse() const { return GaussRat(Rat(1)) / *this; }

    /// Text form per the wire format: "a/b", "a/b+c/di", "ci", "0".
    std::string str() const;
    static std::optional<GaussRat> parse(const std::string& s);

  private:
    Rat re_, im_;
};

/// The complex positivity order: z > 0 iff re(z) > 0, or re(z) = 0 and
/// im(z) > 0.
inline bool is_positive_complex(const GaussRat& z) {
    if (z.re().sgn() > 0) return true;
    return z.re().is_zero() && z.im().sgn() > 0;
}

/// Element u + v*sqrt(disc) of a single quadratic extension of the Gaussian
/// rationals. disc is a square-free nonzero rational fixed per computation;
/// values with v = 0 behave exactly like plain Gaussian rationals and carry
/// disc = 0 as a "no extension" marker.
class QuadExt {
  public:
    QuadExt() = default;
    QuadExt(long n) : u_(Rat(n)) {}
    QuadExt(const GaussRat& u) : u_(u) {}
    QuadExt(const GaussRat& u, const GaussRat& v, const Rat& disc) : u_(u), v_(v), disc_(disc) {
        if (v_.is_zero()) disc_ = Rat(0);
        else if (disc_.is_zero())
            throw Error(ErrorCode::DiscMismatch, "QuadExt: sqrt part with zero discriminant");
    }

    const GaussRat& u() const { return u_; }
    const GaussRat& v() const { return v_; }
    const Rat& disc() const { return disc_; }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_rational_part_only() const { return v_.is_zero(); }

    QuadExt conj() const { return QuadExt(u_.conj(), v_.conj(), disc_); }

    QuadExt operator-() const { return QuadExt(-u_, -v_, disc_); }
    QuadExt operator+(const QuadExt& o) const {
        return QuadExt(u_ + o.u_, v_ + o.v_, merged_disc(o));
    }
    QuadExt operator-(const QuadExt& o) const {
        return QuadExt(u_ - o.u_, v_ - o.v_, merged_disc(o));
    }
    QuadExt operator*(const QuadExt& o) const {
        Rat d = merged_disc(o);
        return QuadExt(u_ * o.u_ + v_ * o.v_ * GaussRat(d), u_ * o.v_ + v_ * o.u_, d);
    }
    QuadExt operator/(const QuadExt& o) const {
        // 1/(u + v rt) = (u - v rt) / (u^2 - v^2 disc)
        if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "QuadExt: division by zero");
        Rat d = merged_disc(o);
        GaussRat n = o.u_ * o.u_ - o.v_ * o.v_ * GaussRat(d);
        if (n.is_zero())
            throw Error(ErrorCode::DivisionByZero, "QuadExt: non-invertible element");
        QuadExt oc(o.u_ / n, -o.v_ / n, d);
        return *this * oc;
    }
    QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
    QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
    QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
    QuadExt& operator/=(const QuadExt& o) { return *this = *this / o; }

    bool operator==(const QuadExt& o) const { return u_ == o.u_ && v_ == o.v_; }
    bool operator!=(const QuadExt& o) const { return !(*this == o); }

    std::string str() const;

  private:
    Rat merged_disc(const QuadExt& o) const {
        if (disc_.is_zero()) return o.disc_;
        if (o.disc_.is_zero() || disc_ == o.disc_) return disc_;
        throw Error(ErrorCode::DiscMismatch, "QuadExt: mixing distinct extensions");
    }

    GaussRat u_, v_;
    Rat disc_;
};

// Scalar concept hooks used by the templated linear algebra.
inline GaussRat scalar_conj(const GaussRat& z) { return z.conj(); }
inline QuadExt scalar_conj(const QuadExt& z) { return z.conj(); }
inline bool scalar_is_zero(const GaussRat& z) { return z.is_zero(); }
inline bool scalar_is_zero(const QuadExt& z) { return z.is_zero(); }

}  // namespace lierep
