#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "lierep/error.hpp"

namespace lierep {

/// Arbitrary-precision rational, always in canonical form: positive
/// denominator, gcd(|num|, den) = 1, zero is 0/1.
class Rat {
  public:
    Rat() : q_(0) {}
    Rat(long n) : q_(n) {}
    Rat(long n, long d) : q_(n, d) {
        if (d == 0) throw Error(ErrorCode::ZeroDenominator, "Rat: zero denominator");
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rat(const mpz_class& n) : q_(n) {}
    Rat(const mpz_class& n, const mpz_class& d) : q_(n, d) {
        if (d == 0) throw Error(ErrorCode::ZeroDenominator, "Rat: zero denominator");
        q_.canonicalize();
    }

    const mpz_class num() const { return q_.get_num(); }
    const mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sgn() const { return ::sgn(q_); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "Rat: division by zero");
        return Rat(mpq_class(q_ / o.q_));
    }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }
    bool operator<(const Rat& o) const { return q_ < o.q_; }
    bool operator<=(const Rat& o) const { return q_ <= o.q_; }
    bool operator>(const Rat& o) const { return q_ > o.q_; }
    bool operator>=(const Rat& o) const { return q_ >= o.q_; }

    Rat abs() const { return sgn() < 0 ? -*this : *this; }
    Rat inverse() const {
        if (is_zero()) throw Error(ErrorCode::DivisionByZero, "Rat: inverse of zero");
        return Rat(mpq_class(1 / q_));
    }

    /// Text form "a" or "a/b".
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    static std::optional<Rat> parse(const std::string& s);

    const mpq_class& mpq() const { return q_; }

  private:
    mpq_class q_;
};

/// Outcome of sqrt_exact when the input is not a rational square: the
/// square-free discriminant that generates the needed quadratic extension.
struct ExtensionNeeded {
    Rat disc;
};

/// Exact square root of a positive rational, or the square-free part of the
/// extension it would require.
std::variant<Rat, ExtensionNeeded> sqrt_exact(const Rat& r);

/// Square-free part of a nonzero integer (sign preserved).
mpz_class squarefree_part(const mpz_class& n);

}  // namespace lierep
