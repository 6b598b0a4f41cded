#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace leviform {

/// Exact Gaussian rational re + im*i with arbitrary-precision parts.
///
/// Both parts are kept canonical (lowest terms, positive denominator), so
/// structural equality is numeric equality.
class GaussRational {
 public:
  GaussRational() = default;
  GaussRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussRational(mpq_class re, mpq_class im);

  static GaussRational imaginary_unit() { return {mpq_class(0), mpq_class(1)}; }

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussRational conj() const { return {re_, -im_}; }
  /// |q|^2 = q * conj(q), always real and nonnegative.
  mpq_class norm2() const { return re_ * re_ + im_ * im_; }
  /// Throws DomainError(InvalidArgument) on zero.
  GaussRational inverse() const;

  GaussRational operator-() const { return {-re_, -im_}; }
  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }

  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Human-readable form: "3/2", "-i", "1/2+3*i".
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussRational& q);

/// "p/q" or "p" for integers; never a decimal point.
std::string rational_to_string(const mpq_class& q);
/// Accepts "p", "-p", "p/q". Throws DomainError(InvalidArgument) otherwise.
mpq_class rational_from_string(std::string_view text);

}  // namespace leviform
