#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

namespace matalg {

using Rational = mpq_class;

/// Exact element of Q(i): re + im*i with canonical GMP rationals.
class ComplexRational {
 public:
  ComplexRational() = default;
  ComplexRational(long value) : re_(value) {}  // NOLINT(implicit)
  ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  ComplexRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  /// Builds num/den + (inum/iden)i; throws on a zero denominator.
  static ComplexRational from_parts(mpz_class const& re_num, mpz_class const& re_den,
                                    mpz_class const& im_num, mpz_class const& im_den);

  /// Exact conversion of a binary double (no rounding).
  static ComplexRational from_double(std::complex<double> value);

  Rational const& re() const noexcept { return re_; }
  Rational const& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ComplexRational conj() const { return {re_, -im_}; }
  /// |z|^2, exact.
  Rational norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ComplexRational& operator+=(ComplexRational const& rhs);
  ComplexRational& operator-=(ComplexRational const& rhs);
  ComplexRational& operator*=(ComplexRational const& rhs);
  /// Throws std::domain_error on division by zero.
  ComplexRational& operator/=(ComplexRational const& rhs);

  friend ComplexRational operator+(ComplexRational lhs, ComplexRational const& rhs) {
    return lhs += rhs;
  }
  friend ComplexRational operator-(ComplexRational lhs, ComplexRational const& rhs) {
    return lhs -= rhs;
  }
  friend ComplexRational operator*(ComplexRational lhs, ComplexRational const& rhs) {
    return lhs *= rhs;
  }
  friend ComplexRational operator/(ComplexRational lhs, ComplexRational const& rhs) {
    return lhs /= rhs;
  }
  friend ComplexRational operator-(ComplexRational const& z) { return {-z.re_, -z.im_}; }

  friend bool operator==(ComplexRational const& a, ComplexRational const& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, ComplexRational const& z);

}  // namespace matalg
