#include "matalg/complex_rational.hpp"

#include <ostream>
#include <stdexcept>

namespace matalg {

ComplexRational ComplexRational::from_parts(mpz_class const& re_num, mpz_class const& re_den,
                                            mpz_class const& im_num, mpz_class const& im_den) {
  if (re_den == 0 || im_den == 0) {
    throw std::domain_error("complex rational with zero denominator");
  }
  Rational re(re_num, re_den);
  Rational im(im_num, im_den);
  re.canonicalize();
  im.canonicalize();
  return {std::move(re), std::move(im)};
}

ComplexRational ComplexRational::from_double(std::complex<double> value) {
  return {Rational(value.real()), Rational(value.imag())};
}

ComplexRational& ComplexRational::operator+=(ComplexRational const& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ComplexRational& ComplexRational::operator-=(ComplexRational const& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ComplexRational& ComplexRational::operator*=(ComplexRational const& rhs) {
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ComplexRational& ComplexRational::operator/=(ComplexRational const& rhs) {
  if (rhs.is_zero()) {
    throw std::domain_error("division by zero");
  }
  if (sgn(im_) == 0 && sgn(rhs.im_) == 0) {
    re_ /= rhs.re_;
    return *this;
  }
  Rational const d = rhs.norm();
  Rational re = (re_ * rhs.re_ + im_ * rhs.im_) / d;
  Rational im = (im_ * rhs.re_ - re_ * rhs.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string ComplexRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string out = re_.get_str();
  out += sgn(im_) > 0 ? "+" : "-";
  out += Rational(abs(im_)).get_str();
  out += "i";
  return out;
}

std::ostream& operator<<(std::ostream& os, ComplexRational const& z) {
  return os << z.to_string();
}

}  // namespace matalg
