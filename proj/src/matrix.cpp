#include "matalg/matrix.hpp"

#include <string>

#include "matalg/error.hpp"

namespace matalg {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw DimensionMismatch("matrix dimension must lie in 1.." + std::to_string(kMaxDimension) +
                            ", got " + std::to_string(n));
  }
}

void check_same_dimension(Matrix const& a, Matrix const& b) {
  if (a.n() != b.n()) {
    throw DimensionMismatch("matrix dimensions differ: " + std::to_string(a.n()) + " vs " +
                            std::to_string(b.n()));
  }
}

}  // namespace

Matrix::Matrix(int n) : n_(n) {
  check_dimension(n);
  data_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

Matrix::Matrix(std::initializer_list<std::initializer_list<ComplexRational>> rows)
    : Matrix(static_cast<int>(rows.size())) {
  int k = 0;
  for (auto const& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw DimensionMismatch("matrix rows must have n entries");
    int m = 0;
    for (auto const& v : row) (*this)(k, m++) = v;
    ++k;
  }
}

Matrix Matrix::identity(int n) {
  Matrix out(n);
  for (int k = 0; k < n; ++k) out(k, k) = 1;
  return out;
}

Matrix Matrix::diagonal(std::span<ComplexRational const> entries) {
  Matrix out(static_cast<int>(entries.size()));
  for (int k = 0; k < out.n(); ++k) out(k, k) = entries[static_cast<std::size_t>(k)];
  return out;
}

std::size_t Matrix::index(int k, int m) const {
  if (k < 0 || k >= n_ || m < 0 || m >= n_) {
    throw IndexOutOfRange("matrix index (" + std::to_string(k) + "," + std::to_string(m) +
                          ") outside dimension " + std::to_string(n_));
  }
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(m);
}

bool Matrix::is_zero() const {
  for (auto const& v : data_) {
    if (!v.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::transposed() const {
  Matrix out(n_);
  for (int k = 0; k < n_; ++k) {
    for (int m = 0; m < n_; ++m) out(m, k) = (*this)(k, m);
  }
  return out;
}

Matrix Matrix::power(int k) const {
  if (k < 1) throw IndexOutOfRange("matrix power must be at least 1");
  Matrix out = *this;
  for (int i = 1; i < k; ++i) out = out * *this;
  return out;
}

Matrix& Matrix::operator+=(Matrix const& rhs) {
  check_same_dimension(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(Matrix const& rhs) {
  check_same_dimension(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(ComplexRational const& scalar) {
  for (auto& v : data_) v *= scalar;
  return *this;
}

Matrix operator*(Matrix const& lhs, Matrix const& rhs) {
  check_same_dimension(lhs, rhs);
  int const n = lhs.n();
  Matrix out(n);
  for (int k = 0; k < n; ++k) {
    for (int p = 0; p < n; ++p) {
      ComplexRational const& a = lhs(k, p);
      if (a.is_zero()) continue;
      for (int m = 0; m < n; ++m) {
        ComplexRational const& b = rhs(p, m);
        if (!b.is_zero()) out(k, m) += a * b;
      }
    }
  }
  return out;
}

FloatMatrix::FloatMatrix(int n) : n_(n) {
  check_dimension(n);
  data_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
}

FloatMatrix::FloatMatrix(std::initializer_list<std::initializer_list<std::complex<double>>> rows)
    : FloatMatrix(static_cast<int>(rows.size())) {
  int k = 0;
  for (auto const& row : rows) {
    if (static_cast<int>(row.size()) != n_) throw DimensionMismatch("matrix rows must have n entries");
    int m = 0;
    for (auto const& v : row) (*this)(k, m++) = v;
    ++k;
  }
}

std::size_t FloatMatrix::index(int k, int m) const {
  if (k < 0 || k >= n_ || m < 0 || m >= n_) {
    throw IndexOutOfRange("matrix index (" + std::to_string(k) + "," + std::to_string(m) +
                          ") outside dimension " + std::to_string(n_));
  }
  return static_cast<std::size_t>(k) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(m);
}

Matrix FloatMatrix::snapped(double tolerance) const {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  Matrix out(n_);
  for (int k = 0; k < n_; ++k) {
    for (int m = 0; m < n_; ++m) {
      auto const v = (*this)(k, m);
      if (std::abs(v) > tolerance) out(k, m) = ComplexRational::from_double(v);
    }
  }
  return out;
}

DiagonalSpectrum::DiagonalSpectrum(std::vector<ComplexRational> lambdas)
    : lambdas_(std::move(lambdas)) {
  check_dimension(static_cast<int>(lambdas_.size()));
  for (std::size_t k = 0; k < lambdas_.size(); ++k) {
    if (lambdas_[k].is_zero()) {
      throw InvalidSpectrum(InvalidSpectrum::Reason::ZeroEigenvalue,
                            "eigenvalues must be nonzero: lambda_" + std::to_string(k + 1) + " = 0");
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (lambdas_[j] == lambdas_[k]) {
        throw InvalidSpectrum(InvalidSpectrum::Reason::NotDistinct,
                              "eigenvalues must be distinct: lambda_" + std::to_string(j + 1) +
                                  " = lambda_" + std::to_string(k + 1) + " = " + lambdas_[k].to_string());
      }
    }
  }
}

Polynomial::Polynomial(std::vector<ComplexRational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ComplexRational const& Polynomial::coefficient(int d) const {
  static ComplexRational const zero;
  if (d < 0 || d >= static_cast<int>(coeffs_.size())) return zero;
  return coeffs_[static_cast<std::size_t>(d)];
}

ComplexRational Polynomial::operator()(ComplexRational const& x) const {
  ComplexRational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Matrix Polynomial::operator()(Matrix const& x) const {
  Matrix acc(x.n());
  Matrix const id = Matrix::identity(x.n());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + id * *it;
  return acc;
}

Polynomial operator*(Polynomial const& a, Polynomial const& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<ComplexRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(out));
}

Pattern support(Matrix const& a, double tolerance) {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  Rational const tol(tolerance);
  Rational const tol2 = tol * tol;
  Pattern p(a.n());
  for (int k = 0; k < a.n(); ++k) {
    for (int m = 0; m < a.n(); ++m) {
      auto const& v = a(k, m);
      if (tolerance == 0.0 ? !v.is_zero() : v.norm() > tol2) p.insert(k, m);
    }
  }
  return p;
}

Pattern support(FloatMatrix const& a, double tolerance) {
  if (!(tolerance >= 0.0)) throw std::invalid_argument("tolerance must be nonnegative");
  Pattern p(a.n());
  for (int k = 0; k < a.n(); ++k) {
    for (int m = 0; m < a.n(); ++m) {
      if (std::abs(a(k, m)) > tolerance) p.insert(k, m);
    }
  }
  return p;
}

Matrix matrix_unit(int n, int k, int m) {
  Matrix out(n);
  out(k, m) = 1;
  return out;
}

Matrix commutator(Matrix const& x, Matrix const& y) { return x * y - y * x; }

std::vector<DiagonalUnit> interpolated_diagonal_units(DiagonalSpectrum const& spectrum) {
  int const n = spectrum.n();
  Matrix const lambda = spectrum.as_matrix();
  std::vector<DiagonalUnit> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Polynomial numerator({ComplexRational(0), ComplexRational(1)});  // x
    ComplexRational denominator = spectrum[k];
    for (int j = 0; j < n; ++j) {
      if (j == k) continue;
      numerator = numerator * Polynomial({-spectrum[j], ComplexRational(1)});
      denominator *= spectrum[k] - spectrum[j];
    }
    std::vector<ComplexRational> coeffs(numerator.coefficients().begin(), numerator.coefficients().end());
    for (auto& c : coeffs) c /= denominator;
    Polynomial q(std::move(coeffs));
    Matrix unit = q(lambda);
    out.push_back({std::move(q), std::move(unit)});
  }
  return out;
}

}  // namespace matalg
