#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

#include "matalg/complex_rational.hpp"
#include "matalg/pattern.hpp"

namespace matalg {

/// Dense square matrix over Q(i), dimension 1..64. Row-major storage.
class Matrix {
 public:
  explicit Matrix(int n);
  Matrix(std::initializer_list<std::initializer_list<ComplexRational>> rows);

  static Matrix identity(int n);
  static Matrix diagonal(std::span<ComplexRational const> entries);

  int n() const noexcept { return n_; }

  ComplexRational const& operator()(int k, int m) const { return data_[index(k, m)]; }
  ComplexRational& operator()(int k, int m) { return data_[index(k, m)]; }
  /// Row-major flattening (k*n + m).
  std::span<ComplexRational const> flat() const noexcept { return data_; }

  bool is_zero() const;
  Matrix transposed() const;
  /// this^k for k >= 1.
  Matrix power(int k) const;

  Matrix& operator+=(Matrix const& rhs);
  Matrix& operator-=(Matrix const& rhs);
  Matrix& operator*=(ComplexRational const& scalar);

  friend Matrix operator+(Matrix lhs, Matrix const& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, Matrix const& rhs) { return lhs -= rhs; }
  friend Matrix operator*(Matrix lhs, ComplexRational const& s) { return lhs *= s; }
  friend Matrix operator*(ComplexRational const& s, Matrix rhs) { return rhs *= s; }
  friend Matrix operator*(Matrix const& lhs, Matrix const& rhs);
  friend bool operator==(Matrix const&, Matrix const&) = default;

 private:
  std::size_t index(int k, int m) const;

  int n_;
  std::vector<ComplexRational> data_;
};

/// Float-entry matrix used only at ingestion; converted by tolerance snapping.
class FloatMatrix {
 public:
  explicit FloatMatrix(int n);
  FloatMatrix(std::initializer_list<std::initializer_list<std::complex<double>>> rows);

  int n() const noexcept { return n_; }
  std::complex<double> const& operator()(int k, int m) const { return data_[index(k, m)]; }
  std::complex<double>& operator()(int k, int m) { return data_[index(k, m)]; }

  /// Entries with |a| <= tolerance become exact zeros; the rest convert exactly.
  Matrix snapped(double tolerance) const;

 private:
  std::size_t index(int k, int m) const;

  int n_;
  std::vector<std::complex<double>> data_;
};

/// Eigenvalues of a diagonal matrix; guaranteed pairwise distinct and nonzero.
class DiagonalSpectrum {
 public:
  /// Throws InvalidSpectrum (NotDistinct / ZeroEigenvalue) or DimensionMismatch.
  explicit DiagonalSpectrum(std::vector<ComplexRational> lambdas);

  int n() const noexcept { return static_cast<int>(lambdas_.size()); }
  std::span<ComplexRational const> lambdas() const noexcept { return lambdas_; }
  ComplexRational const& operator[](int k) const { return lambdas_[static_cast<std::size_t>(k)]; }
  Matrix as_matrix() const { return Matrix::diagonal(lambdas_); }

  friend bool operator==(DiagonalSpectrum const&, DiagonalSpectrum const&) = default;

 private:
  std::vector<ComplexRational> lambdas_;
};

/// Coefficients in increasing degree.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<ComplexRational> coefficients);

  std::span<ComplexRational const> coefficients() const noexcept { return coeffs_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  ComplexRational const& coefficient(int d) const;

  ComplexRational operator()(ComplexRational const& x) const;
  Matrix operator()(Matrix const& x) const;

  friend Polynomial operator*(Polynomial const& a, Polynomial const& b);
  friend bool operator==(Polynomial const&, Polynomial const&) = default;

 private:
  void trim();

  std::vector<ComplexRational> coeffs_;
};

struct DiagonalUnit {
  Polynomial polynomial;
  Matrix unit;  // polynomial(Lambda), equal to E_kk
};

/// {(k,m) : |a_km| > tolerance}. Exact comparison against tolerance^2.
Pattern support(Matrix const& a, double tolerance = 0.0);
Pattern support(FloatMatrix const& a, double tolerance);

/// E_km in dimension n (0-based indices).
Matrix matrix_unit(int n, int k, int m);

/// XY - YX.
Matrix commutator(Matrix const& x, Matrix const& y);

/// For each k, q_k with zero constant term and q_k(Lambda) = E_kk:
/// q_k(x) = x * prod_{j != k} (x - l_j) / (l_k * prod_{j != k} (l_k - l_j)).
std::vector<DiagonalUnit> interpolated_diagonal_units(DiagonalSpectrum const& spectrum);

}  // namespace matalg
