#pragma once

#include <span>
#include <vector>

#include "matalg/complex_rational.hpp"

namespace matalg::linalg {

using Vector = std::vector<ComplexRational>;

/// Row space kept in reduced row echelon form: every row has a unit pivot
/// and zeros in the pivot columns of all other rows; pivots strictly increase.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t width) : width_(width) {}

  std::size_t width() const noexcept { return width_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  std::span<Vector const> rows() const noexcept { return rows_; }
  std::span<std::size_t const> pivots() const noexcept { return pivots_; }

  /// Residual of v after eliminating every pivot column.
  Vector reduce(Vector v) const;
  bool contains(Vector const& v) const;
  /// Adds v to the span; returns false if it was already there.
  bool insert(Vector v);

 private:
  std::size_t width_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Basis of {x : rows * x = 0}, one vector per free column.
std::vector<Vector> nullspace(std::span<Vector const> rows, std::size_t width);

std::size_t rank(std::span<Vector const> rows, std::size_t width);

}  // namespace matalg::linalg
