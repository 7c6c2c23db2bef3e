#include "matalg/linalg.hpp"

#include <algorithm>

#include "matalg/error.hpp"

namespace matalg::linalg {

Vector EchelonBasis::reduce(Vector v) const {
  if (v.size() != width_) throw DimensionMismatch("vector width does not match basis");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    ComplexRational const c = v[pivots_[r]];
    if (c.is_zero()) continue;
    Vector const& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < width_; ++j) {
      if (!row[j].is_zero()) v[j] -= c * row[j];
    }
  }
  return v;
}

bool EchelonBasis::contains(Vector const& v) const {
  Vector const residual = reduce(v);
  return std::all_of(residual.begin(), residual.end(), [](auto const& x) { return x.is_zero(); });
}

bool EchelonBasis::insert(Vector v) {
  v = reduce(std::move(v));
  auto const it = std::find_if(v.begin(), v.end(), [](auto const& x) { return !x.is_zero(); });
  if (it == v.end()) return false;
  std::size_t const pivot = static_cast<std::size_t>(it - v.begin());
  ComplexRational const scale = v[pivot];
  for (std::size_t j = pivot; j < width_; ++j) {
    if (!v[j].is_zero()) v[j] /= scale;
  }
  for (auto& row : rows_) {
    ComplexRational const c = row[pivot];
    if (c.is_zero()) continue;
    for (std::size_t j = pivot; j < width_; ++j) {
      if (!v[j].is_zero()) row[j] -= c * v[j];
    }
  }
  auto const pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  auto const offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return true;
}

std::vector<Vector> nullspace(std::span<Vector const> rows, std::size_t width) {
  EchelonBasis basis(width);
  for (auto const& row : rows) {
    basis.insert(row);
    if (basis.rank() == width) return {};
  }
  std::vector<bool> is_pivot(width, false);
  for (std::size_t p : basis.pivots()) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t free = 0; free < width; ++free) {
    if (is_pivot[free]) continue;
    Vector x(width);
    x[free] = 1;
    for (std::size_t r = 0; r < basis.rank(); ++r) x[basis.pivots()[r]] = -basis.rows()[r][free];
    out.push_back(std::move(x));
  }
  return out;
}

std::size_t rank(std::span<Vector const> rows, std::size_t width) {
  EchelonBasis basis(width);
  for (auto const& row : rows) basis.insert(row);
  return basis.rank();
}

}  // namespace matalg::linalg
