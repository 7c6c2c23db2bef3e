#pragma once

#include <random>
#include <span>
#include <vector>

#include "matalg/linalg.hpp"
#include "matalg/matrix.hpp"
#include "matalg/subalgebra.hpp"

// Brute-force ground truth in exact arithmetic. Nothing here consults the
// support digraph; every answer comes from linear algebra over Q(i).
namespace matalg::oracle {

/// Subspace of the n^2-dimensional matrix space, reduced echelon over the
/// row-major flattening.
class SpanBasis {
 public:
  explicit SpanBasis(int n);

  int n() const noexcept { return n_; }
  int dimension() const noexcept { return static_cast<int>(echelon_.rank()); }
  std::vector<Matrix> basis() const;
  bool contains(Matrix const& m) const;
  bool insert(Matrix const& m);
  /// Union of the supports of the basis matrices.
  Pattern support_union() const;

 private:
  int n_;
  linalg::EchelonBasis echelon_;
};

/// Smallest (non-unital) associative span containing every input.
SpanBasis generated_algebra(std::span<Matrix const> mats);

/// {B : [M, B] = 0 for every input M}.
SpanBasis commutant_basis(std::span<Matrix const> mats);

/// True iff each input maps span{e_j : j in i} into itself.
bool coordinate_subspace_invariant(std::span<Matrix const> mats, IndexSubset const& i);

inline constexpr int kMaxDecompositionScan = 20;

/// Exhaustive scan for a proper i with both V_i and its complement invariant.
bool is_decomposable(DiagonalSpectrum const& spectrum, Matrix const& a);

/// Whether the intersection of ker [A^k, B^l], 1 <= k,l <= n-1, is nonzero.
bool shemesh_common_eigenvector(Matrix const& a, Matrix const& b);

using Rng = std::mt19937_64;

/// Random nonzero rational num/den with |num|, den <= bound.
ComplexRational random_nonzero_rational(Rng& rng, int bound = 100);

/// Random generic entries on the given support, zeros elsewhere.
Matrix random_matrix_with_support(Pattern const& support, Rng& rng, int bound = 100);

/// Distinct nonzero rational eigenvalues.
DiagonalSpectrum random_spectrum(int n, Rng& rng, int bound = 100);

struct GenericInstance {
  Matrix a;
  SpanBasis algebra;  // generated_algebra({Lambda, a})
};

/// Draws A on `support` and checks that the generated algebra reaches the
/// dimension the pattern calculus predicts. One redraw on failure, then
/// throws std::runtime_error.
GenericInstance draw_generic_instance(DiagonalSpectrum const& spectrum, Pattern const& support,
                                      Rng& rng);

}  // namespace matalg::oracle
