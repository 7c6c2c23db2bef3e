#pragma once

#include <optional>
#include <vector>

#include "matalg/connectivity.hpp"
#include "matalg/matrix.hpp"
#include "matalg/subalgebra.hpp"

namespace matalg {

/// Verdicts for the pair (Lambda, A) with Lambda diagonal, distinct, nonzero.
///
/// irreducible       <=> the support digraph of A is strongly connected
/// schur_irreducible <=> it is weakly connected
/// indecomposable    <=> schur_irreducible
///
/// invariant_subsets lists every proper nonempty i with span{e_j : j in i}
/// invariant under both matrices; for this family those coordinate spans are
/// all the nontrivial invariant subspaces there are.
struct ClassificationReport {
  bool irreducible = false;
  bool schur_irreducible = false;
  bool indecomposable = false;
  Partition weak_components;
  std::vector<IndexSubset> invariant_subsets;
  std::optional<IndexSubset> witness;  // least invariant subset, when reducible
  Pattern support;                     // Supp(A), loops included

  friend bool operator==(ClassificationReport const&, ClassificationReport const&) = default;
};

ClassificationReport classify(DiagonalSpectrum const& spectrum, Matrix const& a);

std::vector<IndexSubset> invariant_coordinate_subspaces(DiagonalSpectrum const& spectrum,
                                                        Matrix const& a);

/// Dimension of {B : [Lambda, B] = [A, B] = 0}: the number of weak components
/// of Supp(A).
int commutant_dimension(Matrix const& a);

}  // namespace matalg
