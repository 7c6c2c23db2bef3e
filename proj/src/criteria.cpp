#include "matalg/criteria.hpp"

#include <string>

#include "matalg/error.hpp"

namespace matalg {

namespace {

void check_pair(DiagonalSpectrum const& spectrum, Matrix const& a) {
  if (spectrum.n() != a.n()) {
    throw DimensionMismatch("spectrum has " + std::to_string(spectrum.n()) + " eigenvalues but A is " +
                            std::to_string(a.n()) + "x" + std::to_string(a.n()));
  }
}

}  // namespace

ClassificationReport classify(DiagonalSpectrum const& spectrum, Matrix const& a) {
  check_pair(spectrum, a);
  ClassificationReport report{.support = support(a)};
  Pattern const graph = report.support.without_loops();
  // n = 1: the space is one-dimensional, nothing to reduce.
  bool const trivial = a.n() == 1;
  report.irreducible = trivial || strongly_connected(graph);
  report.schur_irreducible = trivial || weakly_connected(graph);
  report.indecomposable = report.schur_irreducible;
  report.weak_components = weak_components(graph);
  report.invariant_subsets = containing_maximal_subalgebras(report.support);
  if (!report.invariant_subsets.empty()) report.witness = report.invariant_subsets.front();
  return report;
}

std::vector<IndexSubset> invariant_coordinate_subspaces(DiagonalSpectrum const& spectrum,
                                                        Matrix const& a) {
  check_pair(spectrum, a);
  return containing_maximal_subalgebras(support(a));
}

int commutant_dimension(Matrix const& a) {
  return static_cast<int>(weak_components(support(a).without_loops()).size());
}

}  // namespace matalg
