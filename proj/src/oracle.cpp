#include "matalg/oracle.hpp"

#include <deque>
#include <stdexcept>
#include <string>

#include "matalg/error.hpp"

namespace matalg::oracle {

namespace {

std::size_t squared(int n) { return static_cast<std::size_t>(n) * static_cast<std::size_t>(n); }

linalg::Vector flatten(Matrix const& m) { return {m.flat().begin(), m.flat().end()}; }

Matrix unflatten(int n, linalg::Vector const& v) {
  Matrix out(n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) out(k, m) = v[static_cast<std::size_t>(k * n + m)];
  }
  return out;
}

int common_dimension(std::span<Matrix const> mats) {
  if (mats.empty()) throw std::invalid_argument("oracle needs at least one matrix");
  int const n = mats.front().n();
  for (auto const& m : mats) {
    if (m.n() != n) throw DimensionMismatch("oracle inputs have different dimensions");
  }
  return n;
}

}  // namespace

SpanBasis::SpanBasis(int n) : n_(n), echelon_(squared(n)) {}

std::vector<Matrix> SpanBasis::basis() const {
  std::vector<Matrix> out;
  for (auto const& row : echelon_.rows()) out.push_back(unflatten(n_, row));
  return out;
}

bool SpanBasis::contains(Matrix const& m) const { return echelon_.contains(flatten(m)); }

bool SpanBasis::insert(Matrix const& m) {
  if (m.n() != n_) throw DimensionMismatch("matrix does not match span dimension");
  return echelon_.insert(flatten(m));
}

Pattern SpanBasis::support_union() const {
  Pattern out(n_);
  for (auto const& row : echelon_.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_zero()) out.insert(static_cast<int>(j) / n_, static_cast<int>(j) % n_);
    }
  }
  return out;
}

SpanBasis generated_algebra(std::span<Matrix const> mats) {
  int const n = common_dimension(mats);
  SpanBasis span(n);
  // The span of all nonempty words is the least subspace that contains the
  // generators and is stable under left multiplication by each generator.
  std::deque<Matrix> pending;
  for (auto const& m : mats) {
    if (span.insert(m)) pending.push_back(m);
  }
  while (!pending.empty() && span.dimension() < static_cast<int>(squared(n))) {
    Matrix const x = std::move(pending.front());
    pending.pop_front();
    for (auto const& g : mats) {
      Matrix product = g * x;
      if (span.insert(product)) pending.push_back(std::move(product));
    }
  }
  return span;
}

SpanBasis commutant_basis(std::span<Matrix const> mats) {
  int const n = common_dimension(mats);
  std::size_t const width = squared(n);
  auto var = [n](int k, int m) { return static_cast<std::size_t>(k * n + m); };
  // ([M, B])_km = sum_p M_kp B_pm - B_kp M_pm, one equation per (M, k, m).
  std::vector<linalg::Vector> equations;
  for (auto const& mat : mats) {
    for (int k = 0; k < n; ++k) {
      for (int m = 0; m < n; ++m) {
        linalg::Vector row(width);
        for (int p = 0; p < n; ++p) {
          row[var(p, m)] += mat(k, p);
          row[var(k, p)] -= mat(p, m);
        }
        equations.push_back(std::move(row));
      }
    }
  }
  SpanBasis out(n);
  for (auto const& v : linalg::nullspace(equations, width)) out.insert(unflatten(n, v));
  return out;
}

bool coordinate_subspace_invariant(std::span<Matrix const> mats, IndexSubset const& i) {
  for (auto const& mat : mats) {
    if (mat.n() != i.n()) throw DimensionMismatch("subset and matrix dimensions differ");
    for (int m : i.members()) {
      for (int k = 0; k < mat.n(); ++k) {
        if (!i.contains(k) && !mat(k, m).is_zero()) return false;
      }
    }
  }
  return true;
}

bool is_decomposable(DiagonalSpectrum const& spectrum, Matrix const& a) {
  if (spectrum.n() != a.n()) throw DimensionMismatch("spectrum and matrix dimensions differ");
  int const n = a.n();
  if (n > kMaxDecompositionScan) {
    throw CapExceeded("exhaustive decomposition scan is capped at n = " +
                      std::to_string(kMaxDecompositionScan));
  }
  if (n == 1) return false;
  std::vector<Matrix> const mats{spectrum.as_matrix(), a};
  IndexSubset::Mask const all = (IndexSubset::Mask{1} << n) - 1;
  for (IndexSubset::Mask mask = 1; mask < all; ++mask) {
    IndexSubset const i(n, mask);
    if (coordinate_subspace_invariant(mats, i) && coordinate_subspace_invariant(mats, i.complement())) {
      return true;
    }
  }
  return false;
}

bool shemesh_common_eigenvector(Matrix const& a, Matrix const& b) {
  if (a.n() != b.n()) throw DimensionMismatch("shemesh criterion needs equal dimensions");
  int const n = a.n();
  if (n == 1) return true;
  std::vector<Matrix> a_powers{a};
  std::vector<Matrix> b_powers{b};
  for (int k = 2; k < n; ++k) {
    a_powers.push_back(a_powers.back() * a);
    b_powers.push_back(b_powers.back() * b);
  }
  std::vector<linalg::Vector> rows;
  for (auto const& ak : a_powers) {
    for (auto const& bl : b_powers) {
      Matrix const c = commutator(ak, bl);
      for (int k = 0; k < n; ++k) {
        linalg::Vector row(static_cast<std::size_t>(n));
        for (int m = 0; m < n; ++m) row[static_cast<std::size_t>(m)] = c(k, m);
        rows.push_back(std::move(row));
      }
    }
  }
  return linalg::rank(rows, static_cast<std::size_t>(n)) < static_cast<std::size_t>(n);
}

ComplexRational random_nonzero_rational(Rng& rng, int bound) {
  std::uniform_int_distribution<long> num(1, bound);
  std::uniform_int_distribution<long> den(1, bound);
  std::bernoulli_distribution negative(0.5);
  long const p = num(rng) * (negative(rng) ? -1 : 1);
  Rational q(p, den(rng));
  q.canonicalize();
  return ComplexRational(q);
}

Matrix random_matrix_with_support(Pattern const& support, Rng& rng, int bound) {
  Matrix out(support.n());
  for (auto [k, m] : support.edges()) out(k, m) = random_nonzero_rational(rng, bound);
  return out;
}

DiagonalSpectrum random_spectrum(int n, Rng& rng, int bound) {
  std::vector<ComplexRational> lambdas;
  while (static_cast<int>(lambdas.size()) < n) {
    ComplexRational candidate = random_nonzero_rational(rng, bound);
    bool fresh = true;
    for (auto const& l : lambdas) fresh = fresh && !(l == candidate);
    if (fresh) lambdas.push_back(std::move(candidate));
  }
  return DiagonalSpectrum(std::move(lambdas));
}

GenericInstance draw_generic_instance(DiagonalSpectrum const& spectrum, Pattern const& support,
                                      Rng& rng) {
  int const predicted = pattern_closure(support, true).edge_count();
  Matrix const lambda = spectrum.as_matrix();
  for (int attempt = 0; attempt < 2; ++attempt) {
    Matrix a = random_matrix_with_support(support, rng);
    std::vector<Matrix> const gens{lambda, a};
    SpanBasis algebra = generated_algebra(gens);
    if (algebra.dimension() == predicted) return {std::move(a), std::move(algebra)};
  }
  throw std::runtime_error("genericity failure: generated algebra below predicted dimension " +
                           std::to_string(predicted) + " for support " + support.to_string());
}

}  // namespace matalg::oracle
