#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "matalg/matrix.hpp"
#include "matalg/oracle.hpp"
#include "matalg/pattern.hpp"
#include "matalg/subalgebra.hpp"

namespace matalg::test {

/// Pattern from 1-based pairs, as written in the literature.
inline Pattern pairs1(int n, std::vector<std::pair<int, int>> const& edges) {
  Pattern p(n);
  for (auto [k, m] : edges) p.insert(k - 1, m - 1);
  return p;
}

/// Pattern from rows like {"011", "100", "100"}; '1' or '*' marks a member.
inline Pattern rows_of(std::vector<std::string> const& rows) {
  int const n = static_cast<int>(rows.size());
  Pattern p(n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      char const c = rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
      if (c == '1' || c == '*') p.insert(k, m);
    }
  }
  return p;
}

inline IndexSubset subset1(int n, std::vector<int> const& members) {
  std::vector<int> zero;
  for (int v : members) zero.push_back(v - 1);
  return IndexSubset::from_members(n, zero);
}

inline ComplexRational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return ComplexRational(r);
}

inline ComplexRational cq(long re, long im) { return {Rational(re), Rational(im)}; }

inline DiagonalSpectrum spectrum(std::vector<long> values) {
  std::vector<ComplexRational> out;
  for (long v : values) out.push_back(q(v));
  return DiagonalSpectrum(std::move(out));
}

/// 1, 2, ..., n.
inline DiagonalSpectrum natural_spectrum(int n) {
  std::vector<long> values;
  for (int k = 1; k <= n; ++k) values.push_back(k);
  return spectrum(values);
}

/// Every loop-free pattern on n vertices, n <= 4.
inline std::vector<Pattern> all_loop_free(int n) {
  int const bits = n * (n - 1);
  std::vector<std::pair<int, int>> slots;
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      if (k != m) slots.emplace_back(k, m);
    }
  }
  std::vector<Pattern> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Pattern p(n);
    for (int b = 0; b < bits; ++b) {
      if ((mask >> b) & 1) p.insert(slots[static_cast<std::size_t>(b)].first, slots[static_cast<std::size_t>(b)].second);
    }
    out.push_back(std::move(p));
  }
  return out;
}

/// Every pattern on n vertices (loops allowed), n <= 4.
inline std::vector<Pattern> all_patterns(int n) {
  int const bits = n * n;
  std::vector<Pattern> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    Pattern p(n);
    for (int b = 0; b < bits; ++b) {
      if ((mask >> b) & 1) p.insert(b / n, b % n);
    }
    out.push_back(std::move(p));
  }
  return out;
}

inline Pattern random_pattern(int n, std::mt19937_64& rng, double density = 0.3, bool loops = true) {
  std::bernoulli_distribution coin(density);
  Pattern p(n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      if ((loops || k != m) && coin(rng)) p.insert(k, m);
    }
  }
  return p;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = k;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Dense random exact matrix; entries zero with probability `zero_rate`,
/// occasionally with an imaginary part.
inline Matrix random_exact_matrix(int n, std::mt19937_64& rng, double zero_rate = 0.3) {
  std::bernoulli_distribution zero(zero_rate);
  std::bernoulli_distribution complex_part(0.2);
  Matrix out(n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      if (zero(rng)) continue;
      ComplexRational v = oracle::random_nonzero_rational(rng, 20);
      if (complex_part(rng)) v += ComplexRational(Rational(0), oracle::random_nonzero_rational(rng, 20).re());
      out(k, m) = v;
    }
  }
  return out;
}

/// Support of the exact product, by direct multiplication.
inline Pattern exact_product_support(Matrix const& a, Matrix const& b) { return support(a * b); }

}  // namespace matalg::test
