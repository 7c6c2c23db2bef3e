#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "matalg/pattern.hpp"

namespace matalg {

/// A proper nonempty subset i of {0..n-1}, bitmask-encoded. Names both the
/// maximal pattern subalgebra s_i(n) and its invariant subspace span{e_j : j in i}.
class IndexSubset {
 public:
  using Mask = std::uint64_t;

  /// Throws IndexOutOfRange unless 0 < |mask| < n and mask fits in n bits.
  IndexSubset(int n, Mask mask);
  static IndexSubset from_members(int n, std::vector<int> const& members);

  int n() const noexcept { return n_; }
  Mask mask() const noexcept { return mask_; }
  int size() const;
  bool contains(int v) const;
  std::vector<int> members() const;
  IndexSubset complement() const;

  // Images in dimension n+1 used by the level-to-level recursion.
  IndexSubset embedded() const;            // i
  IndexSubset with_last() const;           // i U {n}
  IndexSubset shifted() const;             // i + 1
  IndexSubset shifted_with_first() const;  // (i + 1) U {0}

  friend bool operator==(IndexSubset const&, IndexSubset const&) = default;
  /// Dimension, then size, then lexicographic on sorted members.
  friend std::strong_ordering operator<=>(IndexSubset const& a, IndexSubset const& b);

 private:
  int n_;
  Mask mask_;
};

struct MaximalSubalgebra {
  IndexSubset subset;
  Pattern pattern;  // full pattern minus {(k, m) : k not in i, m in i}

  friend bool operator==(MaximalSubalgebra const&, MaximalSubalgebra const&) = default;
};

inline constexpr int kMaxSubalgebraListing = 24;
inline constexpr std::size_t kMaxInvariantListing = std::size_t{1} << 22;

MaximalSubalgebra maximal_subalgebra(IndexSubset const& i);

/// All 2^n - 2 maximal pattern subalgebras, ordered by subset (size, then
/// lexicographic). Requires 2 <= n <= kMaxSubalgebraListing.
std::vector<MaximalSubalgebra> enumerate_maximal_subalgebras(int n);

/// Every proper nonempty subset of {0..n-1}, in IndexSubset order.
std::vector<IndexSubset> proper_subsets(int n);

/// Sorted members of i: the coordinates spanning V_i.
std::vector<int> invariant_subspace_of(IndexSubset const& i);

/// Every i whose subalgebra pattern contains g, i.e. no (k, m) in g with k
/// outside i and m inside i. Sorted; empty for n = 1. Throws CapExceeded when
/// the answer would exceed kMaxInvariantListing entries.
std::vector<IndexSubset> containing_maximal_subalgebras(Pattern const& g);

/// Least entry of containing_maximal_subalgebras(g) without listing them all.
std::optional<IndexSubset> least_containing_subalgebra(Pattern const& g);

struct LiftStep {
  IndexSubset parent;
  int branch;                         // 0: P^(0) preimage, 1: P^(1) preimage
  std::array<IndexSubset, 2> children;  // branch 0: {i, i U {n}}; branch 1: {i+1, (i+1) U {0}}
};

/// Four children per parent, one LiftStep per (parent, branch), in input order.
std::vector<LiftStep> lift_derivation(std::vector<IndexSubset> const& level);

/// Deduplicated, sorted children of a complete level-n list. Throws
/// std::logic_error when the output does not have 2^(n+1) - 2 entries.
std::vector<IndexSubset> lift_subalgebras(std::vector<IndexSubset> const& level);

}  // namespace matalg
