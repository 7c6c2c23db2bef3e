#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace matalg {

inline constexpr int kMaxDimension = 64;

/// Element of the two-point boolean semiring: 1+1=1, 0*1=0.
struct SemiringBit {
  bool value = false;

  friend constexpr SemiringBit operator+(SemiringBit a, SemiringBit b) {
    return {a.value || b.value};
  }
  friend constexpr SemiringBit operator*(SemiringBit a, SemiringBit b) {
    return {a.value && b.value};
  }
  friend constexpr bool operator==(SemiringBit, SemiringBit) = default;
};

/// An index set G in {0..n-1}^2, stored as bit-packed rows: bit m of row k
/// is set iff (k, m) is in G. Doubles as the adjacency matrix of the digraph
/// with an arc k -> m for each pair.
class Pattern {
 public:
  using Row = std::uint64_t;

  explicit Pattern(int n);
  /// Takes ownership of raw rows; bits at or above n must be clear.
  Pattern(int n, std::vector<Row> rows);

  static Pattern full(int n);
  static Pattern identity(int n);
  /// 0-based pairs.
  static Pattern from_edges(int n, std::span<std::pair<int, int> const> edges);
  static Pattern from_edges(int n, std::initializer_list<std::pair<int, int>> edges);
  /// Square 0/1 matrix; throws on ragged or non-binary input.
  static Pattern from_adjacency(std::vector<std::vector<int>> const& adjacency);

  int n() const noexcept { return n_; }
  Row row(int k) const { return rows_[static_cast<std::size_t>(k)]; }
  std::span<Row const> rows() const noexcept { return rows_; }
  Row column(int m) const;
  /// Mask with the low n bits set.
  Row vertex_mask() const noexcept;

  bool contains(int k, int m) const;
  void insert(int k, int m);
  void erase(int k, int m);

  int edge_count() const;
  bool empty() const;
  bool has_loops() const;

  Pattern transposed() const;
  Pattern without_loops() const;
  /// Simultaneous relabeling: (k, m) -> (perm[k], perm[m]).
  Pattern relabeled(std::span<int const> perm) const;

  /// 0-based pairs in row-major order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::vector<int>> adjacency() const;

  bool is_subset_of(Pattern const& other) const;
  Pattern& operator|=(Pattern const& rhs);
  Pattern& operator&=(Pattern const& rhs);
  friend Pattern operator|(Pattern lhs, Pattern const& rhs) { return lhs |= rhs; }
  friend Pattern operator&(Pattern lhs, Pattern const& rhs) { return lhs &= rhs; }

  friend bool operator==(Pattern const&, Pattern const&) = default;
  friend std::strong_ordering operator<=>(Pattern const& a, Pattern const& b);

  /// Rows joined by '/', e.g. "01/10".
  std::string to_string() const;

 private:
  void check_index(int k, int m) const;

  int n_;
  std::vector<Row> rows_;
};

/// {(k,m) : exists p with (k,p) in g1 and (p,m) in g2}.
Pattern pattern_product(Pattern const& g1, Pattern const& g2);

/// g^1 | g^2 | ... | g^max_k over the boolean semiring.
Pattern pattern_powers_union(Pattern const& g, int max_k);

/// True iff the matrix units indexed by g generate the full matrix algebra,
/// i.e. the first n powers of g cover every pair.
bool is_generating(Pattern const& g);

/// Smallest product-closed pattern containing g (and the diagonal if asked).
Pattern pattern_closure(Pattern const& g, bool with_diagonal);

/// True iff s o s is contained in s.
bool is_pattern_subalgebra(Pattern const& s);

}  // namespace matalg
