#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "matalg/pattern.hpp"

namespace matalg {

/// Lexicographically least row-major adjacency bit-string over all vertex
/// relabelings. Each code row stores column 0 in its most significant of n
/// bits, so comparing rows numerically compares the bit-string.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> code;

  Pattern pattern() const;
  friend bool operator==(CanonicalForm const&, CanonicalForm const&) = default;
  friend std::strong_ordering operator<=>(CanonicalForm const&, CanonicalForm const&) = default;
};

inline constexpr int kMaxCanonicalDimension = 10;

CanonicalForm canonical_form(Pattern const& g);
/// Number of relabelings fixing g.
std::uint64_t automorphism_count(Pattern const& g);

struct EnumerationOptions {
  int labeled_cap = 6;
  int unlabeled_cap = 6;
  unsigned threads = 1;
};

using PatternSink = std::function<void(Pattern const&)>;

/// Counts minimal strongly connected loop-free digraphs on n vertices.
/// labeled: every pattern counts, and `sink` sees each one ordered by edge
/// count, then by the numeric value of its off-diagonal bit mask.
/// unlabeled: one per isomorphism class; `sink` sees the canonical
/// representatives in CanonicalForm order.
/// Throws CapExceeded above the relevant cap.
std::uint64_t enumerate_minimal_scc(int n, bool labeled, EnumerationOptions const& options = {},
                                   PatternSink const& sink = {});

std::vector<Pattern> minimal_scc_patterns(int n, EnumerationOptions const& options = {});

inline constexpr int kMaxEdgeBoundCheck = 4;

/// Edge counts of all minimal strongly connected patterns found by an
/// unpruned sweep over every loop-free pattern (n <= 4).
std::set<int> observed_edge_counts(int n);

/// True iff the unpruned sweep stays inside the window [n, 2(n-1)].
bool verify_edge_bound(int n);

struct CountRow {
  int n = 0;
  std::optional<std::uint64_t> labeled;
  std::optional<std::uint64_t> unlabeled;
  double seconds = 0.0;

  friend bool operator==(CountRow const&, CountRow const&) = default;
};

std::vector<CountRow> count_table(int max_n, bool labeled, bool unlabeled,
                                  EnumerationOptions const& options = {});

}  // namespace matalg
