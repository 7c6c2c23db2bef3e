#include "matalg/pattern.hpp"

#include <bit>
#include <string>

#include "matalg/error.hpp"

namespace matalg {

namespace {

void check_dimension(int n) {
  if (n < 1 || n > kMaxDimension) {
    throw DimensionMismatch("pattern dimension must lie in 1.." + std::to_string(kMaxDimension) +
                            ", got " + std::to_string(n));
  }
}

Pattern::Row low_bits(int n) {
  return n >= 64 ? ~Pattern::Row{0} : ((Pattern::Row{1} << n) - 1);
}

void check_same_dimension(Pattern const& a, Pattern const& b) {
  if (a.n() != b.n()) {
    throw DimensionMismatch("pattern dimensions differ: " + std::to_string(a.n()) + " vs " +
                            std::to_string(b.n()));
  }
}

}  // namespace

Pattern::Pattern(int n) : n_(n) {
  check_dimension(n);
  rows_.assign(static_cast<std::size_t>(n), 0);
}

Pattern::Pattern(int n, std::vector<Row> rows) : n_(n), rows_(std::move(rows)) {
  check_dimension(n);
  if (rows_.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch("pattern needs exactly n rows");
  }
  for (Row r : rows_) {
    if (r & ~low_bits(n)) throw IndexOutOfRange("pattern row has bits beyond column n");
  }
}

Pattern Pattern::full(int n) {
  Pattern p(n);
  for (auto& r : p.rows_) r = low_bits(n);
  return p;
}

Pattern Pattern::identity(int n) {
  Pattern p(n);
  for (int k = 0; k < n; ++k) p.rows_[static_cast<std::size_t>(k)] = Row{1} << k;
  return p;
}

Pattern Pattern::from_edges(int n, std::span<std::pair<int, int> const> edges) {
  Pattern p(n);
  for (auto [k, m] : edges) p.insert(k, m);
  return p;
}

Pattern Pattern::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<std::pair<int, int> const>(edges.begin(), edges.size()));
}

Pattern Pattern::from_adjacency(std::vector<std::vector<int>> const& adjacency) {
  int const n = static_cast<int>(adjacency.size());
  Pattern p(n);
  for (int k = 0; k < n; ++k) {
    auto const& row = adjacency[static_cast<std::size_t>(k)];
    if (static_cast<int>(row.size()) != n) throw DimensionMismatch("adjacency matrix is not square");
    for (int m = 0; m < n; ++m) {
      int v = row[static_cast<std::size_t>(m)];
      if (v != 0 && v != 1) throw ParseError("adjacency entries must be 0 or 1");
      if (v) p.insert(k, m);
    }
  }
  return p;
}

Pattern::Row Pattern::vertex_mask() const noexcept { return low_bits(n_); }

Pattern::Row Pattern::column(int m) const {
  check_index(0, m);
  Row col = 0;
  for (int k = 0; k < n_; ++k) {
    if ((rows_[static_cast<std::size_t>(k)] >> m) & 1) col |= Row{1} << k;
  }
  return col;
}

void Pattern::check_index(int k, int m) const {
  if (k < 0 || k >= n_ || m < 0 || m >= n_) {
    throw IndexOutOfRange("index (" + std::to_string(k) + "," + std::to_string(m) +
                          ") outside dimension " + std::to_string(n_));
  }
}

bool Pattern::contains(int k, int m) const {
  check_index(k, m);
  return (rows_[static_cast<std::size_t>(k)] >> m) & 1;
}

void Pattern::insert(int k, int m) {
  check_index(k, m);
  rows_[static_cast<std::size_t>(k)] |= Row{1} << m;
}

void Pattern::erase(int k, int m) {
  check_index(k, m);
  rows_[static_cast<std::size_t>(k)] &= ~(Row{1} << m);
}

int Pattern::edge_count() const {
  int count = 0;
  for (Row r : rows_) count += std::popcount(r);
  return count;
}

bool Pattern::empty() const {
  for (Row r : rows_) {
    if (r) return false;
  }
  return true;
}

bool Pattern::has_loops() const {
  for (int k = 0; k < n_; ++k) {
    if ((rows_[static_cast<std::size_t>(k)] >> k) & 1) return true;
  }
  return false;
}

Pattern Pattern::transposed() const {
  Pattern t(n_);
  for (int k = 0; k < n_; ++k) {
    for (Row r = rows_[static_cast<std::size_t>(k)]; r; r &= r - 1) {
      t.rows_[static_cast<std::size_t>(std::countr_zero(r))] |= Row{1} << k;
    }
  }
  return t;
}

Pattern Pattern::without_loops() const {
  Pattern p = *this;
  for (int k = 0; k < n_; ++k) p.rows_[static_cast<std::size_t>(k)] &= ~(Row{1} << k);
  return p;
}

Pattern Pattern::relabeled(std::span<int const> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DimensionMismatch("permutation has wrong length");
  Pattern p(n_);
  for (int k = 0; k < n_; ++k) {
    for (Row r = rows_[static_cast<std::size_t>(k)]; r; r &= r - 1) {
      p.insert(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(std::countr_zero(r))]);
    }
  }
  return p;
}

std::vector<std::pair<int, int>> Pattern::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int k = 0; k < n_; ++k) {
    for (Row r = rows_[static_cast<std::size_t>(k)]; r; r &= r - 1) {
      out.emplace_back(k, std::countr_zero(r));
    }
  }
  return out;
}

std::vector<std::vector<int>> Pattern::adjacency() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n_),
                                    std::vector<int>(static_cast<std::size_t>(n_), 0));
  for (auto [k, m] : edges()) out[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)] = 1;
  return out;
}

bool Pattern::is_subset_of(Pattern const& other) const {
  check_same_dimension(*this, other);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    if (rows_[k] & ~other.rows_[k]) return false;
  }
  return true;
}

Pattern& Pattern::operator|=(Pattern const& rhs) {
  check_same_dimension(*this, rhs);
  for (std::size_t k = 0; k < rows_.size(); ++k) rows_[k] |= rhs.rows_[k];
  return *this;
}

Pattern& Pattern::operator&=(Pattern const& rhs) {
  check_same_dimension(*this, rhs);
  for (std::size_t k = 0; k < rows_.size(); ++k) rows_[k] &= rhs.rows_[k];
  return *this;
}

std::strong_ordering operator<=>(Pattern const& a, Pattern const& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  return a.rows_ <=> b.rows_;
}

std::string Pattern::to_string() const {
  std::string out;
  for (int k = 0; k < n_; ++k) {
    if (k) out += '/';
    for (int m = 0; m < n_; ++m) out += ((rows_[static_cast<std::size_t>(k)] >> m) & 1) ? '1' : '0';
  }
  return out;
}

Pattern pattern_product(Pattern const& g1, Pattern const& g2) {
  check_same_dimension(g1, g2);
  int const n = g1.n();
  std::vector<Pattern::Row> rows(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    Pattern::Row acc = 0;
    for (Pattern::Row r = g1.row(k); r; r &= r - 1) acc |= g2.row(std::countr_zero(r));
    rows[static_cast<std::size_t>(k)] = acc;
  }
  return Pattern(n, std::move(rows));
}

Pattern pattern_powers_union(Pattern const& g, int max_k) {
  if (max_k < 1) throw IndexOutOfRange("max_k must be at least 1");
  Pattern power = g;
  Pattern acc = g;
  for (int k = 2; k <= max_k; ++k) {
    power = pattern_product(power, g);
    if (power.is_subset_of(acc)) break;  // union is stable from here on
    acc |= power;
  }
  return acc;
}

bool is_generating(Pattern const& g) {
  return pattern_powers_union(g, g.n()) == Pattern::full(g.n());
}

Pattern pattern_closure(Pattern const& g, bool with_diagonal) {
  Pattern seed = with_diagonal ? (g | Pattern::identity(g.n())) : g;
  return pattern_powers_union(seed, g.n() * g.n());
}

bool is_pattern_subalgebra(Pattern const& s) {
  return pattern_product(s, s).is_subset_of(s);
}

}  // namespace matalg
