#include "matalg/enumeration.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>
#include <string>
#include <thread>

#include "matalg/connectivity.hpp"
#include "matalg/error.hpp"

namespace matalg {

namespace {

using Row = Pattern::Row;

// Row orientation swap between Pattern (bit m = column m) and code rows
// (column 0 in the top of n bits).
Row reverse_bits(Row r, int n) {
  Row out = 0;
  for (int m = 0; m < n; ++m) {
    if ((r >> m) & 1) out |= Row{1} << (n - 1 - m);
  }
  return out;
}

// Lays the n(n-1) off-diagonal positions out row by row, skipping the
// diagonal: position r*(n-1) + c maps to (r, c < r ? c : c + 1).
void rows_from_mask(std::uint64_t mask, int n, std::span<Row> rows) {
  int const width = n - 1;
  Row const seg_mask = (Row{1} << width) - 1;
  for (int r = 0; r < n; ++r) {
    Row const seg = (mask >> (r * width)) & seg_mask;
    Row const low = (Row{1} << r) - 1;
    rows[static_cast<std::size_t>(r)] = (seg & low) | ((seg & ~low) << 1);
  }
}

std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t const c = x & (~x + 1);
  std::uint64_t const r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

bool passes_degree_filter(std::span<Row const> rows, Row all) {
  Row in = 0;
  for (Row r : rows) {
    if (!r) return false;
    in |= r;
  }
  return in == all;
}

struct Block {
  int edges;
  std::uint64_t prefix;
};

struct BlockResult {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> masks;
};

class LabeledSweep {
 public:
  LabeledSweep(int n, bool keep) : n_(n), keep_(keep) {
    bits_ = n * (n - 1);
    prefix_bits_ = std::min(bits_, 8);
    low_bits_ = bits_ - prefix_bits_;
    for (int e = n; e <= 2 * (n - 1); ++e) {
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << prefix_bits_); ++t) {
        int const rest = e - std::popcount(t);
        if (rest >= 0 && rest <= low_bits_) blocks_.push_back({e, t});
      }
    }
  }

  std::vector<BlockResult> run(unsigned threads) const {
    std::vector<BlockResult> results(blocks_.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(blocks_.size())));
    auto worker = [&](unsigned id) {
      for (std::size_t b = id; b < blocks_.size(); b += threads) results[b] = sweep(blocks_[b]);
    };
    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }
    return results;
  }

  Pattern pattern_of(std::uint64_t mask) const {
    std::vector<Row> rows(static_cast<std::size_t>(n_));
    rows_from_mask(mask, n_, rows);
    return Pattern(n_, std::move(rows));
  }

 private:
  BlockResult sweep(Block const& block) const {
    BlockResult out;
    int const rest = block.edges - std::popcount(block.prefix);
    std::uint64_t const high = block.prefix << low_bits_;
    std::uint64_t const limit = std::uint64_t{1} << low_bits_;
    Row const all = (Row{1} << n_) - 1;
    std::array<Row, 8> rows{};
    std::span<Row> view(rows.data(), static_cast<std::size_t>(n_));

    auto visit = [&](std::uint64_t low) {
      std::uint64_t const mask = high | low;
      rows_from_mask(mask, n_, view);
      if (!passes_degree_filter(view, all)) return;
      if (!detail::minimal_strongly_connected_rows(view)) return;
      ++out.count;
      if (keep_) out.masks.push_back(mask);
    };

    if (rest == 0) {
      visit(0);
      return out;
    }
    for (std::uint64_t low = (std::uint64_t{1} << rest) - 1; low < limit; low = next_combination(low)) {
      visit(low);
    }
    return out;
  }

  int n_;
  bool keep_;
  int bits_;
  int prefix_bits_;
  int low_bits_;
  std::vector<Block> blocks_;
};

void check_cap(int n, int cap, char const* what) {
  if (n < 1) throw IndexOutOfRange("enumeration needs n >= 1");
  if (n > cap || n > 8) {
    throw CapExceeded(std::string(what) + " enumeration is capped at n = " + std::to_string(std::min(cap, 8)) +
                      ", got n = " + std::to_string(n));
  }
}

}  // namespace

Pattern CanonicalForm::pattern() const {
  std::vector<Row> rows;
  for (Row r : code) rows.push_back(reverse_bits(r, n));
  return Pattern(n, std::move(rows));
}

CanonicalForm canonical_form(Pattern const& g) {
  int const n = g.n();
  if (n > kMaxCanonicalDimension) {
    throw CapExceeded("canonical form is capped at n = " + std::to_string(kMaxCanonicalDimension));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Row> best;
  std::vector<Row> candidate(static_cast<std::size_t>(n));
  // perm[k] is the old vertex placed at new position k.
  do {
    bool worse = false;
    bool better = best.empty();
    for (int k = 0; k < n && !worse; ++k) {
      Row const old_row = g.row(perm[static_cast<std::size_t>(k)]);
      Row code_row = 0;
      for (int m = 0; m < n; ++m) {
        code_row = (code_row << 1) | ((old_row >> perm[static_cast<std::size_t>(m)]) & 1);
      }
      candidate[static_cast<std::size_t>(k)] = code_row;
      if (!better) {
        if (code_row > best[static_cast<std::size_t>(k)]) worse = true;
        else if (code_row < best[static_cast<std::size_t>(k)]) better = true;
      }
    }
    if (better) best = candidate;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {n, std::move(best)};
}

std::uint64_t automorphism_count(Pattern const& g) {
  int const n = g.n();
  if (n > kMaxCanonicalDimension) {
    throw CapExceeded("automorphism count is capped at n = " + std::to_string(kMaxCanonicalDimension));
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    if (g.relabeled(perm) == g) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

std::uint64_t enumerate_minimal_scc(int n, bool labeled, EnumerationOptions const& options,
                                   PatternSink const& sink) {
  check_cap(n, labeled ? options.labeled_cap : options.unlabeled_cap,
            labeled ? "labeled" : "unlabeled");
  if (n == 1) {
    if (sink) sink(Pattern(1));
    return 1;
  }
  bool const keep = !labeled || static_cast<bool>(sink);
  LabeledSweep const sweep(n, keep);
  auto const results = sweep.run(options.threads);

  if (labeled) {
    std::uint64_t total = 0;
    for (auto const& r : results) {
      total += r.count;
      if (sink) {
        for (auto mask : r.masks) sink(sweep.pattern_of(mask));
      }
    }
    return total;
  }

  std::set<CanonicalForm> classes;
  for (auto const& r : results) {
    for (auto mask : r.masks) classes.insert(canonical_form(sweep.pattern_of(mask)));
  }
  if (sink) {
    for (auto const& c : classes) sink(c.pattern());
  }
  return classes.size();
}

std::vector<Pattern> minimal_scc_patterns(int n, EnumerationOptions const& options) {
  std::vector<Pattern> out;
  enumerate_minimal_scc(n, true, options, [&](Pattern const& p) { out.push_back(p); });
  return out;
}

std::set<int> observed_edge_counts(int n) {
  if (n < 1 || n > kMaxEdgeBoundCheck) {
    throw CapExceeded("unpruned sweep is capped at n = " + std::to_string(kMaxEdgeBoundCheck));
  }
  std::set<int> out;
  if (n == 1) {
    out.insert(0);
    return out;
  }
  int const bits = n * (n - 1);
  std::array<Row, kMaxEdgeBoundCheck> rows{};
  std::span<Row> view(rows.data(), static_cast<std::size_t>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    rows_from_mask(mask, n, view);
    if (detail::minimal_strongly_connected_rows(view)) out.insert(std::popcount(mask));
  }
  return out;
}

bool verify_edge_bound(int n) {
  auto const counts = observed_edge_counts(n);
  if (n == 1) return true;
  return std::all_of(counts.begin(), counts.end(), [n](int e) { return e >= n && e <= 2 * (n - 1); });
}

std::vector<CountRow> count_table(int max_n, bool labeled, bool unlabeled,
                                  EnumerationOptions const& options) {
  if (labeled) check_cap(max_n, options.labeled_cap, "labeled");
  if (unlabeled) check_cap(max_n, options.unlabeled_cap, "unlabeled");
  std::vector<CountRow> rows;
  for (int n = 1; n <= max_n; ++n) {
    auto const start = std::chrono::steady_clock::now();
    CountRow row{.n = n};
    if (labeled) row.labeled = enumerate_minimal_scc(n, true, options);
    if (unlabeled) row.unlabeled = enumerate_minimal_scc(n, false, options);
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace matalg
