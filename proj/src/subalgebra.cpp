#include "matalg/subalgebra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "matalg/connectivity.hpp"
#include "matalg/error.hpp"

namespace matalg {

namespace {

IndexSubset::Mask low_bits(int n) {
  return n >= 64 ? ~IndexSubset::Mask{0} : ((IndexSubset::Mask{1} << n) - 1);
}

}  // namespace

IndexSubset::IndexSubset(int n, Mask mask) : n_(n), mask_(mask) {
  if (n < 2 || n > kMaxDimension) {
    throw IndexOutOfRange("a proper nonempty subset needs 2 <= n <= 64, got n = " + std::to_string(n));
  }
  if (mask & ~low_bits(n)) throw IndexOutOfRange("subset member outside 1..n");
  if (mask == 0) throw IndexOutOfRange("subset must be nonempty");
  if (mask == low_bits(n)) throw IndexOutOfRange("subset must be proper");
}

IndexSubset IndexSubset::from_members(int n, std::vector<int> const& members) {
  Mask mask = 0;
  for (int v : members) {
    if (v < 0 || v >= n) throw IndexOutOfRange("subset member " + std::to_string(v) + " out of range");
    mask |= Mask{1} << v;
  }
  return IndexSubset(n, mask);
}

int IndexSubset::size() const { return std::popcount(mask_); }

bool IndexSubset::contains(int v) const { return v >= 0 && v < n_ && ((mask_ >> v) & 1); }

std::vector<int> IndexSubset::members() const {
  std::vector<int> out;
  for (Mask m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

IndexSubset IndexSubset::complement() const { return IndexSubset(n_, low_bits(n_) & ~mask_); }

IndexSubset IndexSubset::embedded() const { return IndexSubset(n_ + 1, mask_); }

IndexSubset IndexSubset::with_last() const {
  return IndexSubset(n_ + 1, mask_ | (Mask{1} << n_));
}

IndexSubset IndexSubset::shifted() const { return IndexSubset(n_ + 1, mask_ << 1); }

IndexSubset IndexSubset::shifted_with_first() const {
  return IndexSubset(n_ + 1, (mask_ << 1) | 1);
}

std::strong_ordering operator<=>(IndexSubset const& a, IndexSubset const& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  // Equal sizes: the lexicographically smaller member list has the smaller
  // lowest differing element.
  IndexSubset::Mask const diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  IndexSubset::Mask const lowest = diff & (~diff + 1);
  return (a.mask_ & lowest) ? std::strong_ordering::less : std::strong_ordering::greater;
}

MaximalSubalgebra maximal_subalgebra(IndexSubset const& i) {
  int const n = i.n();
  Pattern::Row const all = low_bits(n);
  std::vector<Pattern::Row> rows(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    rows[static_cast<std::size_t>(k)] = i.contains(k) ? all : (all & ~i.mask());
  }
  return {i, Pattern(n, std::move(rows))};
}

std::vector<IndexSubset> proper_subsets(int n) {
  if (n < 2) throw IndexOutOfRange("proper nonempty subsets need n >= 2");
  if (n > kMaxSubalgebraListing) {
    throw CapExceeded("listing 2^n - 2 subsets is capped at n = " + std::to_string(kMaxSubalgebraListing));
  }
  std::vector<IndexSubset> out;
  IndexSubset::Mask const all = low_bits(n);
  out.reserve(static_cast<std::size_t>(all - 1));
  for (IndexSubset::Mask m = 1; m < all; ++m) out.emplace_back(n, m);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MaximalSubalgebra> enumerate_maximal_subalgebras(int n) {
  std::vector<MaximalSubalgebra> out;
  for (auto const& i : proper_subsets(n)) out.push_back(maximal_subalgebra(i));
  return out;
}

std::vector<int> invariant_subspace_of(IndexSubset const& i) { return i.members(); }

namespace {

// i is admissible iff it is closed under predecessors: m in i and (k, m) in g
// force k in i. Branching on the lowest undecided vertex with include ->
// add its backward closure, exclude -> add its forward closure never hits a
// dead end, so the search is linear in the number of answers.
struct ClosedSetSearch {
  std::vector<IndexSubset::Mask> back;
  std::vector<IndexSubset::Mask> fwd;
  IndexSubset::Mask all;
  int n;
  std::vector<IndexSubset> found;

  void run(IndexSubset::Mask in, IndexSubset::Mask out) {
    IndexSubset::Mask const undecided = all & ~(in | out);
    if (!undecided) {
      if (in != 0 && in != all) {
        if (found.size() >= kMaxInvariantListing) {
          throw CapExceeded("more than " + std::to_string(kMaxInvariantListing) + " invariant subsets");
        }
        found.emplace_back(n, in);
      }
      return;
    }
    auto const v = static_cast<std::size_t>(std::countr_zero(undecided));
    run(in | back[v], out);
    run(in, out | fwd[v]);
  }
};

}  // namespace

std::vector<IndexSubset> containing_maximal_subalgebras(Pattern const& g) {
  int const n = g.n();
  if (n < 2) return {};
  ClosedSetSearch search{{}, {}, low_bits(n), n, {}};
  for (int v = 0; v < n; ++v) {
    search.back.push_back(detail::backward_reach(g.rows(), v));
    search.fwd.push_back(detail::forward_reach(g.rows(), v));
  }
  search.run(0, 0);
  std::sort(search.found.begin(), search.found.end());
  return std::move(search.found);
}

std::optional<IndexSubset> least_containing_subalgebra(Pattern const& g) {
  int const n = g.n();
  if (n < 2) return std::nullopt;
  // Any admissible set contains the backward closure of each member, so the
  // smallest admissible sets are exactly the smallest proper closures.
  std::optional<IndexSubset> best;
  for (int v = 0; v < n; ++v) {
    IndexSubset::Mask const closure = detail::backward_reach(g.rows(), v);
    if (closure == low_bits(n)) continue;
    IndexSubset candidate(n, closure);
    if (!best || candidate < *best) best = candidate;
  }
  return best;
}

std::vector<LiftStep> lift_derivation(std::vector<IndexSubset> const& level) {
  std::vector<LiftStep> out;
  out.reserve(level.size() * 2);
  for (auto const& i : level) {
    out.push_back({i, 0, {i.embedded(), i.with_last()}});
    out.push_back({i, 1, {i.shifted(), i.shifted_with_first()}});
  }
  return out;
}

std::vector<IndexSubset> lift_subalgebras(std::vector<IndexSubset> const& level) {
  if (level.empty()) throw std::logic_error("cannot lift an empty level");
  int const n = level.front().n();
  for (auto const& i : level) {
    if (i.n() != n) throw DimensionMismatch("level mixes subsets of different dimensions");
  }
  std::vector<IndexSubset> out;
  for (auto const& step : lift_derivation(level)) {
    out.push_back(step.children[0]);
    out.push_back(step.children[1]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  std::size_t const expected = (std::size_t{1} << (n + 1)) - 2;
  if (n + 1 < 64 && out.size() != expected) {
    throw std::logic_error("incomplete level: lifting produced " + std::to_string(out.size()) +
                           " subsets, expected " + std::to_string(expected));
  }
  return out;
}

}  // namespace matalg
