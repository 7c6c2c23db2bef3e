#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "matalg/connectivity.hpp"
#include "matalg/error.hpp"
#include "matalg/oracle.hpp"
#include "matalg/subalgebra.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

using namespace matalg;
using namespace matalg::test;
namespace ref = matalg::test::reference;

namespace {

std::set<std::pair<IndexSubset, Pattern>> as_set(std::vector<MaximalSubalgebra> const& list) {
  std::set<std::pair<IndexSubset, Pattern>> out;
  for (auto const& s : list) out.emplace(s.subset, s.pattern);
  return out;
}

std::set<std::pair<IndexSubset, Pattern>> displayed(int n, std::vector<ref::DisplayedSubalgebra> const& table) {
  std::set<std::pair<IndexSubset, Pattern>> out;
  for (auto const& entry : table) out.emplace(subset1(n, entry.subset), rows_of(entry.rows));
  return out;
}

std::vector<IndexSubset> sorted(std::vector<IndexSubset> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// True when every matrix maps span{e_m : m in i} into itself: A v stays
// supported on i for a generic v supported on i.
bool preserves(Matrix const& a, IndexSubset const& i, oracle::Rng& rng) {
  int const n = a.n();
  Matrix v(n);
  for (int m : i.members()) v(m, 0) = oracle::random_nonzero_rational(rng);
  Matrix const image = a * v;
  for (int k = 0; k < n; ++k) {
    if (!i.contains(k) && !(image(k, 0).is_zero())) return false;
  }
  return true;
}

void check_arrows(std::vector<IndexSubset> const& level, std::vector<ref::Arrow> const& arrows) {
  int const n = level.front().n();
  auto const steps = lift_derivation(level);
  for (auto const& arrow : arrows) {
    IndexSubset const parent = subset1(n, arrow.parent);
    auto it = std::find_if(steps.begin(), steps.end(), [&](LiftStep const& s) {
      return s.parent == parent && s.branch == arrow.branch;
    });
    REQUIRE(it != steps.end());
    CHECK(it->children[0] == subset1(n + 1, arrow.first));
    CHECK(it->children[1] == subset1(n + 1, arrow.second));
  }
}

}  // namespace

TEST_CASE("maximal subalgebra examples") {
  CHECK(maximal_subalgebra(subset1(2, {1})).pattern == pairs1(2, {{1, 1}, {1, 2}, {2, 2}}));
  Pattern expected = Pattern::full(3);
  expected.erase(0, 1);
  expected.erase(0, 2);
  CHECK(maximal_subalgebra(subset1(3, {2, 3})).pattern == expected);
  CHECK_THROWS(subset1(3, {1, 2, 3}));
  CHECK_THROWS(subset1(3, {}));
  CHECK_THROWS(IndexSubset(1, 1));
}

TEST_CASE("displayed lists for n = 2, 3, 4") {
  CHECK(as_set(enumerate_maximal_subalgebras(2)) == displayed(2, ref::kS2));
  CHECK(as_set(enumerate_maximal_subalgebras(3)) == displayed(3, ref::kS3));
  CHECK(as_set(enumerate_maximal_subalgebras(4)) == displayed(4, ref::kS4));
}

TEST_CASE("subalgebra count is 2^n - 2") {
  for (int n = 2; n <= 12; ++n) {
    auto const list = enumerate_maximal_subalgebras(n);
    CHECK(list.size() == (std::size_t{1} << n) - 2);
    CHECK(as_set(list).size() == list.size());
  }
  CHECK(enumerate_maximal_subalgebras(5).size() == 30);
  CHECK_THROWS_AS(enumerate_maximal_subalgebras(kMaxSubalgebraListing + 1), CapExceeded);
}

TEST_CASE("n = 4 listing by subset size") {
  std::array<int, 5> by_size{};
  for (auto const& s : enumerate_maximal_subalgebras(4)) ++by_size[static_cast<std::size_t>(s.subset.size())];
  CHECK(by_size[1] == 4);
  CHECK(by_size[2] == 6);
  CHECK(by_size[3] == 4);
}

TEST_CASE("invariant subspace examples") {
  CHECK(invariant_subspace_of(subset1(2, {1})) == std::vector<int>{0});
  CHECK(invariant_subspace_of(subset1(3, {1, 3})) == std::vector<int>{0, 2});
  CHECK(invariant_subspace_of(subset1(4, {2})) == std::vector<int>{1});
}

TEST_CASE("every maximal pattern is a subalgebra, n <= 8") {
  for (int n = 2; n <= 8; ++n) {
    for (auto const& s : enumerate_maximal_subalgebras(n)) REQUIRE(is_pattern_subalgebra(s.pattern));
  }
}

TEST_CASE("maximality, exhaustive n <= 5") {
  for (int n = 2; n <= 5; ++n) {
    for (auto const& s : enumerate_maximal_subalgebras(n)) {
      for (int k = 0; k < n; ++k) {
        for (int m = 0; m < n; ++m) {
          if (s.pattern.contains(k, m)) continue;
          Pattern bigger = s.pattern;
          bigger.insert(k, m);
          REQUIRE(pattern_closure(bigger, false) == Pattern::full(n));
        }
      }
    }
  }
}

TEST_CASE("containment examples") {
  CHECK(containing_maximal_subalgebras(pairs1(2, {{1, 2}})) == std::vector{subset1(2, {1})});
  CHECK(containing_maximal_subalgebras(rows_of(ref::kG3[0])).empty());
  CHECK(containing_maximal_subalgebras(Pattern(2)) == std::vector{subset1(2, {1}), subset1(2, {2})});
  CHECK(containing_maximal_subalgebras(Pattern(1)).empty());
  CHECK(least_containing_subalgebra(pairs1(3, {{1, 2}})) == subset1(3, {1}));
  CHECK_FALSE(least_containing_subalgebra(rows_of(ref::kG3[1])).has_value());
}

TEST_CASE("containment matches a direct scan, exhaustive n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    auto const all = enumerate_maximal_subalgebras(n);
    for (Pattern const& g : all_patterns(n)) {
      std::vector<IndexSubset> expected;
      for (auto const& s : all) {
        if (g.is_subset_of(s.pattern)) expected.push_back(s.subset);
      }
      auto const got = containing_maximal_subalgebras(g);
      REQUIRE(got == sorted(expected));
      REQUIRE(got.empty() == strongly_connected(g.without_loops()));
      if (!got.empty()) REQUIRE(least_containing_subalgebra(g) == got.front());
    }
  }
}

TEST_CASE("coordinate subspaces are invariant under generic members, n <= 5") {
  oracle::Rng rng(77);
  for (int n = 2; n <= 5; ++n) {
    for (auto const& s : enumerate_maximal_subalgebras(n)) {
      for (int trial = 0; trial < 3; ++trial) {
        Matrix const a = oracle::random_matrix_with_support(s.pattern, rng);
        Matrix const b = oracle::random_matrix_with_support(s.pattern, rng);
        auto const members = invariant_subspace_of(s.subset);
        IndexSubset const target = IndexSubset::from_members(n, members);
        REQUIRE(preserves(a, target, rng));
        REQUIRE(preserves(a * b, target, rng));
        REQUIRE(preserves(a + b, target, rng));
      }
    }
  }
}

TEST_CASE("subset lifting operations") {
  IndexSubset const i = subset1(3, {1, 3});
  CHECK(i.embedded() == subset1(4, {1, 3}));
  CHECK(i.with_last() == subset1(4, {1, 3, 4}));
  CHECK(i.shifted() == subset1(4, {2, 4}));
  CHECK(i.shifted_with_first() == subset1(4, {1, 2, 4}));
  CHECK(i.complement() == subset1(3, {2}));
}

TEST_CASE("lift examples") {
  std::vector<IndexSubset> from_s1;
  for (auto const& step : lift_derivation({subset1(2, {1})})) {
    from_s1.insert(from_s1.end(), step.children.begin(), step.children.end());
  }
  CHECK(sorted(from_s1) == sorted({subset1(3, {1}), subset1(3, {1, 3}), subset1(3, {2}), subset1(3, {1, 2})}));
  CHECK(sorted(lift_subalgebras(proper_subsets(2))) == proper_subsets(3));
  CHECK(sorted(lift_subalgebras(proper_subsets(3))) == proper_subsets(4));
}

TEST_CASE("lift reproduces direct enumeration up to n = 8") {
  std::vector<IndexSubset> level = proper_subsets(2);
  for (int n = 3; n <= 8; ++n) {
    level = lift_subalgebras(level);
    REQUIRE(sorted(level) == proper_subsets(n));
  }
}

TEST_CASE("derivation tables") {
  auto const steps = lift_derivation(proper_subsets(2));
  CHECK(steps.size() == 4);
  check_arrows(proper_subsets(2), ref::kArrows2to3);
  check_arrows(proper_subsets(3), ref::kArrows3to4);
}

TEST_CASE("lift input errors") {
  CHECK_THROWS_AS(lift_subalgebras({subset1(2, {1}), subset1(3, {1})}), DimensionMismatch);
  CHECK_THROWS_AS(lift_subalgebras({subset1(2, {1})}), std::logic_error);
}
