#include <doctest.h>

#include <random>

#include "matalg/error.hpp"
#include "matalg/matrix.hpp"
#include "matalg/oracle.hpp"
#include "matalg/pattern.hpp"
#include "reference_tables.hpp"
#include "support.hpp"

using namespace matalg;
using namespace matalg::test;
namespace ref = matalg::test::reference;

namespace {

// Product through the semiring scalars, entry by entry.
Pattern semiring_product(Pattern const& a, Pattern const& b) {
  int const n = a.n();
  Pattern out(n);
  for (int k = 0; k < n; ++k) {
    for (int m = 0; m < n; ++m) {
      SemiringBit acc{false};
      for (int p = 0; p < n; ++p) acc = acc + SemiringBit{a.contains(k, p)} * SemiringBit{b.contains(p, m)};
      if (acc.value) out.insert(k, m);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("two-element semiring tables") {
  SemiringBit const zero{false};
  SemiringBit const one{true};
  CHECK(one + one == one);
  CHECK(one + zero == one);
  CHECK(zero + zero == zero);
  CHECK(one * one == one);
  CHECK(one * zero == zero);
  CHECK(zero * zero == zero);
}

TEST_CASE("pattern product examples") {
  Pattern const g2 = pairs1(2, {{1, 2}, {2, 1}});
  CHECK(pattern_product(g2, g2) == Pattern::identity(2));
  Pattern const g33 = rows_of(ref::kG3[2]);
  CHECK(pattern_product(g33, g33) == pairs1(3, {{1, 1}, {1, 3}, {2, 2}, {3, 1}, {3, 3}}));
  CHECK(pattern_product(g33, g33) == rows_of(ref::kG3Squared));
  CHECK_THROWS_AS(pattern_product(Pattern(2), Pattern(3)), DimensionMismatch);
}

TEST_CASE("displayed powers of the n = 3 list") {
  Pattern const g1 = rows_of(ref::kG3[0]);
  CHECK(pattern_product(g1, g1) == rows_of(ref::kG1Squared));
  CHECK(pattern_product(pattern_product(g1, g1), g1) == rows_of(ref::kG1Cubed));
  Pattern const g4 = rows_of(ref::kG3[3]);
  CHECK(pattern_product(g4, g4) == rows_of(ref::kG4Squared));
  Pattern const g5 = rows_of(ref::kG3[4]);
  CHECK(pattern_product(g5, g5) == rows_of(ref::kG5Squared));
}

TEST_CASE("powers union examples") {
  CHECK(pattern_powers_union(rows_of(ref::kG3[0]), 3) == Pattern::full(3));
  CHECK(pattern_powers_union(rows_of(ref::kG3[0]), 2) != Pattern::full(3));
  CHECK(pattern_powers_union(pairs1(2, {{1, 2}}), 5) == pairs1(2, {{1, 2}}));
  CHECK(pattern_powers_union(rows_of(ref::kG3[4]), 2) == Pattern::full(3));
  CHECK(pattern_powers_union(rows_of(ref::kG3[3]), 2) == Pattern::full(3));
  CHECK(pattern_powers_union(rows_of(ref::kG3[2]), 2) == Pattern::full(3));
  CHECK_THROWS_AS(pattern_powers_union(Pattern(2), 0), IndexOutOfRange);
}

TEST_CASE("generating examples") {
  CHECK(is_generating(pairs1(2, {{1, 2}, {2, 1}})));
  CHECK(is_generating(pairs1(3, {{1, 2}, {1, 3}, {2, 1}, {3, 1}})));
  CHECK_FALSE(is_generating(pairs1(2, {{1, 2}})));
  for (auto const& rows : ref::kG3) CHECK(is_generating(rows_of(rows)));
}

TEST_CASE("closure examples") {
  CHECK(pattern_closure(rows_of(ref::kG3[0]), false) == Pattern::full(3));
  CHECK(pattern_closure(pairs1(2, {{1, 2}}), true) == pairs1(2, {{1, 1}, {1, 2}, {2, 2}}));
  CHECK(pattern_closure(Pattern(3), false).empty());
  CHECK(pattern_closure(Pattern(3), true) == Pattern::identity(3));
}

TEST_CASE("pattern subalgebra examples") {
  CHECK(is_pattern_subalgebra(pairs1(2, {{1, 1}, {1, 2}, {2, 2}})));
  CHECK_FALSE(is_pattern_subalgebra(pairs1(2, {{1, 2}, {2, 1}})));
  for (int n = 1; n <= 6; ++n) CHECK(is_pattern_subalgebra(Pattern::full(n)));
  CHECK(is_pattern_subalgebra(Pattern(3)));
}

TEST_CASE("product matches the semiring scalar route") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = 1 + trial % 12;
    Pattern const a = random_pattern(n, rng, 0.25);
    Pattern const b = random_pattern(n, rng, 0.25);
    REQUIRE(pattern_product(a, b) == semiring_product(a, b));
  }
}

TEST_CASE("associativity, randomized n <= 8") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    int const n = 1 + trial % 8;
    Pattern const a = random_pattern(n, rng, 0.3);
    Pattern const b = random_pattern(n, rng, 0.3);
    Pattern const c = random_pattern(n, rng, 0.3);
    REQUIRE(pattern_product(pattern_product(a, b), c) == pattern_product(a, pattern_product(b, c)));
  }
}

TEST_CASE("monotonicity") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    int const n = 1 + trial % 8;
    Pattern const g = random_pattern(n, rng, 0.25);
    Pattern h = g;
    h |= random_pattern(n, rng, 0.2);
    Pattern const k = random_pattern(n, rng, 0.3);
    REQUIRE(g.is_subset_of(h));
    REQUIRE(pattern_product(g, k).is_subset_of(pattern_product(h, k)));
    REQUIRE(pattern_product(k, g).is_subset_of(pattern_product(k, h)));
  }
}

TEST_CASE("powers union stabilizes by n, exhaustive n <= 4") {
  for (int n = 1; n <= 4; ++n) {
    for (Pattern const& g : all_patterns(n)) {
      Pattern const at_n = pattern_powers_union(g, n);
      REQUIRE(at_n == pattern_powers_union(g, n * n));
      REQUIRE(pattern_closure(g, false) == at_n);
    }
  }
}

TEST_CASE("closure with diagonal adds exactly the identity") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int const n = 1 + trial % 10;
    Pattern const g = random_pattern(n, rng, 0.2);
    Pattern expected = pattern_closure(g, false);
    expected |= Pattern::identity(n);
    Pattern const with = pattern_closure(g, true);
    REQUIRE(with == expected);
    REQUIRE(is_pattern_subalgebra(with));
  }
}

TEST_CASE("semiring soundness against exact products, exhaustive loop-free n <= 3") {
  oracle::Rng rng(1234);
  for (int n = 1; n <= 3; ++n) {
    auto const patterns = all_loop_free(n);
    for (Pattern const& a : patterns) {
      for (Pattern const& b : patterns) {
        Matrix const x = oracle::random_matrix_with_support(a, rng);
        Matrix const y = oracle::random_matrix_with_support(b, rng);
        REQUIRE(exact_product_support(x, y) == pattern_product(a, b));
      }
    }
  }
}

TEST_CASE("semiring soundness against exact products, randomized n = 4..6") {
  oracle::Rng rng(99);
  for (int trial = 0; trial < 600; ++trial) {
    int const n = 4 + trial % 3;
    Pattern const a = random_pattern(n, rng, 0.3, false);
    Pattern const b = random_pattern(n, rng, 0.3, false);
    Matrix const x = oracle::random_matrix_with_support(a, rng);
    Matrix const y = oracle::random_matrix_with_support(b, rng);
    REQUIRE(exact_product_support(x, y) == pattern_product(a, b));
  }
}

TEST_CASE("pattern helpers") {
  Pattern p = pairs1(3, {{1, 2}, {3, 3}});
  CHECK(p.has_loops());
  CHECK(p.without_loops() == pairs1(3, {{1, 2}}));
  CHECK(p.edge_count() == 2);
  CHECK(p.transposed() == pairs1(3, {{2, 1}, {3, 3}}));
  CHECK(p.to_string() == "010/000/001");
  CHECK(p.relabeled(std::vector<int>{2, 0, 1}) == pairs1(3, {{3, 1}, {2, 2}}));
  CHECK_THROWS_AS(p.insert(3, 0), IndexOutOfRange);
  CHECK_THROWS_AS(Pattern(65), DimensionMismatch);
  CHECK(Pattern::from_adjacency({{0, 1}, {1, 0}}) == pairs1(2, {{1, 2}, {2, 1}}));
}
