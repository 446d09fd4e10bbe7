#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/tableau.hpp"

using namespace schurpol;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

}  // namespace

TEST_CASE("partition construction") {
  CHECK(P({3, 1, 0, 0}) == P({3, 1}));
  CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(P({2, -1}), std::invalid_argument);
  CHECK(Partition::parse("8,8,7,4") == P({8, 8, 7, 4}));
  CHECK(Partition::parse("[3,1]") == P({3, 1}));
  CHECK(Partition::parse("") == Partition{});
  CHECK_THROWS_AS(Partition::parse("3,a"), std::invalid_argument);
  CHECK(P({4, 2}).to_string() == "(4,2)");
}

TEST_CASE("conjugate examples") {
  CHECK(conjugate(P({4, 3, 1, 1})) == P({4, 2, 2, 1}));
  CHECK(oracle::transpose({4, 3, 1, 1}) == std::vector<int>{4, 2, 2, 1});
  CHECK(conjugate(Partition{}) == Partition{});
}

TEST_CASE("conjugate agrees with the cell transpose and is an involution") {
  for (int d = 0; d <= 12; ++d) {
    for (const auto& lambda : enumerate_partitions(d, d)) {
      auto c = conjugate(lambda);
      CHECK(c.parts() == oracle::transpose(lambda.parts()));
      CHECK(conjugate(c) == lambda);
      CHECK(c.size() == lambda.size());
      CHECK(c.length() == (lambda.length() == 0 ? 0 : lambda[0]));
    }
  }
}

TEST_CASE("horizontal concatenation") {
  CHECK(P({3, 3, 3, 2}) + P({5, 2}) == P({8, 5, 3, 2}));
  CHECK(P({4, 1}) + Partition{} == P({4, 1}));
  CHECK(P({1, 1}) + P({1, 1}) == P({2, 2}));

  auto all = enumerate_partitions(4, 4);
  auto small = enumerate_partitions(3, 3);
  for (const auto& a : all) {
    for (const auto& b : small) {
      CHECK(a + b == b + a);
      for (const auto& c : small) CHECK((a + b) + c == a + (b + c));
      // Columns of a + b are the union of the columns of a and b.
      auto cols = conjugate(a).parts();
      auto cb = conjugate(b).parts();
      cols.insert(cols.end(), cb.begin(), cb.end());
      std::sort(cols.rbegin(), cols.rend());
      CHECK(conjugate(a + b).parts() == cols);
    }
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(P({1, 1, 1}), P({3})));
  CHECK(dominance_leq(P({2, 1}), P({2, 1})));
  CHECK_FALSE(dominance_leq(P({3}), P({2, 1})));
  CHECK_THROWS_AS(dominance_leq(P({2}), P({2, 1})), std::invalid_argument);
}

TEST_CASE("slice decomposition examples") {
  auto s = slice_decomposition(P({8, 8, 7, 4}), 4, 3);
  REQUIRE(s.pieces.size() == 3);
  CHECK(s.pieces[0] == P({3, 3, 3, 3}));
  CHECK(s.pieces[1] == P({3, 3, 3, 1}));
  CHECK(s.pieces[2] == P({2, 2, 1}));

  auto small = slice_decomposition(P({3, 2, 1}), 3, 2);
  REQUIRE(small.pieces.size() == 1);
  CHECK(small.pieces[0] == P({3, 2, 1}));

  auto square = slice_decomposition(P({4, 4, 4, 4}), 4, 2);
  Partition sum;
  for (std::size_t i = 0; i < square.pieces.size(); ++i) {
    sum = sum + square.pieces[i];
    CHECK(square.pieces[i].size() <= 8);
    if (i + 1 < square.pieces.size()) CHECK(square.pieces[i].size() > 4);
  }
  CHECK(sum == P({4, 4, 4, 4}));

  CHECK(slice_decomposition(Partition{}, 2, 2).pieces == std::vector<Partition>{Partition{}});
  CHECK_THROWS_AS(slice_decomposition(P({1, 1, 1}), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(slice_decomposition(P({2}), 2, 1), std::invalid_argument);
}

TEST_CASE("slice suite over a moderate range") {
  auto r = slice_suite(16, 4, 2, 4);
  CHECK(r.cases > 0);
  CHECK(r.holds());
}

TEST_CASE("enumerate partitions") {
  CHECK(enumerate_partitions(2, 2) == std::vector<Partition>{P({2}), P({1, 1})});
  CHECK(enumerate_partitions(4, 2) == std::vector<Partition>{P({4}), P({3, 1}), P({2, 2})});
  CHECK(enumerate_partitions(0, 3) == std::vector<Partition>{Partition{}});
  for (int d = 0; d <= 10; ++d) {
    for (int len = 0; len <= d; ++len) {
      auto got = enumerate_partitions(d, len);
      std::set<std::vector<int>> as_set;
      for (const auto& p : got) as_set.insert(p.parts());
      CHECK(as_set == oracle::partitions(d, len));
      CHECK(as_set.size() == got.size());
      CHECK(std::is_sorted(got.rbegin(), got.rend()));
    }
  }
}

TEST_CASE("alpha_p") {
  CHECK(alpha_p(9, 2) == 2);
  CHECK(alpha_p(0, 5) == 0);
  for (int p : {2, 3, 5, 7, 11}) CHECK(alpha_p(p, p) == 1);
  CHECK_THROWS_AS(alpha_p(5, 4), std::invalid_argument);
}

TEST_CASE("schur dimension") {
  CHECK(schur_dimension(P({2}), 2) == 3);
  CHECK(schur_dimension(P({1, 1, 1}), 2) == 0);
  CHECK(schur_dimension(P({2, 1}), 3) == 8);
  CHECK(oracle::ssyt_count({2, 1}, 3) == 8);
  for (int d = 0; d <= 6; ++d) {
    for (int m = 0; m <= 3; ++m) {
      for (const auto& lambda : enumerate_partitions(d, d)) {
        CHECK(schur_dimension(lambda, m) == oracle::ssyt_count(lambda.parts(), m));
      }
    }
  }
}

TEST_CASE("hook-content matches tableau enumeration for d <= 8, m <= 5") {
  for (int d = 0; d <= 8; ++d) {
    for (int m = 1; m <= 5; ++m) {
      for (const auto& lambda : enumerate_partitions(d, d)) {
        CHECK(schur_dimension(lambda, m) == ssyt_enumerate(lambda, m).size());
      }
    }
  }
}

TEST_CASE("Cauchy count over the partition sum") {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int d = 0; d <= 6; ++d) {
        mpz_class total = 0;
        for (const auto& lambda : enumerate_partitions(d, std::min(n, m))) {
          total += schur_dimension(lambda, n) * schur_dimension(lambda, m);
        }
        CHECK(total == oracle::binomial(n * m + d - 1, d));
      }
    }
  }
}
