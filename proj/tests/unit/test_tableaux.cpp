#include <doctest.h>

#include "oracles.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/tableau.hpp"

using namespace schurpol;

namespace {

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

std::map<std::vector<int>, long> as_map(const PartitionMultiset& s) {
  std::map<std::vector<int>, long> out;
  for (const auto& [nu, c] : s) out[nu.parts()] = c;
  return out;
}

}  // namespace

TEST_CASE("semistandard tableau enumeration") {
  CHECK(ssyt_enumerate(P({1}), 3).size() == 3);
  CHECK(ssyt_enumerate(P({1, 1, 1}), 2).empty());
  auto two_one = ssyt_enumerate(P({2, 1}), 2);
  CHECK(two_one.size() == 2);
  CHECK(oracle::ssyt_count({2, 1}, 2) == 2);
  for (const auto& t : two_one) CHECK(is_semistandard(t, 2));

  CHECK_FALSE(is_semistandard(Tableau{P({2, 1}), {{1, 2}, {1}}}, 2));
  CHECK_FALSE(is_semistandard(Tableau{P({2}), {{2, 1}}}, 2));
  CHECK_FALSE(is_semistandard(Tableau{P({1}), {{3}}}, 2));

  for (int d = 1; d <= 5; ++d) {
    for (int m = 1; m <= 3; ++m) {
      for (const auto& lambda : enumerate_partitions(d, d)) {
        auto all = ssyt_enumerate(lambda, m);
        CHECK(static_cast<long>(all.size()) == oracle::ssyt_count(lambda.parts(), m));
        for (std::size_t i = 0; i < all.size(); ++i) {
          CHECK(is_semistandard(all[i], m));
          if (i > 0) CHECK_FALSE(all[i] == all[i - 1]);
        }
      }
    }
  }
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient(P({2, 1}), P({1}), P({1, 1})) == 1);
  CHECK(lr_coefficient(P({3, 2, 1}), P({2, 1}), P({2, 1})) == 2);
  CHECK(lr_coefficient(P({3}), P({1, 1}), P({1})) == 0);
  CHECK_THROWS_AS(lr_coefficient(P({3}), P({1}), P({1})), std::invalid_argument);
}

TEST_CASE("product expansion examples") {
  auto one_one = as_map(lr_expand_product(P({1}), P({1}), 2));
  CHECK(one_one == std::map<std::vector<int>, long>{{{2}, 1}, {{1, 1}, 1}});
  auto with_empty = as_map(lr_expand_product(P({2, 2}), Partition{}, 4));
  CHECK(with_empty == std::map<std::vector<int>, long>{{{2, 2}, 1}});
  auto capped = as_map(lr_expand_product(P({1}), P({1}), 1));
  CHECK(capped == std::map<std::vector<int>, long>{{{2}, 1}});
}

TEST_CASE("product expansion matches Schur polynomial multiplication") {
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      for (const auto& lambda : enumerate_partitions(a, a)) {
        for (const auto& mu : enumerate_partitions(b, b)) {
          const int k = a + b;
          if (k == 0) continue;
          CHECK(as_map(lr_expand_product(lambda, mu, k)) == oracle::lr_product(lambda.parts(), mu.parts(), k));
        }
      }
    }
  }
}

TEST_CASE("LR structure on |lambda|, |mu| <= 4") {
  auto r = lr_suite(4, 3);
  CHECK(r.pairs > 0);
  CHECK(r.holds());
}

TEST_CASE("Cauchy check examples") {
  auto r = cauchy_check(2, 2, 2);
  CHECK(r.lhs == 10);
  CHECK(r.rhs == 10);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].shape == P({2}));
  CHECK(r.terms[0].dim_n * r.terms[0].dim_m == 9);
  CHECK(r.terms[1].dim_n * r.terms[1].dim_m == 1);

  auto zero = cauchy_check(3, 2, 0);
  CHECK(zero.lhs == 1);
  CHECK(zero.holds());

  for (int m = 1; m <= 4; ++m) {
    for (int d = 0; d <= 6; ++d) {
      auto line = cauchy_check(1, m, d);
      CHECK(line.holds());
      CHECK(line.lhs == oracle::binomial(m + d - 1, d));
      CHECK(line.terms.size() == 1u);
    }
  }
}
