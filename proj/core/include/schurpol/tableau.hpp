#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "schurpol/partition.hpp"

namespace schurpol {

/// Semistandard tableau: rows weakly increase, columns strictly increase.
struct Tableau {
  Partition shape;
  std::vector<std::vector<int>> rows;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool is_semistandard(const Tableau& t, int m);

/// All SSYT of shape lambda with entries in [1, m], ordered lexicographically
/// by row reading word.
std::vector<Tableau> ssyt_enumerate(const Partition& lambda, int m);

/// c^nu_{lambda, mu}, by counting skew tableaux of shape nu/lambda and content
/// mu whose reverse reading word is a lattice word.
std::int64_t lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

using PartitionMultiset = std::vector<std::pair<Partition, std::int64_t>>;

/// Every nu with l(nu) <= max_len and c^nu_{lambda,mu} > 0, with its multiplicity.
PartitionMultiset lr_expand_product(const Partition& lambda, const Partition& mu, int max_len);

struct CauchyTerm {
  Partition shape;
  mpz_class dim_n;
  mpz_class dim_m;
};

struct CauchyReport {
  int n = 0, m = 0, d = 0;
  mpz_class lhs;  // C(nm + d - 1, d)
  mpz_class rhs;  // sum over lambda of dim S_lambda(K^n) dim S_lambda(K^m)
  std::vector<CauchyTerm> terms;
  bool holds() const { return lhs == rhs; }
};

CauchyReport cauchy_check(int n, int m, int d);

struct LrSuiteReport {
  long pairs = 0;
  long failures = 0;
  std::vector<std::string> failure_samples;
  bool holds() const { return failures == 0; }
};

/// For all |lambda|, |mu| <= size_max: lambda+mu occurs once and dominates every
/// other constituent, c is symmetric, and sum_nu c dim S_nu(K^m) = dim S_lambda
/// dim S_mu for m <= m_max.
LrSuiteReport lr_suite(int size_max, int m_max);

}  // namespace schurpol
