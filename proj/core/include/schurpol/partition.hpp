#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace schurpol {

/// Weakly decreasing sequence of positive integers; trailing zeros are dropped
/// on construction. The empty partition is a valid value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "8,8,7,4" (empty string or "()" gives the empty partition).
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// parts[i], or 0 past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// Entrywise sum; merges the column multisets of the two diagrams.
Partition horizontal_concat(const Partition& lambda, const Partition& mu);
inline Partition operator+(const Partition& a, const Partition& b) { return horizontal_concat(a, b); }

/// Dominance order on partitions of the same size.
bool dominance_leq(const Partition& lambda, const Partition& mu);

struct SliceDecomposition {
  std::vector<Partition> pieces;
  int n = 0;
  int k = 0;
};

/// Greedy column-prefix slicing: repeatedly cut off the longest run of leading
/// columns whose total size stays at most k*n, until the remainder fits.
SliceDecomposition slice_decomposition(const Partition& lambda, int n, int k);

/// All partitions of d with at most max_len parts, lexicographically largest first.
std::vector<Partition> enumerate_partitions(int d, int max_len);

/// Sum of the base-p digits of d.
int alpha_p(int d, int p);

/// dim S_lambda(K^m) by the hook-content formula.
mpz_class schur_dimension(const Partition& lambda, int m);

mpz_class binomial(unsigned long n, unsigned long k);

/// ceil(a / b) for a >= 0, b > 0.
inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct SliceSuiteReport {
  long cases = 0;
  long failures = 0;
  std::vector<std::string> failure_samples;
  bool holds() const { return failures == 0; }
};

/// Checks re-concatenation, size windows and the piece-count bound for every
/// lambda |- d <= d_max with l(lambda) <= n, n <= n_max, k_min <= k <= k_max.
SliceSuiteReport slice_suite(int d_max, int n_max, int k_min, int k_max);

}  // namespace schurpol
