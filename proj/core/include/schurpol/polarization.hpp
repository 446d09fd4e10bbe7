#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schurpol/field.hpp"
#include "schurpol/monomial_module.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/subspace.hpp"

namespace schurpol {

/// Coefficient of t^order in the substitution column j -> column j + t column i
/// (0-based column indices).
struct OneParamOperator {
  int i = 0;
  int j = 1;
  int order = 1;
};

template <class F>
SparseVector<F> apply_operator(const F& field, const SparseVector<F>& v, const MonomialModule& ambient,
                               const OneParamOperator& op);

/// <S>_{GL_m}: the smallest subspace containing S that is stable under the
/// column torus and every t^r coefficient of every column shift. Stability
/// under these is equivalent to GL_m(K-bar)-stability, so the result is the
/// GL-span over the algebraic closure of the base field.
template <class F>
Subspace<F> gl_closure(const Subspace<F>& s, const MonomialModule& ambient);

/// Span of S together with sigma . s for `trials` random invertible column
/// transformations sigma. Always contained in gl_closure(S).
template <class F>
Subspace<F> random_group_span(const Subspace<F>& s, const MonomialModule& ambient, int trials,
                              std::uint64_t seed);

/// Applies the column change of variables x[r][c] -> sum_c' sigma[c][c'] x[r][c'].
template <class F>
SparseVector<F> apply_column_matrix(const F& field, const SparseVector<F>& v, const MonomialModule& ambient,
                                    const std::vector<std::vector<typename F::value_type>>& sigma);

struct PolarizationReport {
  Partition lambda;
  int a = 0, b = 0;
  FieldSpec field;
  std::size_t source_dim = 0;   // dim S_lambda(K^a)
  std::size_t closure_dim = 0;  // dim <S_lambda(K^a)>_{GL_b}
  std::size_t target_dim = 0;   // dim S_lambda(K^b)
  std::size_t ambient_dim = 0;
  bool contained = false;       // closure inside target
  bool equal = false;
};

/// Compares <S_lambda(K^a)>_{GL_b} with S_lambda(K^b).
PolarizationReport polarization_equality_check(const Partition& lambda, int a, int b, const FieldSpec& field);

struct SlicingReport {
  Partition lambda;
  int n = 0, k = 0, m = 0;
  int a = 0;  // n * ceil(d / (n (k - 1)))
  std::vector<Partition> pieces;
  std::vector<std::size_t> piece_dims;  // dim S_{mu_i}(K^n)
  PolarizationReport check;
  bool equal() const { return check.equal; }
};

/// Polarization from K^a, a = n ceil(|lambda| / (n (k-1))), to K^m under the
/// hypotheses l(lambda) <= n, char 0 or char > k n, and m >= a.
SlicingReport slicing_polarization_check(const Partition& lambda, int n, int k, int m, const FieldSpec& field);

struct PolarizationGridReport {
  long cases = 0;
  long expected_equal_failures = 0;  // false results where p > d or char 0
  long small_char_false = 0;         // false results where p <= d
  std::vector<std::string> failure_samples;
  std::vector<std::string> small_char_false_samples;
};

/// polarization_equality_check for all lambda |- d <= d_max with
/// l(lambda) <= a <= a_max, a <= b <= b_max over each field.
PolarizationGridReport polarization_grid(int d_max, int a_max, int b_max, const std::vector<FieldSpec>& fields);

}  // namespace schurpol
