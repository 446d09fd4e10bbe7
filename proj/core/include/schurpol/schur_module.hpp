#pragma once

#include <cstdint>
#include <vector>

#include "schurpol/field.hpp"
#include "schurpol/monomial_module.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/subspace.hpp"

namespace schurpol {

/// S_lambda(K^m) realized inside the tensor product of Sym^{lambda_i}(K^m).
template <class F>
struct SchurRealization {
  Partition shape;
  int m;
  MonomialModule ambient;
  Subspace<F> space;
};

/// Bideterminant of the filling whose column c holds the strictly increasing
/// entries columns[c] (0-based coordinates): the product over columns of the
/// minors det(x[row][entry]).
IntPoly bideterminant(const Partition& shape, int m, const std::vector<std::vector<int>>& columns);

/// Column-strict fillings of shape with entries in [0, a), one per multiset of
/// columns (equal-height columns are listed in nondecreasing order).
std::vector<std::vector<std::vector<int>>> column_strict_fillings(const Partition& shape, int a);

/// Image of the wedge-to-symmetric map: spanned by bideterminants.
template <class F>
SchurRealization<F> realize_schur(const Partition& lambda, int m, const F& field);

/// Coordinate inclusion K^a -> K^b (first a coordinates).
template <class F>
SchurRealization<F> embed(const SchurRealization<F>& source, int b);

/// The multiplication map S_lambda(K^m) (x) S_mu(K^m) -> S_{lambda+mu}(K^m),
/// evaluated on products of basis vectors.
template <class F>
struct ConcatProjection {
  Partition lambda, mu;
  int m;
  std::size_t source_dim = 0;  // dim S_lambda * dim S_mu
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  Subspace<F> image;
  Subspace<F> target;  // realize_schur(lambda + mu, m).space
  bool surjective() const { return image == target; }
};

template <class F>
ConcatProjection<F> concat_projection(const Partition& lambda, const Partition& mu, int m, const F& field);

struct SchurDimSuiteReport {
  long cases = 0;
  long failures = 0;
  std::vector<std::string> failure_samples;
  bool holds() const { return failures == 0; }
};

/// realize_schur dim = SSYT count = hook-content value over every listed field,
/// for all lambda |- d <= d_max and m <= m_max.
SchurDimSuiteReport schur_dimension_suite(int d_max, int m_max, const std::vector<FieldSpec>& fields);

struct ConcatSuiteReport {
  long cases = 0;
  long failures = 0;
  std::vector<std::string> failure_samples;
  bool holds() const { return failures == 0; }
};

/// Surjectivity of concat_projection and kernel dim = sum over nu != lambda+mu of
/// c^nu dim S_nu(K^m), for all |lambda|, |mu| <= size_max, m <= m_max.
ConcatSuiteReport concat_suite(int size_max, int m_max, const FieldSpec& field);

}  // namespace schurpol
