#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schurpol/field.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/sparse_vector.hpp"

namespace schurpol {

/// Exponent matrix of a monomial in variables x[row][col], stored row-major.
using Exponents = std::vector<std::uint8_t>;

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto b : e) h = (h ^ b) * 1099511628211ull;
    return h;
  }
};

enum class Axis { rows, cols };

/// A homogeneous piece of the polynomial ring in a rows x cols matrix of
/// variables, with a fixed monomial basis.
///
/// Two gradings are supported:
///  - sym_tensor(lambda, m): row i has degree lambda_i, i.e. the tensor product
///    of Sym^{lambda_i}(K^m) over the rows of lambda;
///  - sym_of_tensor(d, n, m): total degree d in n x m variables, i.e.
///    Sym^d(K^n (x) K^m).
/// Column substitutions preserve both. Basis order is lexicographically
/// decreasing on the exponent matrix.
class MonomialModule {
 public:
  enum class Grading { sym_tensor, sym_of_tensor };

  static MonomialModule sym_tensor(const Partition& lambda, int m);
  static MonomialModule sym_of_tensor(int d, int n, int m);

  Grading grading() const { return data_->grading; }
  int rows() const { return data_->rows; }
  int cols() const { return data_->cols; }
  int degree() const { return data_->degree; }
  /// Row degrees for sym_tensor ambients (the partition).
  const Partition& shape() const { return data_->shape; }
  std::size_t size() const { return data_->monomials.size(); }

  const Exponents& monomial(std::uint32_t i) const { return data_->monomials.at(i); }
  std::optional<std::uint32_t> find(const Exponents& e) const;
  std::uint32_t index_of(const Exponents& e) const;

  int exponent(std::uint32_t i, int row, int col) const {
    return data_->monomials[i][static_cast<std::size_t>(row * cols() + col)];
  }
  /// Degree of monomial i in each column (its torus weight for GL_cols).
  std::vector<int> column_degrees(std::uint32_t i) const;
  std::vector<int> row_degrees(std::uint32_t i) const;
  std::vector<int> axis_degrees(std::uint32_t i, Axis axis) const {
    return axis == Axis::cols ? column_degrees(i) : row_degrees(i);
  }

  std::string describe() const;

  friend bool operator==(const MonomialModule& a, const MonomialModule& b) {
    return a.data_ == b.data_ ||
           (a.grading() == b.grading() && a.rows() == b.rows() && a.cols() == b.cols() &&
            a.degree() == b.degree() && a.shape() == b.shape());
  }

 private:
  struct Data {
    Grading grading;
    int rows = 0, cols = 0, degree = 0;
    Partition shape;
    std::vector<Exponents> monomials;
    std::unordered_map<Exponents, std::uint32_t, ExponentsHash> index;
  };
  explicit MonomialModule(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
  std::shared_ptr<const Data> data_;
};

/// Polynomial with integer coefficients in a rows x cols matrix of variables.
class IntPoly {
 public:
  IntPoly() = default;
  static IntPoly constant(int rows, int cols, long long c);
  static IntPoly variable(int rows, int cols, int row, int col);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::map<Exponents, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  void add_term(const Exponents& e, long long c);
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(long long c) const;

  /// Splits into components by degree along an axis (e.g. per-copy multidegree).
  std::vector<IntPoly> homogeneous_components(Axis axis) const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::map<Exponents, long long> terms_;
};

long long checked_add(long long a, long long b);
long long checked_mul(long long a, long long b);

/// Coordinates of a module vector as an integer-coefficient polynomial image in F.
template <class F>
SparseVector<F> to_vector(const F& field, const MonomialModule& module, const IntPoly& p) {
  std::vector<typename SparseVector<F>::Entry> pairs;
  pairs.reserve(p.terms().size());
  for (const auto& [e, c] : p.terms()) pairs.emplace_back(module.index_of(e), field.from_int(c));
  return SparseVector<F>::from_pairs(field, std::move(pairs));
}

/// One-parameter family of linear substitutions on the coordinates of one axis:
/// coordinate a maps to sum of coeff * t^power * coordinate b. When discrete,
/// only t = 1 is used (a single group element rather than a subgroup).
struct OneParamFamily {
  struct Term {
    int power;
    int coord;
    long long coeff;
  };
  int dim = 0;
  std::vector<std::vector<Term>> image;  // image[a]
  bool discrete = false;
  std::string label;

  static OneParamFamily identity(int dim);
  /// coordinate j -> coordinate j + t * coordinate i
  static OneParamFamily column_shift(int dim, int i, int j);
  int max_power() const;
};

/// Terms of a linear map on a module basis: (target index, integer coefficient).
using IntTerms = std::vector<std::pair<std::uint32_t, long long>>;

/// Expands the substitution on basis monomial u; entry r holds the coefficient
/// of t^r, as integer combinations of basis monomials.
std::vector<IntTerms> expand_substitution(const MonomialModule& module, const OneParamFamily& family,
                                          Axis axis, std::uint32_t u);

/// The GL_m root families on the column axis: column j -> column j + t column i, i != j.
std::vector<OneParamFamily> gl_root_families(int m);

template <class F>
SparseVector<F> apply_terms(const F& field, const SparseVector<F>& v,
                            const std::vector<const IntTerms*>& images) {
  std::vector<typename SparseVector<F>::Entry> pairs;
  std::size_t k = 0;
  for (const auto& [u, c] : v.entries()) {
    for (const auto& [w, a] : *images[k++]) pairs.emplace_back(w, field.mul(c, field.from_int(a)));
  }
  return SparseVector<F>::from_pairs(field, std::move(pairs));
}

/// Caches expansions of one family on one module.
class SubstitutionTable {
 public:
  SubstitutionTable(MonomialModule module, OneParamFamily family, Axis axis)
      : module_(std::move(module)), family_(std::move(family)), axis_(axis) {}

  const MonomialModule& module() const { return module_; }
  const OneParamFamily& family() const { return family_; }

  /// Coefficient of t^r on monomial u (empty when r exceeds the expansion).
  const IntTerms& coefficient(std::uint32_t u, int r);

  /// Sum over r >= 1 of the t^r coefficients: g - 1 at t = 1.
  const IntTerms& difference_at_one(std::uint32_t u);

  template <class F>
  SparseVector<F> apply(const F& field, const SparseVector<F>& v, int r) {
    std::vector<const IntTerms*> images;
    images.reserve(v.nnz());
    for (const auto& [u, c] : v.entries()) images.push_back(&coefficient(u, r));
    return apply_terms(field, v, images);
  }

  template <class F>
  SparseVector<F> apply_difference(const F& field, const SparseVector<F>& v) {
    std::vector<const IntTerms*> images;
    images.reserve(v.nnz());
    for (const auto& [u, c] : v.entries()) images.push_back(&difference_at_one(u));
    return apply_terms(field, v, images);
  }

 private:
  const std::vector<IntTerms>& expansion(std::uint32_t u);

  MonomialModule module_;
  OneParamFamily family_;
  Axis axis_;
  std::unordered_map<std::uint32_t, std::vector<IntTerms>> cache_;
  std::unordered_map<std::uint32_t, IntTerms> diff_cache_;
  IntTerms empty_;
};

Exponents pad_exponents(const Exponents& e, int rows, int cols, int new_rows, int new_cols);

/// Re-indexes v from a module into a larger one with the same grading, padding
/// the exponent matrix with zero rows/columns.
template <class F>
SparseVector<F> embed_vector(const F& field, const SparseVector<F>& v, const MonomialModule& from,
                             const MonomialModule& to) {
  std::vector<typename SparseVector<F>::Entry> pairs;
  pairs.reserve(v.nnz());
  for (const auto& [u, c] : v.entries()) {
    auto e = pad_exponents(from.monomial(u), from.rows(), from.cols(), to.rows(), to.cols());
    pairs.emplace_back(to.index_of(e), c);
  }
  return SparseVector<F>::from_pairs(field, std::move(pairs));
}

/// Product of polynomials va in ma and vb in mb, expressed in mc. The exponent
/// matrices are added entrywise after zero padding.
template <class F>
SparseVector<F> multiply(const F& field, const MonomialModule& ma, const SparseVector<F>& va,
                         const MonomialModule& mb, const SparseVector<F>& vb, const MonomialModule& mc) {
  std::vector<Exponents> eb;
  eb.reserve(vb.nnz());
  for (const auto& [w, c] : vb.entries()) {
    eb.push_back(pad_exponents(mb.monomial(w), mb.rows(), mb.cols(), mc.rows(), mc.cols()));
  }
  std::vector<typename SparseVector<F>::Entry> pairs;
  pairs.reserve(va.nnz() * vb.nnz());
  for (const auto& [u, a] : va.entries()) {
    const auto ea = pad_exponents(ma.monomial(u), ma.rows(), ma.cols(), mc.rows(), mc.cols());
    for (std::size_t k = 0; k < eb.size(); ++k) {
      Exponents e = ea;
      for (std::size_t x = 0; x < e.size(); ++x) e[x] = static_cast<std::uint8_t>(e[x] + eb[k][x]);
      pairs.emplace_back(mc.index_of(e), field.mul(a, vb.entries()[k].second));
    }
  }
  return SparseVector<F>::from_pairs(field, std::move(pairs));
}

/// Splits v into components of fixed degree along an axis, ordered by degree vector.
template <class F>
std::vector<SparseVector<F>> split_by_degrees(const F& field, const MonomialModule& module,
                                              const SparseVector<F>& v, Axis axis) {
  std::map<std::vector<int>, std::vector<typename SparseVector<F>::Entry>> parts;
  for (const auto& [u, c] : v.entries()) parts[module.axis_degrees(u, axis)].emplace_back(u, c);
  std::vector<SparseVector<F>> out;
  out.reserve(parts.size());
  for (auto& [key, pairs] : parts) out.push_back(SparseVector<F>::from_pairs(field, std::move(pairs)));
  return out;
}

}  // namespace schurpol
