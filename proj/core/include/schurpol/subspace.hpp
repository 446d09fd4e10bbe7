#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "schurpol/sparse_vector.hpp"

namespace schurpol {

/// A subspace of F^ambient_dim held as a reduced row echelon basis.
///
/// Rows are sorted by pivot, every pivot coefficient is 1 and every pivot
/// column is zero in all other rows, so two subspaces are equal exactly when
/// their bases are equal.
template <class F>
class Subspace {
 public:
  using Vector = SparseVector<F>;
  using value_type = typename F::value_type;

  Subspace(F field, std::size_t ambient_dim) : field_(std::move(field)), ambient_dim_(ambient_dim) {}

  static Subspace span(const F& field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(field, ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
  }

  /// Span of equal-length dense vectors; rejects a length mismatch.
  static Subspace span_dense(const F& field, const std::vector<std::vector<value_type>>& vectors) {
    if (vectors.empty()) return Subspace(field, 0);
    const std::size_t n = vectors.front().size();
    Subspace s(field, n);
    for (const auto& v : vectors) {
      if (v.size() != n) throw std::invalid_argument("vectors have different dimensions");
      s.insert(Vector::from_dense(field, v));
    }
    return s;
  }

  const F& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }

  /// v minus its projection onto the pivot coordinates; zero iff v is in the span.
  Vector reduce(const Vector& v) const {
    check_vector(v);
    Vector r = v;
    for (const auto& [i, c] : v.entries()) {
      auto row = pivot_row(i);
      if (row != npos) r.axpy(field_, field_.neg(c), rows_[row]);
    }
    return r;
  }

  bool contains(const Vector& v) const { return reduce(v).is_zero(); }

  bool contains(const Subspace& other) const {
    check_compatible(other);
    for (const auto& row : other.rows_) {
      if (!contains(row)) return false;
    }
    return true;
  }

  /// Adds v to the span. Returns true when the dimension grew.
  bool insert(const Vector& v) {
    Vector r = reduce(v);
    if (r.is_zero()) return false;
    r.scale(field_, field_.inv(r.leading_value()));
    const std::uint32_t p = r.leading_index();
    for (auto& row : rows_) {
      if (const auto* c = row.find(p)) {
        auto coeff = field_.neg(*c);
        row.axpy(field_, coeff, r);
      }
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto offset = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + offset, std::move(r));
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.field_ == b.field_ && a.rows_ == b.rows_;
  }

  void check_compatible(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_ || !(other.field_ == field_)) {
      throw std::invalid_argument("subspaces live in different ambient spaces or fields");
    }
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t pivot_row(std::uint32_t i) const {
    auto it = std::lower_bound(pivots_.begin(), pivots_.end(), i);
    if (it == pivots_.end() || *it != i) return npos;
    return static_cast<std::size_t>(it - pivots_.begin());
  }

  void check_vector(const Vector& v) const {
    if (!v.is_zero() && v.entries().back().first >= ambient_dim_) {
      throw std::invalid_argument("vector index " + std::to_string(v.entries().back().first) +
                                  " outside ambient dimension " + std::to_string(ambient_dim_));
    }
  }

  F field_;
  std::size_t ambient_dim_;
  std::vector<Vector> rows_;
  std::vector<std::uint32_t> pivots_;
};

/// Basis of {c in F^n : sum_u c_u images[u] = 0}, as vectors indexed by u.
template <class F>
std::vector<SparseVector<F>> kernel(const F& field, const std::vector<SparseVector<F>>& images) {
  struct Row {
    SparseVector<F> image;
    SparseVector<F> combo;
  };
  std::vector<Row> rows;
  std::unordered_map<std::uint32_t, std::size_t> by_lead;
  std::vector<SparseVector<F>> result;

  for (std::uint32_t u = 0; u < images.size(); ++u) {
    SparseVector<F> img = images[u];
    SparseVector<F> combo = SparseVector<F>::unit(field, u);
    while (!img.is_zero()) {
      auto it = by_lead.find(img.leading_index());
      if (it == by_lead.end()) break;
      auto c = field.neg(img.leading_value());
      const Row& row = rows[it->second];
      img.axpy(field, c, row.image);
      combo.axpy(field, c, row.combo);
    }
    if (img.is_zero()) {
      result.push_back(std::move(combo));
      continue;
    }
    auto s = field.inv(img.leading_value());
    img.scale(field, s);
    combo.scale(field, s);
    by_lead.emplace(img.leading_index(), rows.size());
    rows.push_back({std::move(img), std::move(combo)});
  }
  return result;
}

/// Rank of a family of vectors.
template <class F>
std::size_t rank(const F& field, std::size_t ambient_dim, const std::vector<SparseVector<F>>& vectors) {
  return Subspace<F>::span(field, ambient_dim, vectors).dim();
}

template <class F>
Subspace<F> sum(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_compatible(b);
  Subspace<F> s = a;
  for (const auto& row : b.basis()) s.insert(row);
  return s;
}

/// Intersection via the kernel of [A | -B].
template <class F>
Subspace<F> intersect(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_compatible(b);
  const F& field = a.field();
  std::vector<SparseVector<F>> stacked = a.basis();
  for (auto row : b.basis()) {
    row.scale(field, field.neg(field.one()));
    stacked.push_back(std::move(row));
  }
  Subspace<F> out(field, a.ambient_dim());
  for (const auto& combo : kernel(field, stacked)) {
    SparseVector<F> v;
    for (const auto& [i, c] : combo.entries()) {
      if (i < a.dim()) v.axpy(field, c, a.basis()[i]);
    }
    out.insert(v);
  }
  return out;
}

template <class F>
bool equals(const Subspace<F>& a, const Subspace<F>& b) {
  a.check_compatible(b);
  return a == b;
}

template <class F>
bool contains(const Subspace<F>& a, const Subspace<F>& b) {
  return a.contains(b);
}

template <class F>
bool member(const SparseVector<F>& v, const Subspace<F>& s) {
  return s.contains(v);
}

}  // namespace schurpol
