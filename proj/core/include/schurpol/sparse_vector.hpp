#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace schurpol {

/// Sparse vector over a field F: entries sorted by index, no stored zeros.
template <class F>
class SparseVector {
 public:
  using value_type = typename F::value_type;
  using Entry = std::pair<std::uint32_t, value_type>;

  SparseVector() = default;

  /// Builds from unsorted (index, value) pairs; duplicates are summed, zeros dropped.
  static SparseVector from_pairs(const F& field, std::vector<Entry> pairs) {
    std::sort(pairs.begin(), pairs.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    v.entries_.reserve(pairs.size());
    for (auto& [i, c] : pairs) {
      if (!v.entries_.empty() && v.entries_.back().first == i) {
        v.entries_.back().second = field.add(v.entries_.back().second, c);
        if (field.is_zero(v.entries_.back().second)) v.entries_.pop_back();
      } else if (!field.is_zero(c)) {
        v.entries_.emplace_back(i, std::move(c));
      }
    }
    return v;
  }

  static SparseVector from_dense(const F& field, const std::vector<value_type>& dense) {
    SparseVector v;
    for (std::uint32_t i = 0; i < dense.size(); ++i) {
      if (!field.is_zero(dense[i])) v.entries_.emplace_back(i, dense[i]);
    }
    return v;
  }

  static SparseVector unit(const F& field, std::uint32_t i) {
    SparseVector v;
    v.entries_.emplace_back(i, field.one());
    return v;
  }

  bool is_zero() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::uint32_t leading_index() const { return entries_.front().first; }
  const value_type& leading_value() const { return entries_.front().second; }

  /// Coefficient at index i, or nullptr when it is zero.
  const value_type* find(std::uint32_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::uint32_t k) { return e.first < k; });
    if (it == entries_.end() || it->first != i) return nullptr;
    return &it->second;
  }

  void scale(const F& field, const value_type& c) {
    if (field.is_zero(c)) {
      entries_.clear();
      return;
    }
    for (auto& e : entries_) e.second = field.mul(e.second, c);
  }

  /// this += c * other
  void axpy(const F& field, const value_type& c, const SparseVector& other) {
    if (field.is_zero(c) || other.is_zero()) return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a));
        ++a;
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, field.mul(c, b->second));
        ++b;
      } else {
        auto s = field.add(a->second, field.mul(c, b->second));
        if (!field.is_zero(s)) out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace schurpol
