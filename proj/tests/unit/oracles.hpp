#pragma once

// Brute-force reference computations used to freeze derived expectations.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

/// Transpose of the Young diagram, computed from its cell set.
inline Parts transpose(const Parts& lambda) {
  std::set<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.insert({c, r});
  }
  std::map<int, int> rows;
  for (auto [r, c] : cells) rows[r] = std::max(rows[r], c + 1);
  Parts out;
  for (auto [r, len] : rows) out.push_back(len);
  return out;
}

/// All partitions of d with at most max_len parts, filtered from every composition.
inline std::set<Parts> partitions(int d, int max_len) {
  std::set<Parts> out;
  if (d == 0) {
    out.insert(Parts{});
    return out;
  }
  for (unsigned mask = 0; mask < (1u << (d - 1)); ++mask) {
    Parts comp;
    int run = 1;
    for (int i = 0; i < d - 1; ++i) {
      if (mask & (1u << i)) {
        comp.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    comp.push_back(run);
    if (std::is_sorted(comp.rbegin(), comp.rend()) && static_cast<int>(comp.size()) <= max_len) out.insert(comp);
  }
  return out;
}

/// Number of semistandard fillings with entries 1..m, by trying every filling.
inline long ssyt_count(const Parts& lambda, int m) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.push_back({r, c});
  }
  if (m <= 0) return cells.empty() ? 1 : 0;
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(lambda[r], 0);
  long count = 0;
  std::vector<int> fill(cells.size(), 1);
  while (true) {
    for (std::size_t i = 0; i < cells.size(); ++i) t[cells[i].first][cells[i].second] = fill[i];
    bool ok = true;
    for (auto [r, c] : cells) {
      if (c > 0 && t[r][c - 1] > t[r][c]) ok = false;
      if (r > 0 && t[r - 1][c] >= t[r][c]) ok = false;
    }
    count += ok;
    std::size_t i = 0;
    while (i < fill.size() && fill[i] == m) fill[i++] = 1;
    if (i == fill.size()) break;
    ++fill[i];
  }
  return count;
}

/// Monomial expansion of a Schur polynomial in k variables, from brute-force tableaux.
inline std::map<Parts, long> schur_poly(const Parts& lambda, int k) {
  std::map<Parts, long> poly;
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.push_back({r, c});
  }
  std::vector<std::vector<int>> t(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) t[r].assign(lambda[r], 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == cells.size()) {
      Parts e(k, 0);
      for (auto [r, c] : cells) ++e[t[r][c] - 1];
      ++poly[e];
      return;
    }
    auto [r, c] = cells[i];
    int lo = 1;
    if (c > 0) lo = std::max(lo, t[r][c - 1]);
    if (r > 0) lo = std::max(lo, t[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
      t[r][c] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return poly;
}

/// Expands s_lambda * s_mu in k variables into Schur polynomials by peeling off
/// leading dominant monomials.
inline std::map<Parts, long> lr_product(const Parts& lambda, const Parts& mu, int k) {
  auto a = schur_poly(lambda, k);
  auto b = schur_poly(mu, k);
  std::map<Parts, long> prod;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Parts e(k);
      for (int i = 0; i < k; ++i) e[i] = ea[i] + eb[i];
      prod[e] += ca * cb;
    }
  }
  std::map<Parts, long> out;
  while (true) {
    auto it = std::find_if(prod.rbegin(), prod.rend(), [](const auto& kv) { return kv.second != 0; });
    if (it == prod.rend()) break;
    Parts nu = it->first;
    long c = it->second;
    auto s = schur_poly(Parts(nu.begin(), std::find(nu.begin(), nu.end(), 0)), k);
    for (const auto& [e, v] : s) prod[e] -= c * v;
    while (!nu.empty() && nu.back() == 0) nu.pop_back();
    out[nu] += c;
  }
  return out;
}

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
