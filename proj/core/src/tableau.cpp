#include "schurpol/tableau.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurpol {

bool is_semistandard(const Tableau& t, int m) {
  if (static_cast<int>(t.rows.size()) != t.shape.length()) return false;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (static_cast<int>(t.rows[i].size()) != t.shape[i]) return false;
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      const int v = t.rows[i][j];
      if (v < 1 || v > m) return false;
      if (j > 0 && t.rows[i][j - 1] > v) return false;
      if (i > 0 && t.rows[i - 1][j] >= v) return false;
    }
  }
  return true;
}

namespace {

void fill_ssyt(Tableau& t, int m, std::size_t row, std::size_t col, std::vector<Tableau>& out) {
  if (row == t.rows.size()) {
    out.push_back(t);
    return;
  }
  if (col == t.rows[row].size()) {
    fill_ssyt(t, m, row + 1, 0, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, t.rows[row][col - 1]);
  if (row > 0) lo = std::max(lo, t.rows[row - 1][col] + 1);
  // Leave room for the strictly increasing column below this cell.
  const int below = conjugate(t.shape)[col] - static_cast<int>(row) - 1;
  for (int v = lo; v <= m - below; ++v) {
    t.rows[row][col] = v;
    fill_ssyt(t, m, row, col + 1, out);
  }
}

struct LrSearch {
  const Partition& nu;
  const Partition& lambda;
  const Partition& mu;
  std::vector<std::vector<int>> grid;  // grid[i][j] for lambda[i] <= j < nu[i]
  std::vector<int> count;
  std::int64_t found = 0;

  int at(int i, int j) const { return grid[i][j - lambda[i]]; }

  void run(int i, int j) {
    if (i == nu.length()) {
      ++found;
      return;
    }
    if (j < lambda[i]) {
      run(i + 1, i + 1 < nu.length() ? nu[i + 1] - 1 : 0);
      return;
    }
    // Right-to-left within row i, so entries are bounded above by the right neighbour.
    int hi = mu.length();
    if (j + 1 < nu[i]) hi = std::min(hi, at(i, j + 1));
    int lo = 1;
    if (i > 0 && j < nu[i - 1] && j >= lambda[i - 1]) lo = at(i - 1, j) + 1;
    for (int v = lo; v <= hi; ++v) {
      if (count[v] >= mu[v - 1]) continue;
      if (v > 1 && count[v] + 1 > count[v - 1]) continue;
      ++count[v];
      grid[i][j - lambda[i]] = v;
      run(i, j - 1);
      --count[v];
    }
  }
};

}  // namespace

std::vector<Tableau> ssyt_enumerate(const Partition& lambda, int m) {
  if (m < 0) throw std::invalid_argument("ssyt_enumerate needs m >= 0");
  std::vector<Tableau> out;
  if (lambda.length() > m) return out;
  Tableau t{lambda, {}};
  for (int part : lambda.parts()) t.rows.emplace_back(part, 0);
  fill_ssyt(t, m, 0, 0, out);
  return out;
}

std::int64_t lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (nu.size() != lambda.size() + mu.size()) {
    throw std::invalid_argument("lr_coefficient needs |nu| = |lambda| + |mu|");
  }
  if (lambda.length() > nu.length()) return 0;
  for (int i = 0; i < lambda.length(); ++i) {
    if (lambda[i] > nu[i]) return 0;
  }
  LrSearch search{nu, lambda, mu, {}, std::vector<int>(mu.length() + 1, 0)};
  for (int i = 0; i < nu.length(); ++i) search.grid.emplace_back(nu[i] - lambda[i], 0);
  if (nu.empty()) return 1;
  search.run(0, nu[0] - 1);
  return search.found;
}

PartitionMultiset lr_expand_product(const Partition& lambda, const Partition& mu, int max_len) {
  PartitionMultiset out;
  for (auto& nu : enumerate_partitions(lambda.size() + mu.size(), max_len)) {
    const auto c = lr_coefficient(nu, lambda, mu);
    if (c > 0) out.emplace_back(std::move(nu), c);
  }
  return out;
}

CauchyReport cauchy_check(int n, int m, int d) {
  if (n < 1 || m < 1 || d < 0) throw std::invalid_argument("cauchy_check needs n, m >= 1 and d >= 0");
  CauchyReport r{n, m, d, binomial(static_cast<unsigned long>(n * m + d - 1), static_cast<unsigned long>(d)), 0, {}};
  for (auto& lambda : enumerate_partitions(d, std::min(n, m))) {
    CauchyTerm term{lambda, schur_dimension(lambda, n), schur_dimension(lambda, m)};
    r.rhs += term.dim_n * term.dim_m;
    r.terms.push_back(std::move(term));
  }
  return r;
}

LrSuiteReport lr_suite(int size_max, int m_max) {
  LrSuiteReport report;
  auto fail = [&](const std::string& what) {
    ++report.failures;
    if (report.failure_samples.size() < 10) report.failure_samples.push_back(what);
  };
  std::vector<Partition> shapes;
  for (int s = 0; s <= size_max; ++s) {
    for (auto& p : enumerate_partitions(s, s)) shapes.push_back(std::move(p));
  }
  for (const auto& lambda : shapes) {
    for (const auto& mu : shapes) {
      ++report.pairs;
      const std::string tag = lambda.to_string() + "*" + mu.to_string();
      const Partition top = lambda + mu;
      const int total = top.size();
      const auto full = lr_expand_product(lambda, mu, total);
      for (const auto& [nu, c] : full) {
        if (nu == top) {
          if (c != 1) fail(tag + ": top constituent has multiplicity " + std::to_string(c));
        } else if (!dominance_leq(nu, top)) {
          fail(tag + ": " + nu.to_string() + " not dominated by lambda+mu");
        }
        if (lr_coefficient(nu, mu, lambda) != c) fail(tag + ": asymmetric at " + nu.to_string());
      }
      if (std::none_of(full.begin(), full.end(), [&](const auto& e) { return e.first == top; })) {
        fail(tag + ": lambda+mu missing");
      }
      for (int m = 1; m <= m_max; ++m) {
        mpz_class lhs = 0;
        for (const auto& [nu, c] : full) lhs += c * schur_dimension(nu, m);
        if (lhs != schur_dimension(lambda, m) * schur_dimension(mu, m)) {
          fail(tag + ": dimension bookkeeping fails at m=" + std::to_string(m));
        }
      }
    }
  }
  return report;
}

}  // namespace schurpol
