#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "schurpol/invariants.hpp"

namespace schurpol {

namespace {

using PolyMatrix = std::vector<std::vector<IntPoly>>;

// Determinant by expansion over row prefixes, memoized on the set of used columns.
IntPoly determinant(const PolyMatrix& m, int rows, int cols) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return IntPoly::constant(rows, cols, 1);
  if (n > 20) throw std::length_error("determinant too large");
  std::map<unsigned, IntPoly> layer{{0u, IntPoly::constant(rows, cols, 1)}};
  for (int i = 0; i < n; ++i) {
    std::map<unsigned, IntPoly> next;
    for (const auto& [mask, value] : layer) {
      if (value.is_zero()) continue;
      for (int c = 0; c < n; ++c) {
        if (mask & (1u << c) || m[i][c].is_zero()) continue;
        // Earlier rows sitting in later columns each contribute an inversion.
        const int inversions = __builtin_popcount(mask >> (c + 1));
        IntPoly term = value * m[i][c];
        if (inversions % 2) term = term.scaled(-1);
        auto [it, inserted] = next.try_emplace(mask | (1u << c), IntPoly::constant(rows, cols, 0));
        it->second += term;
      }
    }
    layer = std::move(next);
  }
  auto it = layer.find((1u << n) - 1);
  return it == layer.end() ? IntPoly::constant(rows, cols, 0) : it->second;
}

PolyMatrix matrix_variable(int n, int copies, int copy) {
  PolyMatrix x(n, std::vector<IntPoly>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) x[a][b] = IntPoly::variable(n * n, copies, a * n + b, copy);
  }
  return x;
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b, int rows, int cols) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<IntPoly>(n, IntPoly::constant(rows, cols, 0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

// Words up to rotation: keep only those that are minimal among their rotations.
bool is_rotation_minimal(const std::vector<int>& w) {
  for (std::size_t s = 1; s < w.size(); ++s) {
    std::vector<int> rot(w.begin() + s, w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + s);
    if (rot < w) return false;
  }
  return true;
}

void char_poly_generators(const ActionSpec& action, int d_max, GeneratorPolynomials& out) {
  const int n = action.n(), m = action.copies();
  const int rows = n * n;
  std::vector<PolyMatrix> xs;
  for (int c = 0; c < m; ++c) xs.push_back(matrix_variable(n, m, c));
  std::vector<int> word;
  auto visit = [&](auto&& self, int len) -> void {
    if (!word.empty() && is_rotation_minimal(word)) {
      PolyMatrix w = xs[word[0]];
      for (std::size_t i = 1; i < word.size(); ++i) w = matmul(w, xs[word[i]], rows, m);
      // sigma_k(W): sum of principal k x k minors.
      for (int k = 1; k <= n && k * len <= d_max; ++k) {
        IntPoly sigma = IntPoly::constant(rows, m, 0);
        for (unsigned subset = 0; subset < (1u << n); ++subset) {
          if (__builtin_popcount(subset) != k) continue;
          std::vector<int> idx;
          for (int i = 0; i < n; ++i) {
            if (subset & (1u << i)) idx.push_back(i);
          }
          PolyMatrix minor(k, std::vector<IntPoly>(k));
          for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) minor[i][j] = w[idx[i]][idx[j]];
          }
          sigma += determinant(minor, rows, m);
        }
        ++out.enumerated;
        if (!sigma.is_zero()) out.by_degree[k * len].push_back(std::move(sigma));
      }
    }
    if (len == d_max) return;
    for (int c = 0; c < m; ++c) {
      word.push_back(c);
      self(self, len + 1);
      word.pop_back();
    }
  };
  visit(visit, 0);
}

void determinantal_generators(const ActionSpec& action, int d_max, long budget, GeneratorPolynomials& out) {
  const int n = action.n(), m = action.copies();
  const int rows = n * n;
  std::vector<PolyMatrix> xs;
  for (int c = 0; c < m; ++c) xs.push_back(matrix_variable(n, m, c));
  for (int k = 1; k * n <= d_max; ++k) {
    const int bits = m * k * k;
    const std::uint64_t total = bits >= 63 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << bits);
    std::uint64_t count = std::min<std::uint64_t>(total, static_cast<std::uint64_t>(budget));
    if (count < total) out.exhaustive = false;
    for (std::uint64_t code = 1; code < count; ++code) {
      // T_c[p][q] = bit (c k^2 + p k + q) of code.
      PolyMatrix big(k * n, std::vector<IntPoly>(k * n, IntPoly::constant(rows, m, 0)));
      for (int c = 0; c < m; ++c) {
        for (int p = 0; p < k; ++p) {
          for (int q = 0; q < k; ++q) {
            if (!((code >> (c * k * k + p * k + q)) & 1u)) continue;
            for (int a = 0; a < n; ++a) {
              for (int b = 0; b < n; ++b) big[p * n + a][q * n + b] += xs[c][a][b];
            }
          }
        }
      }
      ++out.enumerated;
      const auto det = determinant(big, rows, m);
      for (auto& part : det.homogeneous_components(Axis::cols)) out.by_degree[k * n].push_back(std::move(part));
    }
  }
}

void pluecker_generators(const ActionSpec& action, int d_max, GeneratorPolynomials& out) {
  const int m = action.copies();
  if (d_max < 2) return;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      auto bracket = IntPoly::variable(2, m, 0, i) * IntPoly::variable(2, m, 1, j) -
                     IntPoly::variable(2, m, 1, i) * IntPoly::variable(2, m, 0, j);
      ++out.enumerated;
      out.by_degree[2].push_back(std::move(bracket));
    }
  }
}

}  // namespace

GeneratorFamily parse_generator_family(std::string_view text) {
  if (text == "char_poly_traces" || text == "traces") return GeneratorFamily::char_poly_traces;
  if (text == "determinantal") return GeneratorFamily::determinantal;
  if (text == "pluecker") return GeneratorFamily::pluecker;
  throw std::invalid_argument("unknown generator family '" + std::string(text) + "'");
}

std::string to_string(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::char_poly_traces:
      return "char_poly_traces";
    case GeneratorFamily::determinantal:
      return "determinantal";
    case GeneratorFamily::pluecker:
      return "pluecker";
  }
  return "";
}

GeneratorPolynomials generator_polynomials(const ActionSpec& action, GeneratorFamily family, int d_max, long budget) {
  GeneratorPolynomials out;
  switch (family) {
    case GeneratorFamily::char_poly_traces:
      if (action.kind() != ActionKind::gl_conjugation) {
        throw std::invalid_argument("char_poly_traces generators need a conj:<n> action");
      }
      char_poly_generators(action, d_max, out);
      break;
    case GeneratorFamily::determinantal:
      if (action.kind() != ActionKind::slsl_leftright) {
        throw std::invalid_argument("determinantal generators need a slsl:<n> action");
      }
      determinantal_generators(action, d_max, budget, out);
      break;
    case GeneratorFamily::pluecker:
      if (action.kind() != ActionKind::sl2_vector) throw std::invalid_argument("pluecker generators need sl2vec");
      pluecker_generators(action, d_max, out);
      break;
  }
  return out;
}

template <class F>
Subspace<F> generator_span(const ActionSpec& action, GeneratorFamily family, int d, const F& field, long budget,
                           bool* exhaustive) {
  if (d < 0) throw std::invalid_argument("generator_span needs d >= 0");
  const auto gens = generator_polynomials(action, family, d, budget);
  if (exhaustive) *exhaustive = gens.exhaustive;
  std::vector<MonomialModule> modules;
  for (int e = 0; e <= d; ++e) modules.push_back(MonomialModule::sym_of_tensor(e, action.dim_v(), action.copies()));
  // algebra[e] = span of degree-e products of generators.
  std::vector<Subspace<F>> algebra;
  algebra.emplace_back(field, modules[0].size());
  algebra[0].insert(SparseVector<F>::unit(field, 0));
  std::vector<Subspace<F>> generators;
  for (int e = 0; e <= d; ++e) {
    generators.emplace_back(field, modules[e].size());
    if (auto it = gens.by_degree.find(e); e > 0 && it != gens.by_degree.end()) {
      for (const auto& g : it->second) generators[e].insert(to_vector(field, modules[e], g));
    }
  }
  for (int e = 1; e <= d; ++e) {
    Subspace<F> s = generators[e];
    for (int f = 1; f < e; ++f) {
      for (const auto& g : generators[f].basis()) {
        for (const auto& h : algebra[e - f].basis()) s.insert(multiply(field, modules[f], g, modules[e - f], h, modules[e]));
      }
    }
    algebra.push_back(std::move(s));
  }
  return algebra[d];
}

GeneratorReport generator_span_check(const ActionSpec& action, GeneratorFamily family, int d, long budget) {
  return with_field(action.field(), [&](const auto& field) {
    GeneratorReport r{action, family, d};
    const auto span = generator_span(action, family, d, field, budget, &r.exhaustive);
    const auto inv = invariant_space(action, d, field);
    r.span_dim = span.dim();
    r.invariant_dim = inv.dim();
    r.contained = inv.contains(span);
    r.equal = span == inv;
    return r;
  });
}

template Subspace<Rationals> generator_span(const ActionSpec&, GeneratorFamily, int, const Rationals&, long, bool*);
template Subspace<PrimeField> generator_span(const ActionSpec&, GeneratorFamily, int, const PrimeField&, long, bool*);

}  // namespace schurpol
