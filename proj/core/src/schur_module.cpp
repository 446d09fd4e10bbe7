#include "schurpol/schur_module.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "schurpol/tableau.hpp"

namespace schurpol {

namespace {

// Strictly increasing subsets of [0, a) of size len, lexicographic.
std::vector<std::vector<int>> increasing_columns(int len, int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= a - (len - static_cast<int>(cur.size())); ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

int permutation_sign(const std::vector<int>& perm) {
  int sign = 1;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    for (std::size_t j = i + 1; j < perm.size(); ++j) {
      if (perm[i] > perm[j]) sign = -sign;
    }
  }
  return sign;
}

}  // namespace

std::vector<std::vector<std::vector<int>>> column_strict_fillings(const Partition& shape, int a) {
  const auto heights = conjugate(shape).parts();
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> cur;
  // Candidate columns per distinct height.
  std::map<int, std::vector<std::vector<int>>> candidates;
  for (int h : heights) {
    if (!candidates.count(h)) candidates[h] = increasing_columns(h, a);
  }
  auto rec = [&](auto&& self, std::size_t col, std::size_t min_choice) -> void {
    if (col == heights.size()) {
      out.push_back(cur);
      return;
    }
    const auto& cands = candidates[heights[col]];
    const bool same_height = col > 0 && heights[col] == heights[col - 1];
    for (std::size_t c = same_height ? min_choice : 0; c < cands.size(); ++c) {
      cur.push_back(cands[c]);
      self(self, col + 1, c);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

IntPoly bideterminant(const Partition& shape, int m, const std::vector<std::vector<int>>& columns) {
  const int rows = shape.length();
  IntPoly result = IntPoly::constant(rows, m, 1);
  for (const auto& col : columns) {
    const int h = static_cast<int>(col.size());
    IntPoly minor = IntPoly::constant(rows, m, 0);
    std::vector<int> perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Exponents e(static_cast<std::size_t>(rows * m), 0);
      for (int r = 0; r < h; ++r) ++e[r * m + col[perm[r]]];
      minor.add_term(e, permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    result = result * minor;
  }
  return result;
}

namespace {

template <class F>
Subspace<F> bideterminant_span(const Partition& lambda, int a, const MonomialModule& ambient, const F& field) {
  Subspace<F> space(field, ambient.size());
  if (lambda.length() > a) return space;
  for (const auto& filling : column_strict_fillings(lambda, a)) {
    space.insert(to_vector(field, ambient, bideterminant(lambda, ambient.cols(), filling)));
  }
  return space;
}

}  // namespace

template <class F>
SchurRealization<F> realize_schur(const Partition& lambda, int m, const F& field) {
  auto ambient = MonomialModule::sym_tensor(lambda, m);
  auto space = bideterminant_span(lambda, m, ambient, field);
  return {lambda, m, ambient, std::move(space)};
}

template <class F>
SchurRealization<F> embed(const SchurRealization<F>& source, int b) {
  if (b < source.m) throw std::invalid_argument("embed needs b >= a");
  const F& field = source.space.field();
  auto ambient = MonomialModule::sym_tensor(source.shape, b);
  Subspace<F> space(field, ambient.size());
  for (const auto& row : source.space.basis()) {
    space.insert(embed_vector(field, row, source.ambient, ambient));
  }
  return {source.shape, b, ambient, std::move(space)};
}

template <class F>
ConcatProjection<F> concat_projection(const Partition& lambda, const Partition& mu, int m, const F& field) {
  const auto a = realize_schur(lambda, m, field);
  const auto b = realize_schur(mu, m, field);
  auto target = realize_schur(lambda + mu, m, field);
  const auto& ambient = target.ambient;

  // The map is torus-equivariant and the bases are weight vectors, so rank
  // can be computed one column-weight block at a time.
  std::map<std::vector<int>, std::vector<SparseVector<F>>> blocks;
  for (const auto& x : a.space.basis()) {
    for (const auto& y : b.space.basis()) {
      auto v = multiply(field, a.ambient, x, b.ambient, y, ambient);
      std::vector<int> weight = v.is_zero() ? std::vector<int>{-1} : ambient.column_degrees(v.leading_index());
      blocks[weight].push_back(std::move(v));
    }
  }
  ConcatProjection<F> out{lambda, mu, m, a.space.dim() * b.space.dim(), 0, 0,
                          Subspace<F>(field, ambient.size()), std::move(target.space)};
  for (auto& [weight, vectors] : blocks) {
    for (const auto& v : vectors) {
      if (out.image.insert(v)) ++out.rank;
    }
  }
  out.kernel_dim = out.source_dim - out.rank;
  return out;
}

SchurDimSuiteReport schur_dimension_suite(int d_max, int m_max, const std::vector<FieldSpec>& fields) {
  SchurDimSuiteReport report;
  for (const auto& spec : fields) {
    with_field(spec, [&](const auto& field) {
      for (int d = 0; d <= d_max; ++d) {
        for (const auto& lambda : enumerate_partitions(d, d)) {
          for (int m = 0; m <= m_max; ++m) {
            ++report.cases;
            const auto real = realize_schur(lambda, m, field);
            const auto ssyt = ssyt_enumerate(lambda, m).size();
            const auto hook = schur_dimension(lambda, m);
            if (real.space.dim() != ssyt || hook != static_cast<unsigned long>(ssyt)) {
              ++report.failures;
              if (report.failure_samples.size() < 10) {
                report.failure_samples.push_back(lambda.to_string() + " m=" + std::to_string(m) + " " +
                                                 spec.to_string() + ": realized " +
                                                 std::to_string(real.space.dim()) + ", ssyt " +
                                                 std::to_string(ssyt) + ", hook " + hook.get_str());
              }
            }
          }
        }
      }
    });
  }
  return report;
}

ConcatSuiteReport concat_suite(int size_max, int m_max, const FieldSpec& spec) {
  ConcatSuiteReport report;
  std::vector<Partition> shapes;
  for (int s = 0; s <= size_max; ++s) {
    for (auto& p : enumerate_partitions(s, s)) shapes.push_back(std::move(p));
  }
  with_field(spec, [&](const auto& field) {
    for (const auto& lambda : shapes) {
      for (const auto& mu : shapes) {
        for (int m = 1; m <= m_max; ++m) {
          if (lambda.length() > m || mu.length() > m) continue;
          ++report.cases;
          const auto proj = concat_projection(lambda, mu, m, field);
          mpz_class expected_kernel = 0;
          const Partition top = lambda + mu;
          for (const auto& [nu, c] : lr_expand_product(lambda, mu, m)) {
            if (nu != top) expected_kernel += c * schur_dimension(nu, m);
          }
          const bool ok = proj.surjective() && expected_kernel == static_cast<unsigned long>(proj.kernel_dim);
          if (!ok) {
            ++report.failures;
            if (report.failure_samples.size() < 10) {
              report.failure_samples.push_back(lambda.to_string() + "*" + mu.to_string() + " m=" +
                                               std::to_string(m) + ": kernel " +
                                               std::to_string(proj.kernel_dim) + " expected " +
                                               expected_kernel.get_str());
            }
          }
        }
      }
    }
  });
  return report;
}

template SchurRealization<Rationals> realize_schur(const Partition&, int, const Rationals&);
template SchurRealization<PrimeField> realize_schur(const Partition&, int, const PrimeField&);
template SchurRealization<Rationals> embed(const SchurRealization<Rationals>&, int);
template SchurRealization<PrimeField> embed(const SchurRealization<PrimeField>&, int);
template ConcatProjection<Rationals> concat_projection(const Partition&, const Partition&, int, const Rationals&);
template ConcatProjection<PrimeField> concat_projection(const Partition&, const Partition&, int, const PrimeField&);

}  // namespace schurpol
