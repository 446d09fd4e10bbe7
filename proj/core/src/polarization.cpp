#include "schurpol/polarization.hpp"

#include <deque>
#include <map>
#include <random>

#include "schurpol/schur_module.hpp"

namespace schurpol {

template <class F>
SparseVector<F> apply_operator(const F& field, const SparseVector<F>& v, const MonomialModule& ambient,
                               const OneParamOperator& op) {
  if (op.i < 0 || op.j < 0 || op.i >= ambient.cols() || op.j >= ambient.cols() || op.i == op.j) {
    throw std::out_of_range("operator column indices out of range");
  }
  if (op.order < 1) throw std::out_of_range("operator order must be >= 1");
  SubstitutionTable table(ambient, OneParamFamily::column_shift(ambient.cols(), op.i, op.j), Axis::cols);
  return table.apply(field, v, op.order);
}

template <class F>
Subspace<F> gl_closure(const Subspace<F>& s, const MonomialModule& ambient) {
  if (s.ambient_dim() != ambient.size()) throw std::invalid_argument("subspace does not live in ambient");
  const F& field = s.field();
  std::vector<SubstitutionTable> tables;
  for (auto& family : gl_root_families(ambient.cols())) tables.emplace_back(ambient, std::move(family), Axis::cols);

  Subspace<F> result(field, ambient.size());
  std::deque<SparseVector<F>> pending;
  for (const auto& row : s.basis()) {
    for (auto& part : split_by_degrees(field, ambient, row, Axis::cols)) {
      if (result.insert(part)) pending.push_back(std::move(part));
    }
  }
  // Every pending vector is torus-homogeneous and every operator maps
  // homogeneous vectors to homogeneous vectors.
  while (!pending.empty()) {
    SparseVector<F> v = std::move(pending.front());
    pending.pop_front();
    for (auto& table : tables) {
      for (int r = 1; r <= ambient.degree(); ++r) {
        auto w = table.apply(field, v, r);
        // No early exit on a zero coefficient: in characteristic p the t^1
        // coefficient can vanish while t^p does not.
        if (!w.is_zero() && result.insert(w)) pending.push_back(std::move(w));
      }
    }
  }
  return result;
}

template <class F>
SparseVector<F> apply_column_matrix(const F& field, const SparseVector<F>& v, const MonomialModule& ambient,
                                    const std::vector<std::vector<typename F::value_type>>& sigma) {
  using Value = typename F::value_type;
  const int rows = ambient.rows(), cols = ambient.cols();
  std::vector<typename SparseVector<F>::Entry> pairs;
  for (const auto& [u, coeff] : v.entries()) {
    std::map<Exponents, Value> acc;
    acc.emplace(Exponents(static_cast<std::size_t>(rows * cols), 0), coeff);
    const auto& mono = ambient.monomial(u);
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) {
        for (int rep = 0; rep < mono[r * cols + c]; ++rep) {
          std::map<Exponents, Value> next;
          for (const auto& [e, a] : acc) {
            for (int c2 = 0; c2 < cols; ++c2) {
              if (field.is_zero(sigma[c][c2])) continue;
              auto e2 = e;
              ++e2[r * cols + c2];
              auto [it, inserted] = next.try_emplace(std::move(e2), field.zero());
              it->second = field.add(it->second, field.mul(a, sigma[c][c2]));
            }
          }
          acc = std::move(next);
        }
      }
    }
    for (auto& [e, a] : acc) pairs.emplace_back(ambient.index_of(e), std::move(a));
  }
  return SparseVector<F>::from_pairs(field, std::move(pairs));
}

namespace {

template <class F>
typename F::value_type random_scalar(const F& field, std::mt19937_64& rng) {
  if constexpr (std::is_same_v<F, PrimeField>) {
    std::uniform_int_distribution<std::uint32_t> dist(0, field.characteristic() - 1);
    return dist(rng);
  } else {
    std::uniform_int_distribution<int> dist(-3, 3);
    return field.from_int(dist(rng));
  }
}

}  // namespace

template <class F>
Subspace<F> random_group_span(const Subspace<F>& s, const MonomialModule& ambient, int trials, std::uint64_t seed) {
  const F& field = s.field();
  const int m = ambient.cols();
  std::mt19937_64 rng(seed);
  Subspace<F> result = s;
  for (int t = 0; t < trials; ++t) {
    std::vector<std::vector<typename F::value_type>> sigma;
    while (true) {
      sigma.assign(m, std::vector<typename F::value_type>(m, field.zero()));
      for (auto& row : sigma) {
        for (auto& x : row) x = random_scalar(field, rng);
      }
      if (Subspace<F>::span_dense(field, sigma).dim() == static_cast<std::size_t>(m)) break;
    }
    for (const auto& row : s.basis()) result.insert(apply_column_matrix(field, row, ambient, sigma));
  }
  return result;
}

PolarizationReport polarization_equality_check(const Partition& lambda, int a, int b, const FieldSpec& spec) {
  if (a > b) throw std::invalid_argument("polarization check needs a <= b");
  if (a < 0) throw std::invalid_argument("polarization check needs a >= 0");
  return with_field(spec, [&](const auto& field) {
    const auto small = realize_schur(lambda, a, field);
    const auto source = embed(small, b);
    const auto closure = gl_closure(source.space, source.ambient);
    const auto target = realize_schur(lambda, b, field);
    PolarizationReport r;
    r.lambda = lambda;
    r.a = a;
    r.b = b;
    r.field = spec;
    r.source_dim = source.space.dim();
    r.closure_dim = closure.dim();
    r.target_dim = target.space.dim();
    r.ambient_dim = target.ambient.size();
    r.contained = target.space.contains(closure);
    r.equal = closure == target.space;
    return r;
  });
}

SlicingReport slicing_polarization_check(const Partition& lambda, int n, int k, int m, const FieldSpec& field) {
  if (k < 2) throw std::invalid_argument("hypothesis failed: k >= 2");
  if (lambda.length() > n) throw std::invalid_argument("hypothesis failed: l(lambda) <= n");
  if (field.kind() == FieldKind::prime_field && field.characteristic() <= static_cast<std::uint32_t>(k * n)) {
    throw std::invalid_argument("hypothesis failed: characteristic must exceed k*n = " + std::to_string(k * n));
  }
  const int d = lambda.size();
  const int a = n * ceil_div(d, n * (k - 1));
  if (m < a) {
    throw std::invalid_argument("hypothesis failed: m >= n*ceil(d/(n(k-1))) = " + std::to_string(a));
  }
  SlicingReport r;
  r.lambda = lambda;
  r.n = n;
  r.k = k;
  r.m = m;
  r.a = a;
  r.pieces = slice_decomposition(lambda, n, k).pieces;
  with_field(field, [&](const auto& f) {
    for (const auto& piece : r.pieces) r.piece_dims.push_back(realize_schur(piece, n, f).space.dim());
  });
  r.check = polarization_equality_check(lambda, a, m, field);
  return r;
}

PolarizationGridReport polarization_grid(int d_max, int a_max, int b_max, const std::vector<FieldSpec>& fields) {
  PolarizationGridReport report;
  for (const auto& field : fields) {
    for (int d = 0; d <= d_max; ++d) {
      for (const auto& lambda : enumerate_partitions(d, a_max)) {
        for (int a = std::max(lambda.length(), 1); a <= a_max; ++a) {
          for (int b = a; b <= b_max; ++b) {
            ++report.cases;
            const auto r = polarization_equality_check(lambda, a, b, field);
            const std::string tag = lambda.to_string() + " a=" + std::to_string(a) + " b=" +
                                    std::to_string(b) + " " + field.to_string();
            const bool semisimple = field.characteristic() == 0 || field.characteristic() > static_cast<std::uint32_t>(d);
            if (r.equal) continue;
            if (semisimple) {
              ++report.expected_equal_failures;
              if (report.failure_samples.size() < 10) report.failure_samples.push_back(tag);
            } else {
              ++report.small_char_false;
              if (report.small_char_false_samples.size() < 10) report.small_char_false_samples.push_back(tag);
            }
          }
        }
      }
    }
  }
  return report;
}

template SparseVector<Rationals> apply_operator(const Rationals&, const SparseVector<Rationals>&, const MonomialModule&, const OneParamOperator&);
template SparseVector<PrimeField> apply_operator(const PrimeField&, const SparseVector<PrimeField>&, const MonomialModule&, const OneParamOperator&);
template Subspace<Rationals> gl_closure(const Subspace<Rationals>&, const MonomialModule&);
template Subspace<PrimeField> gl_closure(const Subspace<PrimeField>&, const MonomialModule&);
template Subspace<Rationals> random_group_span(const Subspace<Rationals>&, const MonomialModule&, int, std::uint64_t);
template Subspace<PrimeField> random_group_span(const Subspace<PrimeField>&, const MonomialModule&, int, std::uint64_t);
template SparseVector<Rationals> apply_column_matrix(const Rationals&, const SparseVector<Rationals>&, const MonomialModule&, const std::vector<std::vector<mpq_class>>&);
template SparseVector<PrimeField> apply_column_matrix(const PrimeField&, const SparseVector<PrimeField>&, const MonomialModule&, const std::vector<std::vector<std::uint32_t>>&);

}  // namespace schurpol
