#include "schurpol/invariants.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "schurpol/polarization.hpp"
#include "schurpol/schur_module.hpp"

namespace schurpol {

template <class F>
Subspace<F> invariants_in_module(const ActionSpec& action, const MonomialModule& module, Axis g_axis, const F& field) {
  const Axis other = g_axis == Axis::rows ? Axis::cols : Axis::rows;
  const auto weights = action.coordinate_weights();
  const std::size_t weight_len = weights.empty() ? 0 : weights.front().size();

  std::map<std::vector<int>, std::vector<std::uint32_t>> blocks;
  for (std::uint32_t u = 0; u < module.size(); ++u) {
    std::vector<int> w(weight_len, 0);
    for (int r = 0; r < module.rows(); ++r) {
      for (int c = 0; c < module.cols(); ++c) {
        const int e = module.exponent(u, r, c);
        if (e == 0) continue;
        const auto& cw = weights[g_axis == Axis::rows ? r : c];
        for (std::size_t x = 0; x < weight_len; ++x) w[x] += e * cw[x];
      }
    }
    if (action.torus_allows(w)) blocks[module.axis_degrees(u, other)].push_back(u);
  }

  std::vector<SubstitutionTable> tables;
  for (auto& family : action.generators()) tables.emplace_back(module, std::move(family), g_axis);
  int max_order = 0;
  for (const auto& t : tables) max_order = std::max(max_order, t.family().max_power() * module.degree());
  const std::uint64_t slots = static_cast<std::uint64_t>(tables.size()) * (max_order + 1) * module.size();
  if (slots > std::numeric_limits<std::uint32_t>::max()) throw std::length_error("equation system too large");

  Subspace<F> result(field, module.size());
  for (const auto& [key, unknowns] : blocks) {
    std::vector<SparseVector<F>> images;
    images.reserve(unknowns.size());
    for (auto u : unknowns) {
      std::vector<typename SparseVector<F>::Entry> pairs;
      for (std::size_t f = 0; f < tables.size(); ++f) {
        auto& table = tables[f];
        const auto base = static_cast<std::uint32_t>(f * (max_order + 1) * module.size());
        if (table.family().discrete) {
          for (const auto& [w, c] : table.difference_at_one(u)) pairs.emplace_back(base + w, field.from_int(c));
          continue;
        }
        for (int r = 1; r <= max_order; ++r) {
          const auto offset = base + static_cast<std::uint32_t>(r * module.size());
          for (const auto& [w, c] : table.coefficient(u, r)) pairs.emplace_back(offset + w, field.from_int(c));
        }
      }
      images.push_back(SparseVector<F>::from_pairs(field, std::move(pairs)));
    }
    for (const auto& combo : kernel(field, images)) {
      std::vector<typename SparseVector<F>::Entry> pairs;
      for (const auto& [i, c] : combo.entries()) pairs.emplace_back(unknowns[i], c);
      result.insert(SparseVector<F>::from_pairs(field, std::move(pairs)));
    }
  }
  return result;
}

template <class F>
Subspace<F> invariant_space(const ActionSpec& action, int d, const F& field) {
  if (d < 0) throw std::invalid_argument("invariant_space needs d >= 0");
  if (!(action.field() == field.spec())) throw std::invalid_argument("action field does not match");
  return invariants_in_module(action, MonomialModule::sym_of_tensor(d, action.dim_v(), action.copies()), Axis::rows,
                              field);
}

template <class F>
InvariantRing<F>::InvariantRing(ActionSpec action, F field) : action_(std::move(action)), field_(std::move(field)) {
  if (!(action_.field() == field_.spec())) throw std::invalid_argument("action field does not match");
}

template <class F>
const MonomialModule& InvariantRing<F>::module(int d) {
  auto it = modules_.find(d);
  if (it == modules_.end()) {
    it = modules_.emplace(d, MonomialModule::sym_of_tensor(d, action_.dim_v(), action_.copies())).first;
  }
  return it->second;
}

template <class F>
const Subspace<F>& InvariantRing<F>::invariants(int d) {
  auto it = invariants_.find(d);
  if (it == invariants_.end()) {
    it = invariants_.emplace(d, invariants_in_module(action_, module(d), Axis::rows, field_)).first;
  }
  return it->second;
}

template <class F>
const Subspace<F>& InvariantRing<F>::decomposables(int d) {
  if (d < 2) throw std::invalid_argument("decomposables need d >= 2");
  auto it = decomposables_.find(d);
  if (it != decomposables_.end()) return it->second;
  const auto& target = module(d);
  Subspace<F> dec(field_, target.size());
  for (int e = 1; 2 * e <= d; ++e) {
    const auto& low = invariants(e);
    const auto& high = invariants(d - e);
    const auto& mlow = module(e);
    const auto& mhigh = module(d - e);
    for (const auto& x : low.basis()) {
      for (const auto& y : high.basis()) dec.insert(multiply(field_, mlow, x, mhigh, y, target));
    }
  }
  return decomposables_.emplace(d, std::move(dec)).first->second;
}

bool WeylReport::all_equal() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const WeylDegree& w) { return w.equal; });
}

std::optional<int> WeylReport::first_failure() const {
  for (const auto& w : degrees) {
    if (!w.equal) return w.d;
  }
  return std::nullopt;
}

BetaReport beta_scan(const ActionSpec& action, int d_max) {
  if (d_max < 1) throw std::invalid_argument("beta_scan needs d_max >= 1");
  return with_field(action.field(), [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    InvariantRing<F> ring(action, field);
    BetaReport r{action, d_max};
    for (int d = 0; d <= d_max; ++d) {
      const auto inv = ring.invariants(d).dim();
      std::size_t indec = 0;
      if (d == 1) indec = inv;
      if (d >= 2) indec = inv - ring.decomposables(d).dim();
      r.dims_invariant.push_back(inv);
      r.dims_indecomposable.push_back(indec);
      if (indec > 0) r.beta_lower = d;
    }
    const int window = ceil_div(d_max, 3);
    r.stabilized = r.beta_lower <= d_max - window;
    return r;
  });
}

WeylReport weyl_polarization_check(const ActionSpec& action_a, int b, int d_max) {
  const int a = action_a.copies();
  if (a > b) throw std::invalid_argument("weyl check needs a <= b");
  return with_field(action_a.field(), [&](const auto& field) {
    using F = std::decay_t<decltype(field)>;
    InvariantRing<F> small(action_a, field);
    InvariantRing<F> large(action_a.with_copies(b), field);
    WeylReport r{action_a, a, b, d_max};
    for (int d = 0; d <= d_max; ++d) {
      const auto& mb = large.module(d);
      Subspace<F> source(field, mb.size());
      for (const auto& v : small.invariants(d).basis()) source.insert(embed_vector(field, v, small.module(d), mb));
      const auto closure = gl_closure(source, mb);
      const auto& target = large.invariants(d);
      r.degrees.push_back({d, source.dim(), closure.dim(), target.dim(), closure == target});
    }
    return r;
  });
}

GoodFiltrationReport good_filtration_dim_check(const ActionSpec& action, int d) {
  if (!action.connected()) throw std::invalid_argument("hypothesis failed: good filtration check needs a connected group");
  const auto p = action.field().characteristic();
  if (p != 0 && p <= static_cast<std::uint32_t>(action.dim_v())) {
    throw std::invalid_argument("hypothesis failed: characteristic must be 0 or exceed dim V = " +
                                std::to_string(action.dim_v()));
  }
  if (d < 0) throw std::invalid_argument("good filtration check needs d >= 0");
  return with_field(action.field(), [&](const auto& field) {
    GoodFiltrationReport r{action, d};
    r.lhs = invariant_space(action, d, field).dim();
    for (const auto& lambda : enumerate_partitions(d, action.dim_v())) {
      // S_lambda(V*) with the V coordinates on the column axis.
      const auto schur = realize_schur(lambda, action.dim_v(), field);
      const auto inv = invariants_in_module(action, schur.ambient, Axis::cols, field);
      const auto fixed = intersect(inv, schur.space).dim();
      const auto sdim = schur_dimension(lambda, action.copies()).get_ui();
      r.terms.push_back({lambda, fixed, sdim});
      r.rhs += fixed * sdim;
    }
    return r;
  });
}

HilbertReport hilbert_compare(const ActionSpec& action, int d_max, std::uint32_t p) {
  if (!action.connected()) throw std::invalid_argument("hypothesis failed: Hilbert comparison needs a connected group");
  if (p <= static_cast<std::uint32_t>(action.dim_v())) {
    throw std::invalid_argument("hypothesis failed: p must exceed dim V = " + std::to_string(action.dim_v()));
  }
  HilbertReport r{action, p, d_max};
  const auto over_q = action.with_field(FieldSpec::rationals());
  const auto over_p = action.with_field(FieldSpec::prime(p));
  for (int d = 0; d <= d_max; ++d) {
    r.dims_rational.push_back(invariant_space(over_q, d, Rationals{}).dim());
    r.dims_modular.push_back(invariant_space(over_p, d, PrimeField{p}).dim());
  }
  return r;
}

bool characteristic_threshold_check(int n_dim, const mpq_class& q, std::uint64_t p) {
  if (q < mpq_class(1, 2)) throw std::invalid_argument("hypothesis failed: Q >= 1/2");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  const mpq_class bound = 2 * q * (n_dim + 1) + n_dim;
  return mpq_class(mpz_class(std::to_string(p))) > bound;
}

template Subspace<Rationals> invariants_in_module(const ActionSpec&, const MonomialModule&, Axis, const Rationals&);
template Subspace<PrimeField> invariants_in_module(const ActionSpec&, const MonomialModule&, Axis, const PrimeField&);
template Subspace<Rationals> invariant_space(const ActionSpec&, int, const Rationals&);
template Subspace<PrimeField> invariant_space(const ActionSpec&, int, const PrimeField&);
template class InvariantRing<Rationals>;
template class InvariantRing<PrimeField>;

}  // namespace schurpol
