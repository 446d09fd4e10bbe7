#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schurpol/action.hpp"
#include "schurpol/monomial_module.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/subspace.hpp"

namespace schurpol {

/// Invariants of the action inside a module whose `g_axis` carries the V
/// coordinates: the torus-invariant monomials, cut down by the joint kernel of
/// every t^r coefficient of every root subgroup (or of g - 1 for the cyclic
/// generator). Computed one block at a time, a block being a fixed degree
/// vector along the other axis.
template <class F>
Subspace<F> invariants_in_module(const ActionSpec& action, const MonomialModule& module, Axis g_axis, const F& field);

/// K[V^m]^G_d inside Sym^d(V* (x) K^m), m = action.copies().
template <class F>
Subspace<F> invariant_space(const ActionSpec& action, int d, const F& field);

/// Per-degree cache of invariant and decomposable subspaces for one action.
template <class F>
class InvariantRing {
 public:
  InvariantRing(ActionSpec action, F field);

  const ActionSpec& action() const { return action_; }
  const F& field() const { return field_; }
  const MonomialModule& module(int d);
  const Subspace<F>& invariants(int d);
  /// Span of products of positive-degree invariants of complementary degree; d >= 2.
  const Subspace<F>& decomposables(int d);

 private:
  ActionSpec action_;
  F field_;
  std::map<int, MonomialModule> modules_;
  std::map<int, Subspace<F>> invariants_;
  std::map<int, Subspace<F>> decomposables_;
};

template <class F>
Subspace<F> decomposable_subspace(const ActionSpec& action, int d, const F& field) {
  InvariantRing<F> ring(action, field);
  return ring.decomposables(d);
}

struct BetaReport {
  ActionSpec action;
  int d_max = 0;
  std::vector<std::size_t> dims_invariant;      // index d = 0..d_max
  std::vector<std::size_t> dims_indecomposable; // index d = 0..d_max
  int beta_lower = 0;
  bool stabilized = false;  // heuristic: no indecomposables in the last ceil(d_max/3) degrees
};

BetaReport beta_scan(const ActionSpec& action, int d_max);

struct WeylDegree {
  int d = 0;
  std::size_t source_dim = 0;   // dim K[V^a]^G_d
  std::size_t closure_dim = 0;  // dim <K[V^a]^G_d>_{GL_b}
  std::size_t target_dim = 0;   // dim K[V^b]^G_d
  bool equal = false;
};

struct WeylReport {
  ActionSpec action;  // with a copies
  int a = 0, b = 0, d_max = 0;
  std::vector<WeylDegree> degrees;
  bool all_equal() const;
  std::optional<int> first_failure() const;
};

/// Degree-by-degree comparison of <K[V^a]^G_d>_{GL_b} with K[V^b]^G_d.
WeylReport weyl_polarization_check(const ActionSpec& action_a, int b, int d_max);

enum class GeneratorFamily { char_poly_traces, determinantal, pluecker };

GeneratorFamily parse_generator_family(std::string_view text);
std::string to_string(GeneratorFamily family);

struct GeneratorPolynomials {
  std::map<int, std::vector<IntPoly>> by_degree;
  bool exhaustive = true;  // false when the determinantal enumeration hit its budget
  long enumerated = 0;
};

/// Integer generator polynomials of the family up to degree d_max, in the
/// layout rows = V coordinates, cols = copies.
///  - char_poly_traces: coefficients of the characteristic polynomials of all
///    words (up to rotation) in X_1..X_m
///  - determinantal: multihomogeneous components of det(sum_i T_i (x) X_i) for
///    k x k matrices T_i with 0/1 entries, k <= d_max / n
///  - pluecker: the brackets [v_i v_j]
GeneratorPolynomials generator_polynomials(const ActionSpec& action, GeneratorFamily family, int d_max,
                                           long budget = 4096);

/// Degree-d part of the algebra generated by the family.
template <class F>
Subspace<F> generator_span(const ActionSpec& action, GeneratorFamily family, int d, const F& field,
                           long budget = 4096, bool* exhaustive = nullptr);

struct GeneratorReport {
  ActionSpec action;
  GeneratorFamily family;
  int d = 0;
  std::size_t span_dim = 0;
  std::size_t invariant_dim = 0;
  bool contained = false;  // span inside invariant_space
  bool equal = false;
  bool exhaustive = true;
};

GeneratorReport generator_span_check(const ActionSpec& action, GeneratorFamily family, int d, long budget = 4096);

struct GoodFiltrationTerm {
  Partition lambda;
  std::size_t invariant_dim = 0;  // dim S_lambda(V*)^G
  std::size_t schur_dim = 0;      // dim S_lambda(K^m)
};

struct GoodFiltrationReport {
  ActionSpec action;
  int d = 0;
  std::size_t lhs = 0;  // dim Sym^d(V* (x) K^m)^G
  std::size_t rhs = 0;
  std::vector<GoodFiltrationTerm> terms;
  bool holds() const { return lhs == rhs; }
};

/// dim Sym^d(V* (x) K^m)^G against sum over lambda of dim S_lambda(V*)^G dim S_lambda(K^m).
/// Needs a connected action and characteristic 0 or above dim V.
GoodFiltrationReport good_filtration_dim_check(const ActionSpec& action, int d);

struct HilbertReport {
  ActionSpec action;
  std::uint32_t p = 0;
  int d_max = 0;
  std::vector<std::size_t> dims_rational;
  std::vector<std::size_t> dims_modular;
  bool agree() const { return dims_rational == dims_modular; }
};

/// Per-degree invariant dimensions over Q and over F_p; needs p > dim V.
HilbertReport hilbert_compare(const ActionSpec& action, int d_max, std::uint32_t p);

/// p > 2Q(n+1) + n, exactly. Needs Q >= 1/2 and p prime.
bool characteristic_threshold_check(int n_dim, const mpq_class& q, std::uint64_t p);

}  // namespace schurpol
