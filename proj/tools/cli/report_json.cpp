#include "report_json.hpp"

namespace schurpol::cli {

json to_json(const Partition& p) { return p.parts(); }

json to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

json to_json(const Tableau& t) { return t.rows; }

json to_json(const SliceDecomposition& s) {
  json pieces = json::array();
  json sizes = json::array();
  for (const auto& p : s.pieces) {
    pieces.push_back(to_json(p));
    sizes.push_back(p.size());
  }
  return {{"pieces", pieces}, {"piece_sizes", sizes}, {"n", s.n}, {"k", s.k}};
}

json to_json(const CauchyReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"lambda", to_json(t.shape)}, {"dim_n", to_json(t.dim_n)}, {"dim_m", to_json(t.dim_m)}});
  }
  return {{"n", r.n}, {"m", r.m}, {"d", r.d}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)},
          {"terms", terms}, {"holds", r.holds()}};
}

json to_json(const PartitionMultiset& s) {
  json out = json::array();
  for (const auto& [nu, c] : s) out.push_back({{"nu", to_json(nu)}, {"multiplicity", c}});
  return out;
}

json to_json(const PolarizationReport& r) {
  return {{"lambda", to_json(r.lambda)},  {"a", r.a},
          {"b", r.b},                      {"field", r.field.to_string()},
          {"base_field_note", "GL-span over the algebraic closure of " + r.field.to_string()},
          {"source_dim", r.source_dim},    {"closure_dim", r.closure_dim},
          {"target_dim", r.target_dim},    {"ambient_dim", r.ambient_dim},
          {"contained", r.contained},      {"equal", r.equal}};
}

json to_json(const SlicingReport& r) {
  json pieces = json::array();
  for (const auto& p : r.pieces) pieces.push_back(to_json(p));
  return {{"lambda", to_json(r.lambda)}, {"n", r.n},           {"k", r.k},
          {"m", r.m},                    {"a", r.a},           {"pieces", pieces},
          {"piece_dims", r.piece_dims},  {"check", to_json(r.check)}, {"equal", r.equal()}};
}

json to_json(const BetaReport& r) {
  return {{"action", r.action.to_string()},
          {"copies", r.action.copies()},
          {"field", r.action.field().to_string()},
          {"d_max", r.d_max},
          {"dims_invariant", r.dims_invariant},
          {"dims_indecomposable", r.dims_indecomposable},
          {"beta_lower", r.beta_lower},
          {"stabilized", r.stabilized},
          {"stabilized_is_heuristic", true}};
}

json to_json(const WeylReport& r) {
  json degrees = json::array();
  for (const auto& d : r.degrees) {
    degrees.push_back({{"d", d.d},
                       {"source_dim", d.source_dim},
                       {"closure_dim", d.closure_dim},
                       {"target_dim", d.target_dim},
                       {"equal", d.equal}});
  }
  json out = {{"action", r.action.to_string()}, {"field", r.action.field().to_string()},
              {"a", r.a},                       {"b", r.b},
              {"d_max", r.d_max},               {"degrees", degrees},
              {"all_equal", r.all_equal()}};
  if (auto f = r.first_failure()) {
    out["first_failure"] = *f;
  } else {
    out["first_failure"] = nullptr;
  }
  return out;
}

json to_json(const GeneratorReport& r) {
  return {{"action", r.action.to_string()},   {"copies", r.action.copies()},
          {"field", r.action.field().to_string()}, {"family", to_string(r.family)},
          {"d", r.d},                          {"span_dim", r.span_dim},
          {"invariant_dim", r.invariant_dim},  {"contained", r.contained},
          {"equal", r.equal},                  {"exhaustive", r.exhaustive}};
}

json to_json(const GoodFiltrationReport& r) {
  json terms = json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"lambda", to_json(t.lambda)}, {"invariant_dim", t.invariant_dim}, {"schur_dim", t.schur_dim}});
  }
  return {{"action", r.action.to_string()}, {"copies", r.action.copies()}, {"field", r.action.field().to_string()},
          {"d", r.d}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"terms", terms}, {"holds", r.holds()}};
}

json to_json(const HilbertReport& r) {
  return {{"action", r.action.to_string()}, {"copies", r.action.copies()}, {"p", r.p},
          {"d_max", r.d_max}, {"dims_rational", r.dims_rational}, {"dims_modular", r.dims_modular},
          {"agree", r.agree()}};
}

}  // namespace schurpol::cli
