#pragma once

#include <json.hpp>

#include "schurpol/invariants.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/polarization.hpp"
#include "schurpol/schur_module.hpp"
#include "schurpol/subspace.hpp"
#include "schurpol/tableau.hpp"

namespace schurpol::cli {

using nlohmann::json;

json to_json(const Partition& p);
json to_json(const mpz_class& z);
json to_json(const Tableau& t);
json to_json(const SliceDecomposition& s);
json to_json(const CauchyReport& r);
json to_json(const PartitionMultiset& s);
json to_json(const PolarizationReport& r);
json to_json(const SlicingReport& r);
json to_json(const BetaReport& r);
json to_json(const WeylReport& r);
json to_json(const GeneratorReport& r);
json to_json(const GoodFiltrationReport& r);
json to_json(const HilbertReport& r);

template <class F>
json subspace_json(const Subspace<F>& s) {
  return {{"ambient_dim", s.ambient_dim()}, {"dim", s.dim()}, {"field", s.field().spec().to_string()}};
}

}  // namespace schurpol::cli
