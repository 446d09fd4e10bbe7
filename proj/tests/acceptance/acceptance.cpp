// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "cli/app.hpp"
#include "schurpol/invariants.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/polarization.hpp"
#include "schurpol/schur_module.hpp"
#include "schurpol/tableau.hpp"

using namespace schurpol;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Verdict()> run;
};

Partition P(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

const FieldSpec Q = FieldSpec::rationals();

std::string join_dims(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

Verdict slicing() {
  Verdict v;
  auto r = slice_suite(30, 6, 2, 4);
  v.require(r.holds(), "slice suite failures: " + std::to_string(r.failures));
  auto s = slice_decomposition(P({8, 8, 7, 4}), 4, 3);
  v.require(s.pieces == std::vector<Partition>{P({3, 3, 3, 3}), P({3, 3, 3, 1}), P({2, 2, 1})},
            "(8,8,7,4) n=4 k=3 pieces differ");
  v.detail = std::to_string(r.cases) + " cases" + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict dimension_coherence() {
  Verdict v;
  auto r = schur_dimension_suite(6, 4, {Q, FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5)});
  v.require(r.holds(), std::to_string(r.failures) + " mismatches");
  v.detail = std::to_string(r.cases) + " cases" + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict cauchy() {
  Verdict v;
  long cases = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int d = 0; d <= 6; ++d) {
        ++cases;
        auto r = cauchy_check(n, m, d);
        v.require(r.holds() && r.lhs == binomial(static_cast<unsigned long>(n * m + d - 1), d),
                  "n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d));
      }
    }
  }
  if (v.pass) v.detail = std::to_string(cases) + " (n,m,d) triples";
  return v;
}

Verdict counterexample() {
  Verdict v;
  auto f2 = polarization_equality_check(P({2}), 1, 2, FieldSpec::prime(2));
  v.require(!f2.equal && f2.closure_dim == 2 && f2.target_dim == 3 && f2.ambient_dim == 3,
            "F_2 closure " + std::to_string(f2.closure_dim) + " vs " + std::to_string(f2.target_dim));
  auto q = polarization_equality_check(P({2}), 1, 2, Q);
  auto f3 = polarization_equality_check(P({2}), 1, 2, FieldSpec::prime(3));
  v.require(q.equal && q.closure_dim == 3, "Q closure not full");
  v.require(f3.equal && f3.closure_dim == 3, "F_3 closure not full");
  if (v.pass) v.detail = "F_2: 2 of 3; Q and F_3: 3 of 3";
  return v;
}

Verdict polarization_grid_check() {
  Verdict v;
  auto r = polarization_grid(4, 2, 4, {Q, FieldSpec::prime(2), FieldSpec::prime(3), FieldSpec::prime(5),
                                       FieldSpec::prime(7)});
  v.require(r.expected_equal_failures == 0,
            std::to_string(r.expected_equal_failures) + " false cases with p > d" +
                (r.failure_samples.empty() ? "" : " e.g. " + r.failure_samples.front()));
  v.require(r.small_char_false >= 1, "no false case at p <= d");
  v.detail = std::to_string(r.cases) + " cases, " + std::to_string(r.small_char_false) + " false at p <= d" +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict lr_structure() {
  Verdict v;
  auto lr = lr_suite(5, 4);
  v.require(lr.holds(), std::to_string(lr.failures) + " LR failures");
  long projections = 0;
  for (const auto& field : {Q, FieldSpec::prime(2)}) {
    auto concat = concat_suite(5, 4, field);
    projections += concat.cases;
    v.require(concat.holds(), field.to_string() + ": " + std::to_string(concat.failures) + " concat failures" +
                                  (concat.failure_samples.empty() ? "" : " e.g. " + concat.failure_samples.front()));
  }
  v.detail = std::to_string(lr.pairs) + " LR pairs, " + std::to_string(projections) + " projections" +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict good_filtration() {
  Verdict v;
  for (const auto& field : {Q, FieldSpec::prime(5)}) {
    for (int m = 1; m <= 2; ++m) {
      for (int d = 0; d <= 3; ++d) {
        auto r = good_filtration_dim_check(ActionSpec::gl_conjugation(2, m, field), d);
        v.require(r.holds(), field.to_string() + " m=" + std::to_string(m) + " d=" + std::to_string(d) + ": " +
                                 std::to_string(r.lhs) + " vs " + std::to_string(r.rhs));
      }
    }
  }
  auto worked = good_filtration_dim_check(ActionSpec::gl_conjugation(2, 2, Q), 2);
  bool shape = worked.lhs == 6 && worked.terms.size() == 2 && worked.terms[0].invariant_dim == 2 &&
               worked.terms[0].schur_dim == 3 && worked.terms[1].invariant_dim == 0 && worked.terms[1].schur_dim == 1;
  v.require(shape, "worked case d=2, m=2 is not 6 = 2*3 + 0*1");
  if (v.pass) v.detail = "16 cases; d=2, m=2: 6 = 2*3 + 0*1";
  return v;
}

Verdict hilbert() {
  Verdict v;
  std::string summary;
  auto check = [&](const ActionSpec& a) {
    auto r = hilbert_compare(a, 5, 5);
    v.require(r.agree(), a.to_string() + " x" + std::to_string(a.copies()) + ": " + join_dims(r.dims_rational) +
                             " vs " + join_dims(r.dims_modular));
  };
  for (int m = 1; m <= 2; ++m) check(ActionSpec::gl_conjugation(2, m, Q));
  for (int m = 1; m <= 3; ++m) check(ActionSpec::sl2_vector(m, Q));
  if (v.pass) {
    v.detail = "conj:2 x2 dims " + join_dims(hilbert_compare(ActionSpec::gl_conjugation(2, 2, Q), 5, 5).dims_modular);
  }
  return v;
}

Verdict weyl() {
  Verdict v;
  auto pos = weyl_polarization_check(ActionSpec::sl2_vector(2, Q), 3, 4);
  v.require(pos.all_equal(), "sl2vec fails at degree " + std::to_string(pos.first_failure().value_or(-1)));
  auto neg = weyl_polarization_check(ActionSpec::cyclic_unipotent(2, 2, FieldSpec::prime(2)), 3, 6);
  v.require(!neg.all_equal(), "cyclic:2 over F_2 never fails through degree 6");
  if (v.pass) {
    const auto& d = neg.degrees[static_cast<std::size_t>(*neg.first_failure())];
    v.detail = "sl2vec equal through d=4; cyclic:2 first fails at d=" + std::to_string(d.d) + " (" +
               std::to_string(d.closure_dim) + " vs " + std::to_string(d.target_dim) + ")";
  }
  return v;
}

Verdict degree_bounds() {
  Verdict v;
  std::string betas;
  for (int m = 1; m <= 3; ++m) {
    auto r = beta_scan(ActionSpec::gl_conjugation(2, m, Q), 5);
    v.require(r.beta_lower <= 4, "m=" + std::to_string(m) + " beta_lower " + std::to_string(r.beta_lower));
    betas += (m > 1 ? "," : "") + std::to_string(r.beta_lower);
  }
  for (const auto& field : {Q, FieldSpec::prime(5)}) {
    for (int m = 1; m <= 3; ++m) {
      for (int d = 1; d <= 4; ++d) {
        auto r = generator_span_check(ActionSpec::gl_conjugation(2, m, field), GeneratorFamily::char_poly_traces, d);
        v.require(r.equal, field.to_string() + " m=" + std::to_string(m) + " d=" + std::to_string(d) + ": " +
                               std::to_string(r.span_dim) + " vs " + std::to_string(r.invariant_dim));
      }
    }
  }
  v.detail = "beta_lower for m=1..3: " + betas + (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

Verdict threshold() {
  Verdict v;
  v.require(characteristic_threshold_check(4, mpq_class(8), 89), "n=4 Q=8 p=89 should hold");
  v.require(!characteristic_threshold_check(4, mpq_class(8), 83), "n=4 Q=8 p=83 should fail");
  v.require(!characteristic_threshold_check(2, mpq_class(1, 2), 5), "p equal to the bound must fail");
  v.require(characteristic_threshold_check(2, mpq_class(1, 2), 7), "n=2 Q=1/2 p=7 should hold");
  bool rejected = false;
  try {
    characteristic_threshold_check(2, mpq_class(1, 4), 7);
  } catch (const std::invalid_argument&) {
    rejected = true;
  }
  v.require(rejected, "Q < 1/2 accepted");
  if (v.pass) v.detail = "89 > 84, 83 < 84, 5 = 5 excluded";
  return v;
}

Verdict determinism() {
  Verdict v;
  std::vector<std::filesystem::path> paths;
  for (const auto& entry : std::filesystem::directory_iterator(SCHURPOL_MANIFEST_DIR)) {
    if (entry.path().extension() == ".json") paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  v.require(!paths.empty(), "no shipped manifests");
  long jobs = 0;
  for (const auto& path : paths) {
    auto first = cli::execute({"manifest", path.string()});
    auto second = cli::execute({"manifest", path.string(), "--threads", "1"});
    const auto name = path.filename().string();
    v.require(first.exit_code == 0, name + " exit " + std::to_string(first.exit_code));
    v.require(first.exit_code == second.exit_code && first.document.dump() == second.document.dump(),
              name + " output differs between runs");
    if (first.document.contains("result")) jobs += first.document["result"].value("total", 0L);
  }
  v.detail = std::to_string(paths.size()) + " manifests, " + std::to_string(jobs) + " jobs" +
             (v.detail.empty() ? "" : "; " + v.detail);
  return v;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "slicing lemma suite", 10, slicing},
      {2, "dimension coherence", 60, dimension_coherence},
      {3, "Cauchy identity", 5, cauchy},
      {4, "Sym^2 counterexample", 1, counterexample},
      {5, "polarization equality grid", 120, polarization_grid_check},
      {6, "LR structure", 60, lr_structure},
      {7, "good-filtration dimension identity", 120, good_filtration},
      {8, "cross-characteristic Hilbert agreement", 120, hilbert},
      {9, "Weyl check positive and negative", 120, weyl},
      {10, "degree-bound consistency", 180, degree_bounds},
      {11, "threshold arithmetic", 1, threshold},
      {12, "manifest determinism", 600, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) {
      v.pass = false;
      v.detail += "; over time limit";
    }
    failed += !v.pass;
    std::printf("[%s] %2d %-40s %8.2fs (limit %gs)  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                c.limit_seconds, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
  return failed == 0 ? 0 : 1;
}
