#include "app.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "manifest.hpp"
#include "report_json.hpp"
#include "schurpol/invariants.hpp"
#include "schurpol/partition.hpp"
#include "schurpol/polarization.hpp"
#include "schurpol/schur_module.hpp"
#include "schurpol/tableau.hpp"

namespace schurpol::cli {

namespace {

/// Raw option values shared by all verbs; each verb registers the ones it reads.
struct Args {
  std::string field = "q";
  std::uint64_t seed = 1;
  bool pretty = false;
  bool timing = false;
  int threads = 0;

  std::string lambda, mu, nu;
  int a = 1, b = 2, n = 2, k = 2, m = 2, d = 2;
  int d_max = 4, n_max = 4, m_max = 4, a_max = 2, b_max = 4, k_min = 2, k_max = 4;
  int size_max = 3;
  int max_len = -1;
  int copies = 1;
  int trials = 4;
  long budget = 4096;
  std::string action = "conj:2";
  std::string family = "char_poly_traces";
  std::string fields = "q";
  std::string q = "1/2";
  std::uint64_t p = 5;
  bool list = false;
  std::string path;
};

struct Verdict {
  json result;
  bool identity_holds = true;
};

using Handler = std::function<Verdict(const Args&)>;

std::vector<FieldSpec> parse_fields(const std::string& text) {
  std::vector<FieldSpec> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(FieldSpec::parse(item));
  }
  if (out.empty()) throw std::invalid_argument("empty field list");
  return out;
}

json suite_json(long cases, long failures, const std::vector<std::string>& samples) {
  return {{"cases", cases}, {"failures", failures}, {"failure_samples", samples}, {"holds", failures == 0}};
}

ActionSpec parse_action(const Args& args, int copies) {
  return ActionSpec::parse(args.action, copies, FieldSpec::parse(args.field));
}

// partitions ---------------------------------------------------------------

Verdict partitions_conjugate(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  return {{{"lambda", to_json(lambda)}, {"conjugate", to_json(conjugate(lambda))}}};
}

Verdict partitions_concat(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto mu = Partition::parse(args.mu);
  return {{{"lambda", to_json(lambda)}, {"mu", to_json(mu)}, {"concat", to_json(lambda + mu)}}};
}

Verdict partitions_slice(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  json r = to_json(slice_decomposition(lambda, args.n, args.k));
  r["lambda"] = to_json(lambda);
  r["piece_bound"] = lambda.size() == 0 ? 0 : ceil_div(lambda.size(), args.n * (args.k - 1));
  return {r};
}

Verdict partitions_enumerate(const Args& args) {
  if (args.d < 0) throw std::invalid_argument("--d must be nonnegative");
  auto parts = enumerate_partitions(args.d, args.max_len < 0 ? args.d : args.max_len);
  json list = json::array();
  for (const auto& p : parts) list.push_back(to_json(p));
  return {{{"d", args.d}, {"count", parts.size()}, {"partitions", list}}};
}

Verdict partitions_dim(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  return {{{"lambda", to_json(lambda)}, {"m", args.m}, {"dim", to_json(schur_dimension(lambda, args.m))}}};
}

Verdict partitions_slice_suite(const Args& args) {
  auto r = slice_suite(args.d_max, args.n_max, args.k_min, args.k_max);
  return {suite_json(r.cases, r.failures, r.failure_samples), r.holds()};
}

// tableaux -----------------------------------------------------------------

Verdict tableaux_count(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto tableaux = ssyt_enumerate(lambda, args.m);
  auto hook = schur_dimension(lambda, args.m);
  json r = {{"lambda", to_json(lambda)},
            {"m", args.m},
            {"count", tableaux.size()},
            {"hook_content", to_json(hook)},
            {"agree", hook == tableaux.size()}};
  if (args.list) {
    json list = json::array();
    for (const auto& t : tableaux) list.push_back(to_json(t));
    r["tableaux"] = list;
  }
  return {r, hook == tableaux.size()};
}

Verdict tableaux_lr(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto mu = Partition::parse(args.mu);
  json r = {{"lambda", to_json(lambda)}, {"mu", to_json(mu)}};
  if (!args.nu.empty()) {
    auto nu = Partition::parse(args.nu);
    r["nu"] = to_json(nu);
    r["coefficient"] = lr_coefficient(nu, lambda, mu);
  } else {
    int max_len = args.max_len < 0 ? lambda.length() + mu.length() : args.max_len;
    r["max_len"] = max_len;
    r["product"] = to_json(lr_expand_product(lambda, mu, max_len));
  }
  return {r};
}

Verdict tableaux_cauchy(const Args& args) {
  auto r = cauchy_check(args.n, args.m, args.d);
  return {to_json(r), r.holds()};
}

Verdict tableaux_cauchy_suite(const Args& args) {
  long cases = 0, failures = 0;
  std::vector<std::string> samples;
  for (int n = 1; n <= args.n_max; ++n) {
    for (int m = 1; m <= args.m_max; ++m) {
      for (int d = 0; d <= args.d_max; ++d) {
        ++cases;
        auto r = cauchy_check(n, m, d);
        if (!r.holds()) {
          ++failures;
          if (samples.size() < 8) {
            samples.push_back("n=" + std::to_string(n) + " m=" + std::to_string(m) + " d=" + std::to_string(d));
          }
        }
      }
    }
  }
  return {suite_json(cases, failures, samples), failures == 0};
}

Verdict tableaux_lr_suite(const Args& args) {
  auto r = lr_suite(args.size_max, args.m_max);
  return {suite_json(r.pairs, r.failures, r.failure_samples), r.holds()};
}

// schur --------------------------------------------------------------------

Verdict schur_dim(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto spec = FieldSpec::parse(args.field);
  auto realized = with_field(spec, [&](const auto& f) { return realize_schur(lambda, args.m, f).space.dim(); });
  auto count = ssyt_enumerate(lambda, args.m).size();
  auto hook = schur_dimension(lambda, args.m);
  bool agree = hook == realized && hook == count;
  return {{{"lambda", to_json(lambda)},
           {"m", args.m},
           {"field", spec.to_string()},
           {"realized_dim", realized},
           {"ssyt_count", count},
           {"expected_dim", to_json(hook)},
           {"agree", agree}},
          agree};
}

Verdict schur_realize(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto spec = FieldSpec::parse(args.field);
  return with_field(spec, [&](const auto& f) {
    auto s = realize_schur(lambda, args.m, f);
    auto expected = schur_dimension(lambda, args.m);
    json leading = json::array();
    for (auto pivot : s.space.pivots()) leading.push_back(s.ambient.monomial(pivot));
    json r = {{"lambda", to_json(lambda)},
              {"m", args.m},
              {"field", spec.to_string()},
              {"ambient", s.ambient.describe()},
              {"ambient_dim", s.ambient.size()},
              {"dim", s.space.dim()},
              {"expected_dim", to_json(expected)},
              {"leading_monomials", leading}};
    return Verdict{r, expected == s.space.dim()};
  });
}

Verdict schur_embed_check(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto spec = FieldSpec::parse(args.field);
  return with_field(spec, [&](const auto& f) {
    auto source = realize_schur(lambda, args.a, f);
    auto image = embed(source, args.b);
    auto target = realize_schur(lambda, args.b, f);
    bool contained = target.space.contains(image.space);
    json r = {{"lambda", to_json(lambda)},       {"a", args.a},
              {"b", args.b},                     {"field", spec.to_string()},
              {"source_dim", source.space.dim()}, {"embedded_dim", image.space.dim()},
              {"target_dim", target.space.dim()}, {"contained", contained}};
    return Verdict{r, contained && image.space.dim() == source.space.dim()};
  });
}

Verdict schur_concat_check(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto mu = Partition::parse(args.mu);
  auto spec = FieldSpec::parse(args.field);
  return with_field(spec, [&](const auto& f) {
    auto proj = concat_projection(lambda, mu, args.m, f);
    auto top = lambda + mu;
    mpz_class expected_kernel = 0;
    for (const auto& [nu, c] : lr_expand_product(lambda, mu, args.m)) {
      if (nu != top) expected_kernel += mpz_class(static_cast<long>(c)) * schur_dimension(nu, args.m);
    }
    bool ok = proj.surjective() && expected_kernel == proj.kernel_dim;
    json r = {{"lambda", to_json(lambda)},
              {"mu", to_json(mu)},
              {"m", args.m},
              {"field", spec.to_string()},
              {"source_dim", proj.source_dim},
              {"rank", proj.rank},
              {"kernel_dim", proj.kernel_dim},
              {"expected_kernel_dim", to_json(expected_kernel)},
              {"target_dim", proj.target.dim()},
              {"surjective", proj.surjective()},
              {"holds", ok}};
    return Verdict{r, ok};
  });
}

Verdict schur_dim_suite(const Args& args) {
  auto r = schur_dimension_suite(args.d_max, args.m_max, parse_fields(args.fields));
  return {suite_json(r.cases, r.failures, r.failure_samples), r.holds()};
}

Verdict schur_concat_suite(const Args& args) {
  auto r = concat_suite(args.size_max, args.m_max, FieldSpec::parse(args.field));
  return {suite_json(r.cases, r.failures, r.failure_samples), r.holds()};
}

// polarize -----------------------------------------------------------------

Verdict polarize_closure(const Args& args) {
  auto lambda = Partition::parse(args.lambda);
  auto spec = FieldSpec::parse(args.field);
  if (args.b < args.a) throw std::invalid_argument("--b must be at least --a");
  return with_field(spec, [&](const auto& f) {
    auto source = embed(realize_schur(lambda, args.a, f), args.b);
    auto closure = gl_closure(source.space, source.ambient);
    auto probe = random_group_span(source.space, source.ambient, args.trials, args.seed);
    json r = {{"lambda", to_json(lambda)},
              {"a", args.a},
              {"b", args.b},
              {"field", spec.to_string()},
              {"ambient_dim", source.ambient.size()},
              {"source_dim", source.space.dim()},
              {"closure_dim", closure.dim()},
              {"random_trials", args.trials},
              {"random_span_dim", probe.dim()},
              {"random_span_contained", closure.contains(probe)}};
    return Verdict{r};
  });
}

Verdict polarize_check(const Args& args) {
  auto r = polarization_equality_check(Partition::parse(args.lambda), args.a, args.b, FieldSpec::parse(args.field));
  return {to_json(r), r.equal};
}

Verdict polarize_slicing_check(const Args& args) {
  auto r = slicing_polarization_check(Partition::parse(args.lambda), args.n, args.k, args.m,
                                      FieldSpec::parse(args.field));
  return {to_json(r), r.equal()};
}

Verdict polarize_grid(const Args& args) {
  auto r = polarization_grid(args.d_max, args.a_max, args.b_max, parse_fields(args.fields));
  json out = {{"cases", r.cases},
              {"expected_equal_failures", r.expected_equal_failures},
              {"small_char_false", r.small_char_false},
              {"failure_samples", r.failure_samples},
              {"small_char_false_samples", r.small_char_false_samples},
              {"holds", r.expected_equal_failures == 0}};
  return {out, r.expected_equal_failures == 0};
}

// invariants ---------------------------------------------------------------

Verdict invariants_space(const Args& args) {
  auto action = parse_action(args, args.copies);
  return with_field(action.field(), [&](const auto& f) {
    InvariantRing<std::decay_t<decltype(f)>> ring(action, f);
    json dims = json::array();
    json ambient = json::array();
    for (int d = 0; d <= args.d_max; ++d) {
      dims.push_back(ring.invariants(d).dim());
      ambient.push_back(ring.module(d).size());
    }
    json r = {{"action", action.to_string()}, {"copies", action.copies()}, {"field", action.field().to_string()},
              {"d_max", args.d_max},          {"dims", dims},              {"ambient_dims", ambient}};
    return Verdict{r};
  });
}

Verdict invariants_beta(const Args& args) {
  return {to_json(beta_scan(parse_action(args, args.copies), args.d_max))};
}

Verdict invariants_weyl(const Args& args) {
  auto r = weyl_polarization_check(parse_action(args, args.a), args.b, args.d_max);
  return {to_json(r), r.all_equal()};
}

Verdict invariants_gens(const Args& args) {
  auto action = parse_action(args, args.copies);
  auto family = parse_generator_family(args.family);
  json degrees = json::array();
  bool all_equal = true;
  bool exhaustive = true;
  for (int d = 1; d <= args.d_max; ++d) {
    auto r = generator_span_check(action, family, d, args.budget);
    degrees.push_back({{"d", d}, {"span_dim", r.span_dim}, {"invariant_dim", r.invariant_dim},
                       {"contained", r.contained}, {"equal", r.equal}});
    all_equal = all_equal && r.equal;
    exhaustive = exhaustive && r.exhaustive;
  }
  json r = {{"action", action.to_string()}, {"copies", action.copies()}, {"field", action.field().to_string()},
            {"family", to_string(family)},  {"d_max", args.d_max},       {"degrees", degrees},
            {"exhaustive", exhaustive},     {"all_equal", all_equal}};
  return {r, all_equal};
}

Verdict invariants_gfdim(const Args& args) {
  auto action = parse_action(args, args.copies);
  json degrees = json::array();
  bool holds = true;
  for (int d = 0; d <= args.d_max; ++d) {
    auto r = good_filtration_dim_check(action, d);
    degrees.push_back(to_json(r));
    holds = holds && r.holds();
  }
  json r = {{"action", action.to_string()}, {"copies", action.copies()}, {"field", action.field().to_string()},
            {"d_max", args.d_max},          {"degrees", degrees},        {"holds", holds}};
  return {r, holds};
}

Verdict invariants_hilbert(const Args& args) {
  if (args.p > 0xffffffffULL) throw std::invalid_argument("--p too large");
  auto r = hilbert_compare(parse_action(args, args.copies), args.d_max, static_cast<std::uint32_t>(args.p));
  return {to_json(r), r.agree()};
}

Verdict invariants_threshold(const Args& args) {
  mpq_class q(args.q);
  q.canonicalize();
  bool holds = characteristic_threshold_check(args.n, q, args.p);
  mpq_class bound = 2 * q * (args.n + 1) + args.n;
  return {{{"n", args.n}, {"q", q.get_str()}, {"p", args.p}, {"bound", bound.get_str()}, {"p_exceeds_bound", holds}}};
}

// manifest -----------------------------------------------------------------

Verdict manifest_run(const Args& args) {
  std::ifstream in(args.path);
  if (!in) throw std::invalid_argument("cannot open manifest '" + args.path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("manifest parse error: ") + e.what());
  }
  auto summary = run_manifest(parse_manifest(doc), resolve_threads(args.threads));
  return {summary.result, summary.all_passed};
}

struct VerbEntry {
  CLI::App* app;
  std::string command;
  Handler handler;
};

}  // namespace

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("SCHURPOL_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

Outcome execute(const std::vector<std::string>& argv) {
  Args args;
  CLI::App app{"Exact computations with Schur modules, polarization and invariant rings", "schurpol"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", args.field, "Base field: q or fp:<p>");
  app.add_option("--seed", args.seed, "Seed for randomized probes");
  app.add_flag("--pretty", args.pretty, "Human-readable output");
  app.add_option("--threads", args.threads, "Worker threads (default: SCHURPOL_THREADS or all cores)");
  app.add_flag("--timing", args.timing, "Include elapsed_ms in the output");

  std::vector<VerbEntry> verbs;
  auto group = [&](const std::string& name, const std::string& desc) {
    auto* g = app.add_subcommand(name, desc);
    g->require_subcommand(1);
    return g;
  };
  auto verb = [&](CLI::App* parent, const std::string& name, const std::string& desc, Handler h) {
    auto* v = parent->add_subcommand(name, desc);
    verbs.push_back({v, parent->get_name() + " " + name, std::move(h)});
    return v;
  };

  auto* parts = group("partitions", "Partition combinatorics");
  verb(parts, "conjugate", "Conjugate partition", partitions_conjugate)
      ->add_option("--lambda", args.lambda)->required();
  {
    auto* v = verb(parts, "concat", "Horizontal concatenation", partitions_concat);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--mu", args.mu)->required();
  }
  {
    auto* v = verb(parts, "slice", "Column-prefix slicing", partitions_slice);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--n", args.n)->required();
    v->add_option("--k", args.k)->required();
  }
  {
    auto* v = verb(parts, "enumerate", "Partitions of d", partitions_enumerate);
    v->add_option("--d", args.d)->required();
    v->add_option("--max-len", args.max_len);
  }
  {
    auto* v = verb(parts, "dim", "Hook-content dimension", partitions_dim);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--m", args.m)->required();
  }
  {
    auto* v = verb(parts, "slice-suite", "Slicing properties over a range", partitions_slice_suite);
    v->add_option("--dmax", args.d_max)->required();
    v->add_option("--nmax", args.n_max)->required();
    v->add_option("--kmin", args.k_min);
    v->add_option("--kmax", args.k_max)->required();
  }

  auto* tabs = group("tableaux", "Tableaux and Littlewood-Richardson coefficients");
  {
    auto* v = verb(tabs, "count", "Semistandard tableaux", tableaux_count);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--m", args.m)->required();
    v->add_flag("--list", args.list, "Include the tableaux");
  }
  {
    auto* v = verb(tabs, "lr", "Littlewood-Richardson coefficient or product", tableaux_lr);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--mu", args.mu)->required();
    v->add_option("--nu", args.nu);
    v->add_option("--max-len", args.max_len);
  }
  {
    auto* v = verb(tabs, "cauchy", "Cauchy identity in one degree", tableaux_cauchy);
    v->add_option("--n", args.n)->required();
    v->add_option("--m", args.m)->required();
    v->add_option("--d", args.d)->required();
  }
  {
    auto* v = verb(tabs, "cauchy-suite", "Cauchy identity over a range", tableaux_cauchy_suite);
    v->add_option("--nmax", args.n_max)->required();
    v->add_option("--mmax", args.m_max)->required();
    v->add_option("--dmax", args.d_max)->required();
  }
  {
    auto* v = verb(tabs, "lr-suite", "Littlewood-Richardson structure over a range", tableaux_lr_suite);
    v->add_option("--size", args.size_max)->required();
    v->add_option("--mmax", args.m_max)->required();
  }

  auto* schur = group("schur", "Schur modules");
  {
    auto* v = verb(schur, "dim", "Realized, tableau and hook-content dimensions", schur_dim);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--m", args.m)->required();
  }
  {
    auto* v = verb(schur, "realize", "Bideterminant realization", schur_realize);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--m", args.m)->required();
  }
  {
    auto* v = verb(schur, "embed-check", "Inclusion S(K^a) into S(K^b)", schur_embed_check);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--a", args.a)->required();
    v->add_option("--b", args.b)->required();
  }
  {
    auto* v = verb(schur, "concat-check", "Multiplication onto S(lambda+mu)", schur_concat_check);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--mu", args.mu)->required();
    v->add_option("--m", args.m)->required();
  }
  {
    auto* v = verb(schur, "dim-suite", "Dimension coherence over a range", schur_dim_suite);
    v->add_option("--dmax", args.d_max)->required();
    v->add_option("--mmax", args.m_max)->required();
    v->add_option("--fields", args.fields, "Comma-separated fields");
  }
  {
    auto* v = verb(schur, "concat-suite", "concat-check over a range", schur_concat_suite);
    v->add_option("--size", args.size_max)->required();
    v->add_option("--mmax", args.m_max)->required();
  }

  auto* pol = group("polarize", "GL-polarization spans");
  {
    auto* v = verb(pol, "closure", "GL_b-span of S(K^a) with a random probe", polarize_closure);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--a", args.a)->required();
    v->add_option("--b", args.b)->required();
    v->add_option("--trials", args.trials);
  }
  {
    auto* v = verb(pol, "check", "Polarization equality", polarize_check);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--a", args.a)->required();
    v->add_option("--b", args.b)->required();
  }
  {
    auto* v = verb(pol, "slicing-check", "Polarization from n ceil(d/(n(k-1))) copies", polarize_slicing_check);
    v->add_option("--lambda", args.lambda)->required();
    v->add_option("--n", args.n)->required();
    v->add_option("--k", args.k)->required();
    v->add_option("--m", args.m)->required();
  }
  {
    auto* v = verb(pol, "grid", "Polarization equality over a grid", polarize_grid);
    v->add_option("--dmax", args.d_max)->required();
    v->add_option("--amax", args.a_max)->required();
    v->add_option("--bmax", args.b_max)->required();
    v->add_option("--fields", args.fields, "Comma-separated fields");
  }

  auto* inv = group("invariants", "Graded invariant rings");
  auto action_opts = [&](CLI::App* v, bool with_copies) {
    v->add_option("--action", args.action, "conj:<n>, slsl:<n>, sl2vec or cyclic:<p>")->required();
    if (with_copies) v->add_option("--copies", args.copies);
  };
  {
    auto* v = verb(inv, "space", "Invariant dimensions per degree", invariants_space);
    action_opts(v, true);
    v->add_option("--dmax", args.d_max)->required();
  }
  {
    auto* v = verb(inv, "beta", "Indecomposables per degree", invariants_beta);
    action_opts(v, true);
    v->add_option("--dmax", args.d_max)->required();
  }
  {
    auto* v = verb(inv, "weyl-check", "Polarization of invariants from a to b copies", invariants_weyl);
    action_opts(v, false);
    v->add_option("--a", args.a)->required();
    v->add_option("--b", args.b)->required();
    v->add_option("--dmax", args.d_max)->required();
  }
  {
    auto* v = verb(inv, "gens", "Span of a generator family against the invariants", invariants_gens);
    action_opts(v, true);
    v->add_option("--family", args.family, "char_poly_traces, determinantal or pluecker")->required();
    v->add_option("--dmax", args.d_max)->required();
    v->add_option("--budget", args.budget);
  }
  {
    auto* v = verb(inv, "gfdim", "Good-filtration dimension identity", invariants_gfdim);
    action_opts(v, true);
    v->add_option("--dmax", args.d_max)->required();
  }
  {
    auto* v = verb(inv, "hilbert", "Invariant dimensions over Q and F_p", invariants_hilbert);
    action_opts(v, true);
    v->add_option("--dmax", args.d_max)->required();
    v->add_option("--p", args.p)->required();
  }
  {
    auto* v = verb(inv, "threshold", "Whether p > 2Q(n+1) + n", invariants_threshold);
    v->add_option("--n", args.n)->required();
    v->add_option("--q", args.q)->required();
    v->add_option("--p", args.p)->required();
  }

  auto* man = app.add_subcommand("manifest", "Run an experiment manifest");
  man->add_option("path", args.path, "Manifest file")->required();
  verbs.push_back({man, "manifest", manifest_run});

  Outcome out;
  try {
    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out.help = app.help();
    return out;
  } catch (const CLI::CallForAllHelp&) {
    out.help = app.help("", CLI::AppFormatMode::All);
    return out;
  } catch (const CLI::ParseError& e) {
    out.exit_code = 2;
    const CLI::App* scope = &app;
    for (const auto& entry : verbs) {
      if (entry.app->parsed()) scope = entry.app;
    }
    out.message = std::string(e.what()) + "\n" + scope->help();
    return out;
  }

  out.pretty = args.pretty;
  const VerbEntry* chosen = nullptr;
  for (const auto& entry : verbs) {
    if (entry.app->parsed()) chosen = &entry;
  }
  if (chosen == nullptr) {
    out.exit_code = 2;
    out.message = app.help();
    return out;
  }

  json params = json::object();
  for (const auto* opt : chosen->app->get_options()) {
    if (opt->get_name() == "--help" || opt->count() == 0) continue;
    std::string key = opt->get_lnames().empty() ? opt->get_name() : opt->get_lnames().front();
    if (opt->get_type_size() == 0) {
      params[key] = true;
    } else {
      params[key] = opt->as<std::string>();
    }
  }
  params["field"] = args.field;
  params["seed"] = args.seed;

  const auto start = std::chrono::steady_clock::now();
  try {
    FieldSpec::parse(args.field);
    Verdict v = chosen->handler(args);
    out.exit_code = v.identity_holds ? 0 : 1;
    out.document = {{"command", chosen->command}, {"params", params}, {"result", std::move(v.result)}};
  } catch (const std::logic_error& e) {
    out.exit_code = 2;
    out.message = std::string("error: ") + e.what();
    return out;
  }
  if (args.timing) {
    auto elapsed = std::chrono::steady_clock::now() - start;
    out.document["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
  }
  return out;
}

namespace {

void pretty_into(std::ostream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar_array = [](const json& a) {
    for (const auto& e : a) {
      if (e.is_object()) return false;
      if (e.is_array() && !std::all_of(e.begin(), e.end(), [](const json& x) { return x.is_primitive(); })) {
        return false;
      }
    }
    return true;
  };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !scalar_array(value))) {
        os << pad << key << ":\n";
        pretty_into(os, value, indent + 1);
      } else {
        os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) {
      os << pad << "[" << i++ << "]\n";
      pretty_into(os, value, indent + 1);
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_pretty(const json& document) {
  std::ostringstream os;
  pretty_into(os, document, 0);
  return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Outcome o = execute(args);
  if (!o.help.empty()) {
    out << o.help;
    return 0;
  }
  if (!o.message.empty()) err << o.message << "\n";
  if (!o.document.is_null()) {
    out << (o.pretty ? render_pretty(o.document) : o.document.dump()) << "\n";
  }
  return o.exit_code;
}

}  // namespace schurpol::cli
