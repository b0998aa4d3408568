#include "cli.hpp"

#include "spanlab/copyfamily.hpp"
#include "spanlab/density.hpp"
#include "spanlab/fragmentation.hpp"
#include "spanlab/io.hpp"
#include "spanlab/parallel.hpp"
#include "spanlab/random.hpp"
#include "spanlab/spreadness.hpp"
#include "spanlab/structures.hpp"
#include "spanlab/threshold.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace spanlab::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::uint64_t kDefaultBudget = 100'000'000;

std::uint64_t env_budget() {
  if (const char* v = std::getenv("SPANLAB_BUDGET")) {
    try {
      std::size_t pos = 0;
      const auto b = std::stoull(v, &pos);
      if (pos == std::string(v).size() && b > 0) return b;
    } catch (const std::exception&) {
    }
    throw UsageError("SPANLAB_BUDGET must be a positive integer, got '" + std::string(v) + "'");
  }
  return kDefaultBudget;
}

// Accepts decimals and fractions such as "1/3".
double parse_real(const std::string& text, const std::string& flag) {
  try {
    const auto slash = text.find('/');
    std::size_t pos = 0;
    if (slash == std::string::npos) {
      const double x = std::stod(text, &pos);
      if (pos == text.size()) return x;
    } else {
      const auto num = text.substr(0, slash);
      const auto den = text.substr(slash + 1);
      std::size_t p1 = 0, p2 = 0;
      const double a = std::stod(num, &p1);
      const double b = std::stod(den, &p2);
      if (p1 == num.size() && p2 == den.size() && b != 0) return a / b;
    }
  } catch (const std::exception&) {
  }
  throw UsageError(flag + ": expected a number or fraction, got '" + text + "'");
}

std::string fmt(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

struct SpecArgs {
  std::string kind;
  int r = 4;
  int s = 2;
  int n = 0;

  void add(CLI::App* app, bool kind_required = true) {
    auto* k = app->add_option("--kind", kind, "structure kind: c4e or krs")->check(CLI::IsMember({"c4e", "krs"}));
    if (kind_required) k->required();
    app->add_option("--r", r, "clique size (krs)");
    app->add_option("--s", s, "overlap (krs)");
    app->add_option("--n", n, "vertex count")->required();
  }

  StructureSpec spec() const {
    StructureSpec sp = kind == "c4e" ? StructureSpec::c4_cycle(n) : StructureSpec::krs_cycle(r, s, n);
    sp.validate();
    return sp;
  }
};

struct Common {
  std::optional<std::uint64_t> seed;
  int workers = default_workers();
  std::optional<std::uint64_t> budget;
  std::string out;

  std::uint64_t need_seed(const std::string& cmd) const {
    if (!seed) throw UsageError(cmd + " is randomized: pass --seed");
    return *seed;
  }
  std::uint64_t budget_value() const { return budget ? *budget : env_budget(); }
};

void add_seed(CLI::App* app, Common& c) { app->add_option("--seed", c.seed, "RNG seed (required for randomized runs)"); }
void add_workers(CLI::App* app, Common& c) {
  app->add_option("--workers", c.workers, "worker threads")->check(CLI::PositiveNumber);
}
void add_budget(CLI::App* app, Common& c) {
  app->add_option("--budget", c.budget, "search/enumeration budget (default: $SPANLAB_BUDGET or 1e8)")
      ->check(CLI::PositiveNumber);
}

// Writes text to path, or to out when path is empty or "-".
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

RunHeader base_header(const std::string& command, const StructureSpec& spec) {
  return {{"tool", "spanlab 0.1.0"}, {"command", command}, {"structure", spec.name()}};
}

// ---------------------------------------------------------------- gen
int cmd_gen(const SpecArgs& sa, const std::string& ordering, const Common& c, std::ostream& out) {
  const auto spec = sa.spec();
  LabeledGraph g;
  if (ordering.empty()) {
    g = build_structure(spec);
  } else {
    Ordering o;
    std::stringstream ss(ordering);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        o.perm.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw UsageError("--ordering: '" + tok + "' is not an integer");
      }
    }
    g = structure_from_ordering(spec, o);
  }
  emit(c.out, graph_to_json(g) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------- enumerate
int cmd_enumerate(const SpecArgs& sa, bool check, const std::string& dump, const Common& c, std::ostream& out,
                  std::ostream& err) {
  const auto spec = sa.spec();
  EnumerationBudget budget;
  budget.max_copies = c.budget_value();
  budget.workers = c.workers;
  const auto family = enumerate_copies(spec, budget);
  out << family.size() << '\n';
  if (!dump.empty()) {
    std::ostringstream s;
    write_family(s, family);
    emit(dump, s.str(), out);
  }
  if (check) {
    BigInt formula;
    try {
      formula = count_copies_formula(spec);
    } catch (const std::domain_error& e) {
      err << "no closed form: " << e.what() << '\n';
      return kOk;
    }
    if (formula != family.size()) {
      err << "closed form gives " << formula << " copies, enumeration found " << family.size()
          << " (stabilizer: exact " << ordering_stabilizer_size(spec) << ", closed form " << closed_form_stabilizer(spec)
          << ")\n";
      return kVerificationFailure;
    }
  }
  return kOk;
}

// ---------------------------------------------------------------- spread
struct SpreadArgs {
  std::string q, c, alpha = "1/3", delta = "1/15", exponent;
  std::size_t cap = 6;
  std::size_t samples = 100'000;
  bool minimal = false;
};

int cmd_spread(const SpecArgs& sa, const SpreadArgs& a, const Common& c, std::ostream& out) {
  const auto spec = sa.spec();
  const double alpha = parse_real(a.alpha, "--alpha");
  const double delta = parse_real(a.delta, "--delta");
  EnumerationBudget eb;
  eb.max_copies = c.budget_value();
  eb.workers = c.workers;
  const auto family = enumerate_copies(spec, eb);
  SpreadOptions opts;
  opts.exhaustive_cap = a.cap;
  opts.samples = a.samples;
  opts.workers = c.workers;
  if (family.k0() > a.cap && a.samples > 0) opts.seed = c.need_seed("spread (sampling beyond --cap)");
  const auto survey = survey_subsets(family, opts);

  Json j;
  auto header = base_header("spread", spec);
  header.push_back({"alpha", fmt(alpha)});
  header.push_back({"delta", fmt(delta)});
  header.push_back({"cap", std::to_string(a.cap)});
  header.push_back({"samples", std::to_string(a.samples)});
  if (c.seed) header.push_back({"seed", std::to_string(*c.seed)});
  for (const auto& [k, v] : header) j["config"][k] = v;
  j["copies"] = family.size();
  j["k0"] = family.k0();

  int code = kOk;
  if (a.minimal) {
    if (a.exponent.empty()) throw UsageError("--minimal needs --exponent");
    const double e = parse_real(a.exponent, "--exponent");
    const auto mc = minimal_superspread_constant(family, survey, alpha, delta, e);
    j["minimal_constant"] = Json::parse(minimal_constant_json(mc, alpha, delta, e));
  }
  if (!a.q.empty() || !a.c.empty()) {
    double q = 0;
    if (!a.q.empty()) {
      q = parse_real(a.q, "--q");
    } else {
      if (a.exponent.empty()) throw UsageError("--c needs --exponent");
      q = parse_real(a.c, "--c") * std::pow(static_cast<double>(spec.n), parse_real(a.exponent, "--exponent"));
    }
    const auto report = verify_superspread(family, survey, q, alpha, delta);
    j["report"] = Json::parse(spread_report_json(report));
    if (!report.pass) code = kVerificationFailure;
  } else if (!a.minimal) {
    throw UsageError("spread needs --q, --c with --exponent, or --minimal");
  }
  emit(c.out, j.dump(2) + "\n", out);
  return code;
}

// ---------------------------------------------------------------- density
struct DensityArgs {
  std::string claim;
  std::size_t cap = 4;
  std::size_t samples = 0;
};

int cmd_density(SpecArgs sa, const DensityArgs& a, const Common& c, std::ostream& out) {
  if (sa.kind.empty()) {
    if (a.claim.rfind("c4-", 0) == 0) {
      sa.kind = "c4e";
    } else if (a.claim == "all") {
      throw UsageError("--claim all needs --kind");
    } else {
      sa.kind = "krs";
    }
  }
  const auto spec = sa.spec();
  DensityOptions opts;
  opts.exhaustive_edge_cap = a.cap;
  opts.samples = a.samples;
  opts.max_subsets = c.budget_value();
  if (a.samples > 0) opts.seed = c.need_seed("density with --samples");
  const auto verdict = verify_density_lemma(a.claim, spec, opts);
  emit(c.out, density_verdict_json(verdict) + "\n", out);
  return verdict.pass() ? kOk : kVerificationFailure;
}

// ---------------------------------------------------------------- fragment
struct FragmentArgs {
  std::string report = "bad-pairs";
  std::size_t w = 0;
  std::size_t k = 0;
  std::string C = "4";
  std::size_t trials = 1000;
  std::optional<std::size_t> w_prime;
};

int cmd_fragment(const SpecArgs& sa, const FragmentArgs& a, const Common& c, std::ostream& out) {
  const auto spec = sa.spec();
  EnumerationBudget eb;
  eb.max_copies = c.budget_value();
  eb.workers = c.workers;
  const auto family = enumerate_copies(spec, eb);
  const auto& H = family.copies();
  const double C = parse_real(a.C, "--C");
  Json j;
  auto header = base_header("fragment", spec);
  header.push_back({"report", a.report});
  for (const auto& [k, v] : header) j["config"][k] = v;
  const auto canonical = build_structure(spec).edge_set();

  if (a.report == "profile") {
    j["profile"] = intersection_profile(H, canonical);
  } else if (a.report == "bad-pairs") {
    const auto seed = c.need_seed("fragment --report bad-pairs");
    if (a.w > family.ground_m()) throw UsageError("--w exceeds |M| = " + std::to_string(family.ground_m()));
    j["config"]["w"] = a.w;
    j["config"]["k"] = a.k;
    j["config"]["C"] = fmt(C);
    j["config"]["trials"] = a.trials;
    j["config"]["seed"] = seed;
    const auto est = estimate_bad_pair_expectation(H, a.w, a.k, a.trials, seed, C, c.workers);
    j["mean"] = est.mean;
    j["stderr"] = est.std_error;
    j["bound_rhs"] = est.rhs;
    j["H_size"] = H.size();
  } else if (a.report == "claim") {
    const auto seed = c.need_seed("fragment --report claim");
    if (!a.w_prime) throw UsageError("--report claim needs --w-prime");
    j["config"]["w_prime"] = *a.w_prime;
    j["config"]["k"] = a.k;
    j["config"]["C"] = fmt(C);
    j["config"]["trials"] = a.trials;
    j["config"]["seed"] = seed;
    const auto est = check_claim_bound(H, canonical, *a.w_prime, a.k, C, a.trials, seed);
    j["mean"] = est.mean;
    j["stderr"] = est.std_error;
    j["claim_rhs"] = est.rhs;
  } else if (a.report == "step") {
    const auto seed = c.need_seed("fragment --report step");
    j["config"]["w"] = a.w;
    j["config"]["k"] = a.k;
    j["config"]["seed"] = seed;
    const auto X = nested_exposure(family.ground_m(), a.w, seed, 0);
    const auto next = fragment_step(initial_state(family), X, a.k, c.workers);
    j["good"] = next.good_count;
    j["bad"] = H.size() - next.good_count;
    std::map<std::size_t, std::size_t> sizes;
    for (const auto& f : next.fragments) ++sizes[f.edges.size()];
    Json hist = Json::array();
    for (const auto& [size, count] : sizes) hist.push_back({{"size", size}, {"count", count}});
    j["fragment_sizes"] = hist;
  } else {
    throw UsageError("--report must be one of profile, bad-pairs, claim, step");
  }
  emit(c.out, j.dump(2) + "\n", out);
  return kOk;
}

// ---------------------------------------------------------------- pipeline
struct PipelineArgs {
  std::string K = "8";
  std::string alpha = "1/3";
  std::string q;
  std::string c;
  std::string exponent;
  std::size_t runs = 1;
  std::optional<int> rounds;
  std::string p;
  bool pad = false;
};

int cmd_pipeline(const SpecArgs& sa, const PipelineArgs& a, const Common& c, std::ostream& out, std::ostream& err) {
  const auto spec = sa.spec();
  const auto seed = c.need_seed("pipeline");
  EnumerationBudget eb;
  eb.max_copies = c.budget_value();
  eb.workers = c.workers;
  const auto family = enumerate_copies(spec, eb);
  PipelineConfig cfg;
  cfg.K = parse_real(a.K, "--K");
  cfg.alpha = parse_real(a.alpha, "--alpha");
  if (!a.q.empty()) {
    cfg.q = parse_real(a.q, "--q");
  } else if (!a.c.empty() && !a.exponent.empty()) {
    cfg.q = parse_real(a.c, "--c") * std::pow(static_cast<double>(spec.n), parse_real(a.exponent, "--exponent"));
  } else {
    throw UsageError("pipeline needs --q, or --c with --exponent");
  }
  cfg.rounds = a.rounds;
  if (!a.p.empty()) cfg.p_override = parse_real(a.p, "--p");
  cfg.pad_final = a.pad;
  cfg.workers = c.workers;

  RunHeader header = base_header("pipeline", spec);
  header.push_back({"K", fmt(cfg.K)});
  header.push_back({"alpha", fmt(cfg.alpha)});
  header.push_back({"q", fmt(cfg.q)});
  header.push_back({"seed", std::to_string(seed)});
  header.push_back({"runs", std::to_string(a.runs)});
  if (a.rounds) header.push_back({"rounds", std::to_string(*a.rounds)});
  if (cfg.p_override) header.push_back({"p", fmt(*cfg.p_override)});
  header.push_back({"pad_final", a.pad ? "true" : "false"});

  std::ostringstream transcript;
  std::size_t successes = 0;
  bool verified = true;
  for (std::size_t run = 0; run < a.runs; ++run) {
    cfg.seed = mix_seed(seed, run);
    const auto result = run_pipeline(family, cfg);
    auto h = header;
    h.push_back({"run", std::to_string(run)});
    write_pipeline_transcript(transcript, result, h);
    if (result.success) {
      ++successes;
      const auto& copy = *result.found_copy;
      if (!family.contains_copy(copy) || !copy.is_subset_of(result.exposure_union)) {
        err << "run " << run << ": recovered copy failed verification\n";
        verified = false;
      }
    }
    if (run == 0 && !result.advisory.empty()) err << "advisory: " << result.advisory << '\n';
  }
  if (!c.out.empty()) emit(c.out, transcript.str(), out);
  out << "successes " << successes << '/' << a.runs << '\n';
  return verified ? kOk : kVerificationFailure;
}

// ---------------------------------------------------------------- threshold
struct ThresholdArgs {
  std::string grid;
  std::size_t trials = 100;
  bool uncoupled = false;
  std::string csv;
  std::string json;
  std::string svg;
};

int cmd_threshold(const SpecArgs& sa, const ThresholdArgs& a, const Common& c, std::ostream& out) {
  const auto spec = sa.spec();
  const auto seed = c.need_seed("threshold");
  if (a.grid.empty()) throw UsageError("threshold needs --grid p1,p2,...");
  std::vector<double> grid;
  std::stringstream ss(a.grid);
  std::string tok;
  while (std::getline(ss, tok, ',')) grid.push_back(parse_real(tok, "--grid"));
  ThresholdOptions opts;
  opts.node_budget = c.budget_value();
  opts.coupled = !a.uncoupled;
  opts.workers = c.workers;
  const auto est = estimate_threshold(spec, grid, a.trials, seed, opts);

  RunHeader header = base_header("threshold", spec);
  header.push_back({"grid", a.grid});
  header.push_back({"trials", std::to_string(a.trials)});
  header.push_back({"seed", std::to_string(seed)});
  header.push_back({"coupled", opts.coupled ? "true" : "false"});
  header.push_back({"budget", std::to_string(opts.node_budget)});

  std::ostringstream csv;
  write_threshold_csv(csv, est, header);
  if (!a.csv.empty()) emit(a.csv, csv.str(), out);
  if (!a.json.empty()) emit(a.json, threshold_summary_json(est, header) + "\n", out);
  if (!a.svg.empty()) emit(a.svg, threshold_svg({est}), out);
  if (a.csv.empty()) out << csv.str();
  out << "p_half " << (est.p_half ? fmt(*est.p_half) : std::string("none")) << '\n';
  out << "first_moment_p " << fmt(est.first_moment_p) << '\n';
  return opts.coupled && est.monotone_violations > 0 ? kVerificationFailure : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"spanning structures, spread hypergraphs and fragmentation experiments", "spanlab"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Common common;
  SpecArgs spec_args;

  auto* gen = app.add_subcommand("gen", "write a structure as JSON");
  std::string ordering;
  spec_args.add(gen);
  gen->add_option("--ordering", ordering, "comma-separated vertex at each position");
  gen->add_option("--out", common.out, "output path (default stdout)");

  auto* en = app.add_subcommand("enumerate", "enumerate all copies and print their number");
  bool check = false;
  std::string dump;
  spec_args.add(en);
  en->add_flag("--check", check, "compare with the closed-form count");
  en->add_option("--dump", dump, "write the family dump to this path");
  add_budget(en, common);
  add_workers(en, common);

  auto* sp = app.add_subcommand("spread", "measure spread / superspread of the copy family");
  SpreadArgs spread_args;
  spec_args.add(sp);
  sp->add_option("--q", spread_args.q, "q to verify");
  sp->add_option("--c", spread_args.c, "q = c * n^exponent");
  sp->add_option("--exponent", spread_args.exponent, "exponent of n");
  sp->add_option("--alpha", spread_args.alpha, "alpha (default 1/3)");
  sp->add_option("--delta", spread_args.delta, "delta (default 1/15)");
  sp->add_option("--cap", spread_args.cap, "exhaustive subset size cap");
  sp->add_option("--samples", spread_args.samples, "samples beyond the cap");
  sp->add_flag("--minimal", spread_args.minimal, "report the minimal constant c");
  sp->add_option("--out", common.out, "output path (default stdout)");
  add_seed(sp, common);
  add_budget(sp, common);
  add_workers(sp, common);

  auto* de = app.add_subcommand("density", "brute-force a density or component claim");
  DensityArgs density_args;
  spec_args.add(de, false);
  de->add_option("--claim", density_args.claim, "claim id")->required()->check(CLI::IsMember(density_claims()));
  de->add_option("--cap", density_args.cap, "exhaustive edge-subset cap");
  de->add_option("--samples", density_args.samples, "random larger edge subsets");
  de->add_option("--out", common.out, "output path (default stdout)");
  add_seed(de, common);
  add_budget(de, common);

  auto* fr = app.add_subcommand("fragment", "fragmentation experiments on the copy family");
  FragmentArgs fragment_args;
  spec_args.add(fr);
  fr->add_option("--report", fragment_args.report, "profile, bad-pairs, claim or step");
  fr->add_option("--w", fragment_args.w, "exposure size");
  fr->add_option("--k", fragment_args.k, "fragment size bound");
  fr->add_option("--C", fragment_args.C, "constant C of the bound");
  fr->add_option("--trials", fragment_args.trials, "Monte Carlo trials");
  fr->add_option("--w-prime", fragment_args.w_prime, "exposure size for the claim check");
  fr->add_option("--out", common.out, "output path (default stdout)");
  add_seed(fr, common);
  add_budget(fr, common);
  add_workers(fr, common);

  auto* pi = app.add_subcommand("pipeline", "run the sprinkling pipeline");
  PipelineArgs pipeline_args;
  spec_args.add(pi);
  pi->add_option("--K", pipeline_args.K, "round constant K (default 8)");
  pi->add_option("--alpha", pipeline_args.alpha, "alpha (default 1/3)");
  pi->add_option("--q", pipeline_args.q, "spread parameter q");
  pi->add_option("--c", pipeline_args.c, "q = c * n^exponent");
  pi->add_option("--exponent", pipeline_args.exponent, "exponent of n");
  pi->add_option("--runs", pipeline_args.runs, "independent runs");
  pi->add_option("--rounds", pipeline_args.rounds, "override the number of rounds");
  pi->add_option("--p", pipeline_args.p, "override the final sprinkle probability");
  pi->add_flag("--pad", pipeline_args.pad, "pad final fragments to k_t edges");
  pi->add_option("--out", common.out, "JSON-lines transcript path");
  add_seed(pi, common);
  add_budget(pi, common);
  add_workers(pi, common);

  auto* th = app.add_subcommand("threshold", "estimate containment frequencies in G(n,p)");
  ThresholdArgs threshold_args;
  spec_args.add(th);
  th->add_option("--grid", threshold_args.grid, "comma-separated increasing p values");
  th->add_option("--trials", threshold_args.trials, "trials per grid point");
  th->add_flag("--uncoupled", threshold_args.uncoupled, "independent graphs per grid point");
  th->add_option("--csv", threshold_args.csv, "CSV output path (default stdout)");
  th->add_option("--json", threshold_args.json, "JSON summary path");
  th->add_option("--svg", threshold_args.svg, "SVG plot path");
  add_seed(th, common);
  add_budget(th, common);
  add_workers(th, common);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*gen) return cmd_gen(spec_args, ordering, common, out);
    if (*en) return cmd_enumerate(spec_args, check, dump, common, out, err);
    if (*sp) return cmd_spread(spec_args, spread_args, common, out);
    if (*de) return cmd_density(spec_args, density_args, common, out);
    if (*fr) return cmd_fragment(spec_args, fragment_args, common, out);
    if (*pi) return cmd_pipeline(spec_args, pipeline_args, common, out, err);
    if (*th) return cmd_threshold(spec_args, threshold_args, common, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\nrerun with --budget " << e.required() << " or more\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace spanlab::cli
