#include "spanlab/spreadness.hpp"

#include "spanlab/canonical.hpp"
#include "spanlab/parallel.hpp"
#include "spanlab/random.hpp"
#include "spanlab/structures.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace spanlab {

namespace {

constexpr double kSlack = 1e-9;

std::size_t super_cap(double delta, std::size_t k0) {
  return static_cast<std::size_t>(std::floor(delta * static_cast<double>(k0) + 1e-12));
}

// log of the least q admissible at this class, for the plain and the
// superspread inequality respectively.
double log_required_q(const SubsetClass& c, std::size_t family_size, std::size_t k0, double alpha,
                      bool with_factor) {
  double lhs = std::log(static_cast<double>(c.count)) - std::log(static_cast<double>(family_size));
  if (with_factor) lhs += alpha * c.components * std::log(static_cast<double>(k0));
  return lhs / static_cast<double>(c.edges);
}

}  // namespace

int components(const EdgeSet& I, int n) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<char> touched(static_cast<std::size_t>(n), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  int comps = 0;
  for (auto idx : I.indices()) {
    const auto e = pair_at(n, idx);
    for (int x : {e.u, e.v}) {
      if (!touched[static_cast<std::size_t>(x)]) {
        touched[static_cast<std::size_t>(x)] = 1;
        ++comps;
      }
    }
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --comps;
    }
  }
  return comps;
}

Rational spread_fraction(const CopyFamily& family, const EdgeSet& I) {
  return Rational(BigInt(family.copies_containing(I)), BigInt(family.size()));
}

double spread_ratio(const CopyFamily& family, const EdgeSet& I) {
  if (I.empty()) throw std::invalid_argument("spread_ratio needs a nonempty I");
  const auto count = family.copies_containing(I);
  if (count == 0) return 0.0;
  return std::exp((std::log(static_cast<double>(count)) - std::log(static_cast<double>(family.size()))) /
                  static_cast<double>(I.size()));
}

SubsetSurvey survey_subsets(const CopyFamily& family, const SpreadOptions& options) {
  const int n = family.n();
  const auto m = family.ground_m();
  const auto canonical = build_structure(family.spec());
  const auto& edges = canonical.edges();
  const std::size_t k0 = edges.size();
  std::vector<std::uint32_t> pair_of(k0);
  for (std::size_t i = 0; i < k0; ++i) {
    pair_of[i] = static_cast<std::uint32_t>(pair_index(n, edges[i].u, edges[i].v));
  }

  SubsetSurvey survey;
  std::unordered_map<std::string, std::size_t> class_of;
  std::vector<Edge> chosen;
  auto record = [&](const std::vector<std::size_t>& pick) {
    chosen.clear();
    for (auto i : pick) chosen.push_back(edges[i]);
    auto key = canonical_form(chosen);
    if (class_of.count(key)) return;
    class_of.emplace(std::move(key), survey.classes.size());
    SubsetClass c;
    c.witness = EdgeSet(m);
    for (auto i : pick) c.witness.insert(pair_of[i]);
    c.edges = pick.size();
    c.components = components(c.witness, n);
    survey.classes.push_back(std::move(c));
  };

  const std::size_t cap = std::min(options.exhaustive_cap, k0);
  std::vector<std::size_t> pick;
  auto rec = [&](auto& self, std::size_t start) -> void {
    if (!pick.empty()) record(pick);
    if (pick.size() == cap) return;
    for (std::size_t i = start; i < k0; ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);

  if (cap < k0) {
    survey.exhaustive = false;
    std::unordered_map<EdgeSet, char, EdgeSetHash> seen;
    for (std::size_t s = 0; s < options.samples; ++s) {
      Rng rng(mix_seed(options.seed, s));
      // Size uniform on (cap, k0], then a uniform subset of that size.
      const auto size = cap + 1 + static_cast<std::size_t>(uniform_below(rng, k0 - cap));
      auto sub = random_subset(k0, size, rng);
      EdgeSet key(m);
      for (auto i : sub) key.insert(pair_of[i]);
      if (!seen.emplace(std::move(key), 1).second) continue;
      std::vector<std::size_t> p(sub.begin(), sub.end());
      record(p);
    }
    survey.samples_drawn = options.samples;
  }

  parallel_chunks(survey.classes.size(), options.workers,
                  [&](std::size_t, std::size_t begin, std::size_t end) {
                    for (std::size_t i = begin; i < end; ++i) {
                      survey.classes[i].count = family.copies_containing(survey.classes[i].witness);
                    }
                  });
  return survey;
}

SpreadReport verify_superspread(const CopyFamily& family, const SubsetSurvey& survey, double q,
                                double alpha, double delta) {
  if (!(q > 0)) throw std::invalid_argument("q must be positive");
  SpreadReport report;
  report.q_target = q;
  report.alpha = alpha;
  report.delta = delta;
  report.superspread_cap = super_cap(delta, family.k0());
  report.search_mode = survey.exhaustive ? "exhaustive" : "sampled";
  report.classes_examined = survey.classes.size();
  report.samples_drawn = survey.samples_drawn;
  double worst = -INFINITY;
  for (const auto& c : survey.classes) {
    if (c.count == 0) continue;
    const bool factor = c.edges <= report.superspread_cap;
    const double log_margin =
        static_cast<double>(c.edges) * (log_required_q(c, family.size(), family.k0(), alpha, factor) -
                                        std::log(q));
    const double margin = std::exp(log_margin);
    auto [it, fresh] = report.per_size_margins.emplace(c.edges, margin);
    if (!fresh) it->second = std::max(it->second, margin);
    if (log_margin > worst) {
      worst = log_margin;
      report.worst_witness = c.witness;
    }
    if (log_margin > kSlack) report.pass = false;
  }
  report.worst_margin = std::isinf(worst) ? 0.0 : std::exp(worst);
  return report;
}

SpreadReport verify_superspread(const CopyFamily& family, double q, double alpha, double delta,
                                const SpreadOptions& options) {
  return verify_superspread(family, survey_subsets(family, options), q, alpha, delta);
}

MinimalConstant minimal_superspread_constant(const CopyFamily& family, const SubsetSurvey& survey,
                                             double alpha, double delta, double exponent) {
  const auto cap = super_cap(delta, family.k0());
  MinimalConstant result;
  result.search_mode = survey.exhaustive ? "exhaustive" : "sampled";
  double best = -INFINITY;
  for (const auto& c : survey.classes) {
    if (c.count == 0) continue;
    const double need = log_required_q(c, family.size(), family.k0(), alpha, c.edges <= cap);
    if (need > best) {
      best = need;
      result.witness = c.witness;
    }
  }
  result.value = std::isinf(best) ? 0.0 : std::exp(best - exponent * std::log(static_cast<double>(family.n())));
  return result;
}

MinimalConstant minimal_superspread_constant(const CopyFamily& family, double alpha, double delta,
                                             double exponent, const SpreadOptions& options) {
  return minimal_superspread_constant(family, survey_subsets(family, options), alpha, delta, exponent);
}

}  // namespace spanlab
