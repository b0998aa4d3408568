#include "spanlab/fragmentation.hpp"

#include "spanlab/bigint.hpp"
#include "spanlab/parallel.hpp"
#include "spanlab/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace spanlab {

namespace {

// Distinct candidate fragments R = J \ X (|R| <= k) for one exposure X,
// grouped by smallest element so lexicographic queries stop early.
class FragmentFinder {
 public:
  struct Entry {
    EdgeSet set;
    std::size_t source;
  };

  FragmentFinder(std::span<const EdgeSet> H, const EdgeSet& X, std::size_t k) {
    const std::size_t universe = X.universe();
    groups_.resize(universe);
    std::unordered_map<EdgeSet, std::size_t, EdgeSetHash> first;
    for (std::size_t j = 0; j < H.size(); ++j) {
      if (H[j].universe() != universe) throw std::invalid_argument("hypergraph over the wrong ground set");
      EdgeSet r = H[j] - X;
      if (r.size() > k) continue;
      first.try_emplace(std::move(r), j);
    }
    for (auto& [r, j] : first) {
      if (r.empty()) {
        empty_ = Entry{EdgeSet(universe), j};
        continue;
      }
      const auto lo = r.indices().front();
      groups_[lo].push_back({r, j});
    }
    for (auto& g : groups_) {
      std::sort(g.begin(), g.end(), [](const Entry& a, const Entry& b) { return a.set.lex_less(b.set); });
    }
  }

  // Lexicographically smallest fragment inside S, or null if (S, X) is bad.
  const Entry* smallest(const EdgeSet& S) const {
    if (empty_) return &*empty_;
    for (auto e : S.indices()) {
      for (const auto& entry : groups_[e]) {
        if (entry.set.is_subset_of(S)) return &entry;
      }
    }
    return nullptr;
  }

  std::vector<EdgeSet> all(const EdgeSet& S) const {
    std::vector<EdgeSet> out;
    if (empty_) out.push_back(empty_->set);
    for (auto e : S.indices()) {
      for (const auto& entry : groups_[e]) {
        if (entry.set.is_subset_of(S)) out.push_back(entry.set);
      }
    }
    // Groups are visited by increasing smallest element, which is already
    // lexicographic order across groups.
    return out;
  }

 private:
  std::vector<std::vector<Entry>> groups_;
  std::optional<Entry> empty_;
};

FragmentFinder make_finder(std::span<const EdgeSet> H, const EdgeSet& X, std::size_t k) {
  return FragmentFinder(H, X, k);
}

double mean_of(const std::vector<double>& xs, double& std_error) {
  const double n = static_cast<double>(xs.size());
  double sum = 0;
  for (double x : xs) sum += x;
  const double mean = sum / n;
  double ss = 0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  std_error = xs.size() > 1 ? std::sqrt(ss / (n - 1) / n) : 0.0;
  return mean;
}

}  // namespace

std::vector<EdgeSet> FragmentationState::sets() const {
  std::vector<EdgeSet> out;
  out.reserve(fragments.size());
  for (const auto& f : fragments) out.push_back(f.edges);
  return out;
}

FragmentationState initial_state(std::vector<EdgeSet> sets) {
  FragmentationState state;
  if (!sets.empty()) state.exposed = EdgeSet(sets.front().universe());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    state.k = std::max(state.k, sets[i].size());
    state.fragments.push_back({std::move(sets[i]), i, i});
  }
  state.good_count = state.fragments.size();
  return state;
}

FragmentationState initial_state(const CopyFamily& family) {
  auto state = initial_state(family.copies());
  state.exposed = EdgeSet(family.ground_m());
  state.k = family.k0();
  return state;
}

std::vector<EdgeSet> fragments_of(std::span<const EdgeSet> H, const EdgeSet& S, const EdgeSet& X, std::size_t k) {
  return make_finder(H, X, k).all(S);
}

PairClass classify_pair(std::span<const EdgeSet> H, const EdgeSet& S, const EdgeSet& X, std::size_t k) {
  return make_finder(H, X, k).smallest(S) ? PairClass::Good : PairClass::Bad;
}

FragmentationState fragment_step(const FragmentationState& prev, const EdgeSet& X, std::size_t k, int workers) {
  const auto sets = prev.sets();
  const auto finder = make_finder(sets, X, k);
  std::vector<std::optional<Fragment>> out(sets.size());
  parallel_chunks(sets.size(), workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t s = begin; s < end; ++s) {
      if (const auto* hit = finder.smallest(sets[s])) {
        out[s] = Fragment{hit->set, prev.fragments[s].origin, hit->source};
      }
    }
  });
  FragmentationState next;
  next.round = prev.round + 1;
  next.k = k;
  next.exposed = prev.exposed.universe() == X.universe() ? (prev.exposed | X) : X;
  for (auto& f : out) {
    if (f) next.fragments.push_back(std::move(*f));
  }
  next.good_count = next.fragments.size();
  return next;
}

std::size_t count_containing(std::span<const EdgeSet> H, const EdgeSet& I) {
  return static_cast<std::size_t>(
      std::count_if(H.begin(), H.end(), [&](const EdgeSet& J) { return I.is_subset_of(J); }));
}

std::size_t count_containing(const FragmentationState& state, const EdgeSet& I) {
  return static_cast<std::size_t>(std::count_if(state.fragments.begin(), state.fragments.end(),
                                                [&](const Fragment& f) { return I.is_subset_of(f.edges); }));
}

EdgeSet nested_exposure(std::size_t m, std::size_t w, std::uint64_t seed, std::uint64_t trial) {
  if (w > m) throw std::invalid_argument("exposure larger than the ground set");
  Rng rng(mix_seed(seed, trial));
  const auto perm = random_permutation(m, rng);
  EdgeSet X(m);
  for (std::size_t i = 0; i < w; ++i) X.insert(perm[i]);
  return X;
}

MonteCarloEstimate estimate_bad_pair_expectation(std::span<const EdgeSet> H, std::size_t w, std::size_t k,
                                                 std::size_t trials, std::uint64_t seed, double C, int workers) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  if (H.empty()) throw std::invalid_argument("empty hypergraph");
  const std::size_t m = H.front().universe();
  std::vector<double> bad(trials, 0.0);
  parallel_chunks(trials, workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      const auto X = nested_exposure(m, w, seed, t);
      const auto finder = make_finder(H, X, k);
      std::size_t count = 0;
      for (const auto& S : H)
        if (!finder.smallest(S)) ++count;
      bad[t] = static_cast<double>(count);
    }
  });
  MonteCarloEstimate est;
  est.trials = trials;
  est.mean = mean_of(bad, est.std_error);
  est.rhs = 2.0 * std::pow(C, -static_cast<double>(k) / 3.0) * static_cast<double>(H.size());
  return est;
}

std::vector<double> intersection_profile(std::span<const EdgeSet> H, const EdgeSet& S) {
  std::size_t top = 0;
  for (const auto& J : H) top = std::max(top, J.size());
  std::vector<double> f(top + 1, 0.0);
  if (H.empty()) return f;
  for (const auto& J : H) f[J.intersection_size(S)] += 1.0;
  for (auto& x : f) x /= static_cast<double>(H.size());
  return f;
}

MonteCarloEstimate check_claim_bound(std::span<const EdgeSet> H, const EdgeSet& S, std::size_t w_prime,
                                     std::size_t k, double C, std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("need at least one trial");
  const std::size_t m = S.universe();
  std::vector<std::uint32_t> outside;
  for (std::size_t e = 0; e < m; ++e)
    if (!S.contains(e)) outside.push_back(static_cast<std::uint32_t>(e));
  if (w_prime > outside.size()) throw std::invalid_argument("w' exceeds |M \\ S|");
  std::size_t k_i = 0;
  for (const auto& J : H) k_i = std::max(k_i, J.size());

  std::vector<double> hits(trials, 0.0);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng rng(mix_seed(seed, t));
    const auto pick = random_subset(outside.size(), w_prime, rng);
    EdgeSet cover = S;
    for (auto i : pick) cover.insert(outside[i]);
    std::size_t count = 0;
    for (const auto& J : H) {
      if (J.intersection_size(S) >= k && J.is_subset_of(cover)) ++count;
    }
    hits[t] = static_cast<double>(count);
  }
  MonteCarloEstimate est;
  est.trials = trials;
  est.mean = mean_of(hits, est.std_error);
  const auto ki = static_cast<int>(k_i);
  const double log_ratio = log_big(binomial(static_cast<int>(w_prime) + ki, ki)) - log_big(binomial(static_cast<int>(m), ki));
  est.rhs = std::exp(-2.0 * static_cast<double>(k) / 3.0 * std::log(C) + std::log(static_cast<double>(H.size())) + log_ratio);
  return est;
}

std::size_t pipeline_rounds(double alpha) {
  if (!(alpha > 0 && alpha < 1)) throw std::invalid_argument("alpha must lie in (0,1)");
  return static_cast<std::size_t>(std::ceil(1.0 / alpha - 1e-9)) - 1;
}

std::vector<std::size_t> k_schedule(std::size_t k0, double alpha, std::size_t t) {
  std::vector<std::size_t> ks{k0};
  for (std::size_t i = 1; i <= t; ++i) {
    const double exact = std::pow(static_cast<double>(k0), 1.0 - static_cast<double>(i) * alpha);
    ks.push_back(static_cast<std::size_t>(std::floor(exact + 1e-9)));
  }
  return ks;
}

PipelineResult run_pipeline(const CopyFamily& family, const PipelineConfig& config) {
  if (!(config.K > 0)) throw std::invalid_argument("K must be positive");
  if (!(config.q > 0)) throw std::invalid_argument("q must be positive");
  PipelineResult result;
  const std::size_t m = family.ground_m();
  const int n = family.n();
  result.t = config.rounds ? static_cast<std::size_t>(std::max(*config.rounds, 0)) : pipeline_rounds(config.alpha);
  result.k_schedule = k_schedule(family.k0(), config.alpha, result.t);
  const double m_real = config.K * config.q * static_cast<double>(m);
  result.round_size = std::min<std::size_t>(m, static_cast<std::size_t>(std::floor(m_real + 1e-9)));
  result.p_final = config.p_override ? *config.p_override : std::min(1.0, config.K * config.q);
  if (result.p_final < 0 || result.p_final > 1) throw std::invalid_argument("final probability outside [0,1]");

  const double advisory_q = 4.0 * static_cast<double>(family.k0()) / (config.K * n * n);
  if (config.q < advisory_q) {
    std::ostringstream msg;
    msg << "q = " << config.q << " is below 4k0/(K n^2) = " << advisory_q;
    result.advisory = msg.str();
  }

  Rng rng(config.seed);
  std::vector<FragmentationState> states{initial_state(family)};
  result.exposure_union = EdgeSet(m);
  for (std::size_t i = 1; i <= result.t; ++i) {
    const auto pick = random_subset(m, result.round_size, rng);
    const auto X = EdgeSet::from_indices(m, pick);
    states.push_back(fragment_step(states.back(), X, result.k_schedule[i], config.workers));
    result.exposure_union |= X;
    const auto& now = states.back();
    const auto before = states[states.size() - 2].fragments.size();
    result.rounds.push_back({i, now.fragments.size(), now.k, result.round_size, now.exposed.size(),
                             !now.fragments.empty() && 2 * now.fragments.size() >= before});
  }

  EdgeSet Z(m);
  for (std::size_t e = 0; e < m; ++e)
    if (uniform01(rng) < result.p_final) Z.insert(e);
  result.final_exposed = Z.size();
  result.exposure_union |= Z;

  const auto& last = states.back();
  const std::size_t k_t = result.k_schedule.back();
  std::optional<std::size_t> hit;
  for (std::size_t s = 0; s < last.fragments.size(); ++s) {
    EdgeSet S = last.fragments[s].edges;
    if (config.pad_final) {
      for (std::size_t e = 0; e < m && S.size() < k_t; ++e) S.insert(e);
    }
    if (S.is_subset_of(Z)) {
      ++result.Y;
      if (!hit) hit = s;
    }
  }
  if (hit) {
    // Walk witnesses back to round 0: each J_{i-1} ⊆ J_i ∪ X_i, so the
    // recovered copy lies inside the union of all exposures.
    std::size_t idx = *hit;
    for (std::size_t r = states.size() - 1; r > 0; --r) idx = states[r].fragments[idx].witness;
    result.success = true;
    result.found_copy = states.front().fragments[idx].edges;
  }
  if (config.keep_history) result.history = std::move(states);
  return result;
}

}  // namespace spanlab
