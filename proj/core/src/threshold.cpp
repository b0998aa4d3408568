#include "spanlab/threshold.hpp"

#include "spanlab/copyfamily.hpp"
#include "spanlab/parallel.hpp"
#include "spanlab/random.hpp"

#include <cmath>
#include <stdexcept>

namespace spanlab {

LabeledGraph sample_gnp(int n, double p, std::uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw std::invalid_argument("p must lie in [0,1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform01(rng) < p) edges.push_back({u, v});
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph sample_gnm(int n, std::size_t m, std::uint64_t seed) {
  const auto total = pair_count(n);
  if (m > total) throw std::invalid_argument("m exceeds the number of pairs");
  Rng rng(seed);
  const auto pick = random_subset(total, m, rng);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (auto idx : pick) edges.push_back(pair_at(n, idx));
  return LabeledGraph(n, std::move(edges));
}

SpanningSearcher::SpanningSearcher(const StructureSpec& spec)
    : spec_(spec), pattern_(build_structure(spec)), representatives_(orbit_representatives(pattern_)) {}

Containment SpanningSearcher::search(const LabeledGraph& host, std::uint64_t node_budget) const {
  if (host.n() != spec_.n) throw std::invalid_argument("host has the wrong vertex count");
  Containment out;
  std::uint64_t left = node_budget;
  bool unknown = false;
  for (int position : representatives_) {
    EmbeddingOptions opts;
    opts.node_budget = left;
    opts.pinned = {{position, 0}};
    const auto res = find_spanning_embedding(pattern_, host, opts);
    out.nodes += res.nodes;
    left = res.nodes >= left ? 0 : left - res.nodes;
    if (res.status == SearchStatus::Found) {
      out.status = SearchStatus::Found;
      out.ordering = Ordering{*res.map};
      return out;
    }
    if (res.status == SearchStatus::Unknown) unknown = true;
    if (left == 0) {
      unknown = true;
      break;
    }
  }
  out.status = unknown ? SearchStatus::Unknown : SearchStatus::Absent;
  return out;
}

Containment contains_spanning(const StructureSpec& spec, const LabeledGraph& host, std::uint64_t node_budget) {
  return SpanningSearcher(spec).search(host, node_budget);
}

double first_moment_lower_bound(const StructureSpec& spec) {
  const BigInt count = count_copies_exact(spec);
  return std::exp(-log_big(count) / static_cast<double>(expected_edge_count(spec)));
}

std::optional<double> interpolate_half(const std::vector<GridPoint>& points) {
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const auto& a = points[i];
    const auto& b = points[i + 1];
    if (a.freq < 0.5 && b.freq >= 0.5) {
      return a.p + (0.5 - a.freq) * (b.p - a.p) / (b.freq - a.freq);
    }
  }
  return std::nullopt;
}

ThresholdEstimate estimate_threshold(const StructureSpec& spec, const std::vector<double>& p_grid,
                                     std::size_t trials_per_point, std::uint64_t seed,
                                     const ThresholdOptions& options) {
  for (std::size_t i = 0; i < p_grid.size(); ++i) {
    if (!(p_grid[i] >= 0 && p_grid[i] <= 1)) throw std::invalid_argument("grid value outside [0,1]");
    if (i > 0 && !(p_grid[i] > p_grid[i - 1])) throw std::invalid_argument("p grid must be strictly increasing");
  }
  const SpanningSearcher searcher(spec);
  const int n = spec.n;
  const auto m = pair_count(n);
  const std::size_t points = p_grid.size();
  // outcome[t * points + i]: 0 absent, 1 found, 2 unknown.
  std::vector<std::uint8_t> outcome(trials_per_point * points, 0);

  parallel_chunks(trials_per_point, options.workers, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<double> weight(m);
    for (std::size_t t = begin; t < end; ++t) {
      if (options.coupled) {
        Rng rng(mix_seed(seed, t));
        for (auto& w : weight) w = uniform01(rng);
      }
      for (std::size_t i = 0; i < points; ++i) {
        if (!options.coupled) {
          Rng rng(mix_seed(mix_seed(seed, i), t));
          for (auto& w : weight) w = uniform01(rng);
        }
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < m; ++e)
          if (weight[e] < p_grid[i]) edges.push_back(pair_at(n, e));
        const auto res = searcher.search(LabeledGraph(n, std::move(edges)), options.node_budget);
        outcome[t * points + i] = res.status == SearchStatus::Found ? 1 : res.status == SearchStatus::Unknown ? 2 : 0;
      }
    }
  });

  ThresholdEstimate est;
  est.spec = spec;
  est.seed = seed;
  est.coupled = options.coupled;
  est.first_moment_p = first_moment_lower_bound(spec);
  for (std::size_t i = 0; i < points; ++i) {
    GridPoint g;
    g.p = p_grid[i];
    g.trials = trials_per_point;
    for (std::size_t t = 0; t < trials_per_point; ++t) {
      const auto o = outcome[t * points + i];
      if (o == 1) ++g.contains;
      if (o == 2) ++g.unknown;
    }
    const auto known = g.trials - g.unknown;
    g.freq = known == 0 ? 0.0 : static_cast<double>(g.contains) / static_cast<double>(known);
    est.points.push_back(g);
  }
  for (std::size_t t = 0; t < trials_per_point; ++t) {
    bool seen = false;
    for (std::size_t i = 0; i < points; ++i) {
      const auto o = outcome[t * points + i];
      if (o == 1) seen = true;
      if (o == 0 && seen) {
        ++est.monotone_violations;
        break;
      }
    }
  }
  est.p_half = interpolate_half(est.points);
  return est;
}

}  // namespace spanlab
