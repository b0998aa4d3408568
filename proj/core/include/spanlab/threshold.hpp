#pragma once

#include "spanlab/embedding.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/structures.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace spanlab {

LabeledGraph sample_gnp(int n, double p, std::uint64_t seed);
LabeledGraph sample_gnm(int n, std::size_t m, std::uint64_t seed);

struct Containment {
  SearchStatus status = SearchStatus::Absent;
  // Present iff status == Found: structure_from_ordering(spec, *ordering) ⊆ host.
  std::optional<Ordering> ordering;
  std::uint64_t nodes = 0;
};

/// Exact spanning containment of one structure, reusable across hosts.
/// Host vertex 0 is the image of some position; by the structure's symmetry it
/// suffices to try one position per automorphism orbit.
class SpanningSearcher {
 public:
  explicit SpanningSearcher(const StructureSpec& spec);

  Containment search(const LabeledGraph& host, std::uint64_t node_budget = 100'000'000) const;
  const StructureSpec& spec() const { return spec_; }

 private:
  StructureSpec spec_;
  LabeledGraph pattern_;
  std::vector<int> representatives_;
};

Containment contains_spanning(const StructureSpec& spec, const LabeledGraph& host,
                              std::uint64_t node_budget = 100'000'000);

// |F|^{-1/k0}, with |F| = n!/|Aut(F)| counted exactly.
double first_moment_lower_bound(const StructureSpec& spec);

struct GridPoint {
  double p = 0;
  std::size_t trials = 0;
  std::size_t contains = 0;
  std::size_t unknown = 0;
  // contains / (trials - unknown); 0 when every trial was unknown.
  double freq = 0;
};

struct ThresholdOptions {
  std::uint64_t node_budget = 100'000'000;
  // Realise every grid point from the same uniform edge weights.
  bool coupled = true;
  int workers = 1;
};

struct ThresholdEstimate {
  StructureSpec spec;
  std::uint64_t seed = 0;
  bool coupled = true;
  std::vector<GridPoint> points;
  // Linear interpolation where the frequency first reaches 1/2.
  std::optional<double> p_half;
  double first_moment_p = 0;
  // Trials whose containment indicator decreases somewhere along the grid.
  std::size_t monotone_violations = 0;
};

ThresholdEstimate estimate_threshold(const StructureSpec& spec, const std::vector<double>& p_grid,
                                     std::size_t trials_per_point, std::uint64_t seed,
                                     const ThresholdOptions& options = {});

std::optional<double> interpolate_half(const std::vector<GridPoint>& points);

}  // namespace spanlab
