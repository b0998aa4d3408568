#pragma once

#include "spanlab/copyfamily.hpp"
#include "spanlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace spanlab {

struct Fragment {
  EdgeSet edges;
  // Index of the round-0 set whose chain of replacements produced this fragment.
  std::size_t origin = 0;
  // Index, in the previous round's list, of the set J with edges = J \ X.
  std::size_t witness = 0;
};

/// One round of the fragmentation process: the multiset H_i (kept as a list
/// with provenance) and the cumulative exposure X_1 ∪ ... ∪ X_i.
struct FragmentationState {
  std::size_t round = 0;
  std::size_t k = 0;
  std::vector<Fragment> fragments;
  EdgeSet exposed;
  // Number of good pairs (S, X_round) in the step that produced this state.
  std::size_t good_count = 0;

  std::vector<EdgeSet> sets() const;
};

// Round 0: the family itself, each copy its own origin.
FragmentationState initial_state(const CopyFamily& family);
FragmentationState initial_state(std::vector<EdgeSet> sets);

// All (S,X)-fragments of size at most k: distinct J \ X over J in H with
// J ⊆ S ∪ X, in lexicographic order.
std::vector<EdgeSet> fragments_of(std::span<const EdgeSet> H, const EdgeSet& S, const EdgeSet& X, std::size_t k);

enum class PairClass { Good, Bad };
PairClass classify_pair(std::span<const EdgeSet> H, const EdgeSet& S, const EdgeSet& X, std::size_t k);

// Replaces every good S by its lexicographically smallest fragment; bad S are dropped.
FragmentationState fragment_step(const FragmentationState& prev, const EdgeSet& X, std::size_t k, int workers = 1);

// Multiset count |H ∩ <I>|.
std::size_t count_containing(std::span<const EdgeSet> H, const EdgeSet& I);
std::size_t count_containing(const FragmentationState& state, const EdgeSet& I);

struct MonteCarloEstimate {
  double mean = 0;
  double std_error = 0;
  std::size_t trials = 0;
  // The bound the estimate is compared with.
  double rhs = 0;
};

// Uniform w-subset of [0, m) for trial t: the first w entries of a random
// permutation, so exposures for the same (seed, t) are nested in w.
EdgeSet nested_exposure(std::size_t m, std::size_t w, std::uint64_t seed, std::uint64_t trial);

// E[#{S in H : (S, X) is k-bad}] over nested uniform w-subsets X of M, with
// rhs = 2 C^{-k/3} |H|.
MonteCarloEstimate estimate_bad_pair_expectation(std::span<const EdgeSet> H, std::size_t w, std::size_t k,
                                                 std::size_t trials, std::uint64_t seed, double C,
                                                 int workers = 1);

// f_j = fraction of J in H with |J ∩ S| = j, for j in [0, max |J|].
std::vector<double> intersection_profile(std::span<const EdgeSet> H, const EdgeSet& S);

// E[#{J in H : J ⊆ S ∪ Y, |J ∩ S| >= k}] over uniform w'-subsets Y of M \ S, with
// rhs = C^{-2k/3} |H| C(w'+k_i, k_i) / C(m, k_i) and k_i the largest member size.
MonteCarloEstimate check_claim_bound(std::span<const EdgeSet> H, const EdgeSet& S, std::size_t w_prime,
                                     std::size_t k, double C, std::size_t trials, std::uint64_t seed);

struct PipelineConfig {
  double K = 8;
  double alpha = 1.0 / 3.0;
  double q = 0;
  std::uint64_t seed = 0;
  // Overrides for the round count t and the final sprinkle probability.
  std::optional<int> rounds;
  std::optional<double> p_override;
  // Pad final fragments to k_t edges before the sprinkle.
  bool pad_final = false;
  bool keep_history = false;
  int workers = 1;
};

struct RoundRecord {
  std::size_t round = 0;
  std::size_t h_size = 0;
  std::size_t k = 0;
  std::size_t exposure_size = 0;
  std::size_t exposed_count = 0;
  bool successful = false;
};

struct PipelineResult {
  bool success = false;
  std::optional<EdgeSet> found_copy;
  std::vector<RoundRecord> rounds;
  std::size_t Y = 0;
  std::size_t t = 0;
  std::vector<std::size_t> k_schedule;
  std::size_t round_size = 0;
  double p_final = 0;
  std::size_t final_exposed = 0;
  EdgeSet exposure_union;
  std::string advisory;
  std::vector<FragmentationState> history;
};

// t = ceil(1/alpha) - 1 rounds of uniform m-subsets with m = floor(K q C(n,2))
// clipped to |M| and k_i = floor(k0^{1 - i alpha}), then a binomial sprinkle at
// p = min(1, K q). Succeeds iff some S in H_t lies inside the sprinkle; the
// full copy is recovered by following witnesses back to round 0.
PipelineResult run_pipeline(const CopyFamily& family, const PipelineConfig& config);

std::size_t pipeline_rounds(double alpha);
std::vector<std::size_t> k_schedule(std::size_t k0, double alpha, std::size_t t);

}  // namespace spanlab
