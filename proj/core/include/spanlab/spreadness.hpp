#pragma once

#include "spanlab/bigint.hpp"
#include "spanlab/copyfamily.hpp"
#include "spanlab/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace spanlab {

// Connected components of the graph spanned by I (pairs of [0,n)); 0 for I = ∅.
int components(const EdgeSet& I, int n);

// |F ∩ <I>| / |F| as an exact fraction.
Rational spread_fraction(const CopyFamily& family, const EdgeSet& I);

// (|F ∩ <I>| / |F|)^{1/|I|}: the least q meeting the spread inequality at I.
// Returns 0 when no copy contains I. I must be nonempty.
double spread_ratio(const CopyFamily& family, const EdgeSet& I);

struct SpreadOptions {
  // Every subset of the canonical copy with at most this many edges is examined.
  std::size_t exhaustive_cap = 6;
  // Larger subsets: this many uniform samples.
  std::size_t samples = 100'000;
  std::uint64_t seed = 0;
  int workers = 1;
};

// One isomorphism class of subgraphs I of the structure, with its count.
struct SubsetClass {
  EdgeSet witness;
  std::size_t edges = 0;
  int components = 0;
  std::size_t count = 0;
};

struct SpreadReport {
  double q_target = 0;
  double alpha = 0;
  double delta = 0;
  bool pass = true;
  // floor(delta * k0): sizes up to this carry the k0^{-alpha c_I} factor.
  std::size_t superspread_cap = 0;
  EdgeSet worst_witness;
  double worst_margin = 0;
  // |I| -> largest margin among examined I of that size.
  std::map<std::size_t, double> per_size_margins;
  // "exhaustive" when every subset was examined, otherwise "sampled".
  std::string search_mode;
  std::size_t classes_examined = 0;
  std::size_t samples_drawn = 0;
};

// Isomorphism classes of nonempty subgraphs of the canonical copy: all of size
// <= cap, plus the classes hit by uniform sampling of larger sizes.
struct SubsetSurvey {
  std::vector<SubsetClass> classes;
  bool exhaustive = true;
  std::size_t samples_drawn = 0;
};
SubsetSurvey survey_subsets(const CopyFamily& family, const SpreadOptions& options = {});

SpreadReport verify_superspread(const CopyFamily& family, double q, double alpha, double delta,
                                const SpreadOptions& options = {});
SpreadReport verify_superspread(const CopyFamily& family, const SubsetSurvey& survey, double q,
                                double alpha, double delta);

struct MinimalConstant {
  double value = 0;
  EdgeSet witness;
  std::string search_mode;
};

// Least c such that the family passes verify_superspread with q = c * n^exponent
// over the examined classes.
MinimalConstant minimal_superspread_constant(const CopyFamily& family, double alpha, double delta,
                                             double exponent, const SpreadOptions& options = {});
MinimalConstant minimal_superspread_constant(const CopyFamily& family, const SubsetSurvey& survey,
                                             double alpha, double delta, double exponent);

}  // namespace spanlab
