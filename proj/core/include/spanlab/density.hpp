#pragma once

#include "spanlab/bigint.hpp"
#include "spanlab/copyfamily.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/structures.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spanlab {

std::size_t induced_edge_count(const LabeledGraph& g, std::span<const int> vertices);

// Edges induced in K_{r,2,n} by a segment of length v starting at a clique's
// first vertex: (C(r,2)-1)a + C(b,2) - max(2-b,0)(r-2) with v = (r-2)a + b.
// Requires r >= 4 and v >= 2.
long long segment_edge_formula(int r, int v);

// (r+1)v/2 - (r+2)/2.
Rational easy_bound(int r, int v);

struct DensestSubset {
  std::vector<int> vertices;
  std::size_t edges = 0;
};

// A v-subset maximising induced edges (the first one found in lexicographic
// order of vertex sets). Throws BudgetExceeded when C(n,v) > max_subsets.
DensestSubset densest_subset(const LabeledGraph& g, int v, std::uint64_t max_subsets = 100'000'000);

// Vertices of the cyclic segment [start, start+length) mod n.
std::vector<int> segment(int n, int start, int length);

struct ComponentCheck {
  std::size_t edges = 0;
  int vertices = 0;
  int components = 0;
  bool small_applies = false;  // the c-refined bound is in its range
  bool small_holds = true;
  bool large_holds = true;
  bool holds() const { return small_holds && large_holds; }
};

// Component inequalities for a subgraph I of the structure. C4 cycle:
// 3(|V|-c) >= 2l + c when l <= n/10, and 3(|V|-c) >= 2l - 3 always.
// K_{r,2,n} (r >= 4): (r+1)(|V|-c) >= 2l + c when l <= n/(2r), and (r+1)|V| >= 2l always.
ComponentCheck component_inequalities(const StructureSpec& spec, const EdgeSet& I);
bool check_component_inequality(const StructureSpec& spec, const EdgeSet& I);

struct Violation {
  std::string detail;
  std::vector<int> vertices;
  std::vector<Edge> edges;
  std::string observed;
  std::string claimed;
};

struct DensityVerdict {
  std::string claim_id;
  std::string structure;
  std::uint64_t instances_checked = 0;
  bool sampled = false;
  std::vector<Violation> violations;
  bool pass() const { return violations.empty(); }
};

struct DensityOptions {
  // Edge subsets up to this size are checked exhaustively.
  std::size_t exhaustive_edge_cap = 4;
  // Random larger edge subsets checked in addition.
  std::size_t samples = 100'000;
  std::uint64_t seed = 0;
  std::uint64_t max_subsets = 100'000'000;
  // Only the first few violations keep witnesses.
  std::size_t max_witnesses = 20;
};

// Claim ids: segment, easy-bound, densest-segment, compression, density-bound,
// c4-edge-bound, c4-small, c4-large, krs-small, krs-large, all.
const std::vector<std::string>& density_claims();
DensityVerdict verify_density_lemma(const std::string& claim_id, const StructureSpec& spec,
                                    const DensityOptions& options = {});

// Number of l-edge subsets of E(g) spanning exactly c components.
BigInt count_subgraphs_by_shape(const LabeledGraph& g, int l, int c,
                                std::uint64_t max_subsets = 100'000'000);
// counts[c] for c in [0, l].
std::vector<BigInt> shape_histogram(const LabeledGraph& g, int l,
                                    std::uint64_t max_subsets = 100'000'000);

// A rational lower bound on (4 e Δ)^l C(f, c), using e > 2.718281828.
// A count not exceeding it satisfies the subgraph-count bound exactly.
Rational subgraph_count_bound_floor(const LabeledGraph& g, int l, int c);

// max over v in [3, n] of e_H(v)/(v-2).
Rational gamma_riordan(const LabeledGraph& g, std::uint64_t max_subsets = 100'000'000);

}  // namespace spanlab
