#pragma once

#include "spanlab/bigint.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/structures.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace spanlab {

enum class SearchStatus { Found, Absent, Unknown };

struct EmbeddingOptions {
  std::uint64_t node_budget = 100'000'000;
  // (pattern vertex, host vertex) assignments fixed before the search starts.
  std::vector<std::pair<int, int>> pinned;
};

struct EmbeddingResult {
  SearchStatus status = SearchStatus::Absent;
  // map[pattern vertex] = host vertex, present iff status == Found.
  std::optional<std::vector<int>> map;
  std::uint64_t nodes = 0;
};

/// Complete backtracking search for an injective map of pattern vertices to
/// host vertices carrying every pattern edge onto a host edge. Both graphs
/// must have the same vertex count (spanning embedding) and n <= 64.
EmbeddingResult find_spanning_embedding(const LabeledGraph& pattern, const LabeledGraph& host,
                                        const EmbeddingOptions& options = {});

// Exact |Aut(g)| by the orbit-stabilizer chain; throws if a search exceeds its budget.
BigInt count_automorphisms(const LabeledGraph& g, std::uint64_t node_budget = 100'000'000);

// Smallest vertex of each Aut(g)-orbit, ascending.
std::vector<int> orbit_representatives(const LabeledGraph& g,
                                       std::uint64_t node_budget = 100'000'000);

}  // namespace spanlab
