#pragma once

#include <boost/container/small_vector.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace spanlab {

struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Pairs of [0,n) are indexed in the order (0,1) < (0,2) < ... < (n-2,n-1).
constexpr std::size_t pair_count(int n) {
  return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

constexpr std::size_t pair_index(int n, int u, int v) {
  if (u > v) {
    const int t = u;
    u = v;
    v = t;
  }
  const auto uu = static_cast<std::size_t>(u);
  return uu * static_cast<std::size_t>(n) - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

Edge pair_at(int n, std::size_t index);

/// Subset of a ground set [0, universe) stored as a bitset.
///
/// Used both for edge subsets of M = pairs of [0,n) and for generic
/// hypergraph vertex sets. Ordering helpers compare the sets as sorted
/// index sequences.
class EdgeSet {
 public:
  using Words = boost::container::small_vector<std::uint64_t, 2>;

  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe);

  static EdgeSet from_indices(std::size_t universe, std::span<const std::uint32_t> indices);
  static EdgeSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t size() const;
  bool empty() const;

  bool is_subset_of(const EdgeSet& other) const;
  bool intersects(const EdgeSet& other) const;
  std::size_t intersection_size(const EdgeSet& other) const;
  // |this \ other|
  std::size_t difference_size(const EdgeSet& other) const;

  EdgeSet& operator|=(const EdgeSet& other);
  EdgeSet& operator&=(const EdgeSet& other);
  EdgeSet& operator-=(const EdgeSet& other);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  std::vector<std::uint32_t> indices() const;

  // Lexicographic order of the sorted index sequences (a proper prefix is smaller).
  bool lex_less(const EdgeSet& other) const;

  std::span<const std::uint64_t> words() const { return {words_.data(), words_.size()}; }
  std::size_t hash() const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  std::size_t universe_ = 0;
  Words words_;
};

struct EdgeSetHash {
  std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

/// Simple undirected graph on [0,n) with a sorted, duplicate-free edge list.
class LabeledGraph {
 public:
  LabeledGraph() = default;
  // Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
  LabeledGraph(int n, std::vector<Edge> edges);

  static LabeledGraph from_edge_set(int n, const EdgeSet& pairs);
  static LabeledGraph complete(int n);
  static LabeledGraph empty(int n) { return LabeledGraph(n, {}); }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  int max_degree() const;

  EdgeSet edge_set() const;
  // Neighbourhood bitmasks; requires n <= 64.
  std::vector<std::uint64_t> adjacency_masks() const;
  std::vector<std::vector<int>> adjacency_lists() const;

  // The subgraph image of this graph under vertex map v -> perm[v].
  LabeledGraph relabeled(std::span<const int> perm) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Number of connected components spanned by a list of edges (isolated vertices never occur).
int edge_components(std::span<const Edge> edges);
// Number of distinct endpoints.
int edge_vertex_count(std::span<const Edge> edges);

std::vector<Edge> edges_of(int n, const EdgeSet& pairs);

}  // namespace spanlab
