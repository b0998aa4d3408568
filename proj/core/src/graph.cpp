#include "spanlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace spanlab {

Edge pair_at(int n, std::size_t index) {
  int u = 0;
  std::size_t row = static_cast<std::size_t>(n - 1);
  while (index >= row) {
    index -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + static_cast<int>(index)};
}

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

EdgeSet::EdgeSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

EdgeSet EdgeSet::from_indices(std::size_t universe, std::span<const std::uint32_t> indices) {
  EdgeSet s(universe);
  for (auto i : indices) {
    if (i >= universe) throw std::out_of_range("EdgeSet index outside universe");
    s.insert(i);
  }
  return s;
}

EdgeSet EdgeSet::full(std::size_t universe) {
  EdgeSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) s.insert(i);
  return s;
}

std::size_t EdgeSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool EdgeSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool EdgeSet::is_subset_of(const EdgeSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool EdgeSet::intersects(const EdgeSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::size_t EdgeSet::intersection_size(const EdgeSet& other) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  }
  return total;
}

std::size_t EdgeSet::difference_size(const EdgeSet& other) const {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    total += static_cast<std::size_t>(std::popcount(words_[i] & ~other.words_[i]));
  }
  return total;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<std::uint32_t> EdgeSet::indices() const {
  std::vector<std::uint32_t> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto bits = words_[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

bool EdgeSet::lex_less(const EdgeSet& other) const {
  // Find the smallest element d of the symmetric difference. All smaller
  // elements are shared, so the sequences agree up to d's position. The set
  // holding d is smaller iff the other set still has an element beyond d;
  // otherwise the other set is a proper prefix.
  const std::size_t nw = words_.size();
  for (std::size_t w = 0; w < nw; ++w) {
    const auto diff = words_[w] ^ other.words_[w];
    if (!diff) continue;
    const int bit = std::countr_zero(diff);
    const bool d_in_this = (words_[w] >> bit) & 1U;
    const EdgeSet& rest = d_in_this ? other : *this;
    const std::uint64_t above = bit == 63 ? 0 : (~std::uint64_t{0} << (bit + 1));
    bool has_beyond = (rest.words_[w] & above) != 0;
    for (std::size_t v = w + 1; v < nw && !has_beyond; ++v) has_beyond = rest.words_[v] != 0;
    return d_in_this ? has_beyond : !has_beyond;
  }
  return false;
}

std::size_t EdgeSet::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

LabeledGraph::LabeledGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  for (auto& e : edges_) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v >= n) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") outside [0," + std::to_string(n) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                std::to_string(dup->v) + ")");
  }
}

LabeledGraph LabeledGraph::from_edge_set(int n, const EdgeSet& pairs) {
  return LabeledGraph(n, edges_of(n, pairs));
}

LabeledGraph LabeledGraph::complete(int n) {
  std::vector<Edge> edges;
  edges.reserve(pair_count(n));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return LabeledGraph(n, std::move(edges));
}

bool LabeledGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> LabeledGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    ++deg[static_cast<std::size_t>(e.u)];
    ++deg[static_cast<std::size_t>(e.v)];
  }
  return deg;
}

int LabeledGraph::max_degree() const {
  const auto deg = degrees();
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

EdgeSet LabeledGraph::edge_set() const {
  EdgeSet s(pair_count(n_));
  for (const auto& e : edges_) s.insert(pair_index(n_, e.u, e.v));
  return s;
}

std::vector<std::uint64_t> LabeledGraph::adjacency_masks() const {
  if (n_ > 64) throw std::invalid_argument("adjacency masks require n <= 64");
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
  return adj;
}

std::vector<std::vector<int>> LabeledGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (const auto& e : edges_) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  return adj;
}

LabeledGraph LabeledGraph::relabeled(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(n_)) {
    throw std::invalid_argument("relabeling must have one image per vertex");
  }
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) {
    out.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  }
  return LabeledGraph(n_, std::move(out));
}

int edge_components(std::span<const Edge> edges) {
  std::unordered_map<int, int> parent;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  int comps = 0;
  for (const auto& e : edges) {
    for (int x : {e.u, e.v}) {
      if (parent.try_emplace(x, x).second) ++comps;
    }
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --comps;
    }
  }
  return comps;
}

int edge_vertex_count(std::span<const Edge> edges) {
  std::vector<int> ends;
  ends.reserve(edges.size() * 2);
  for (const auto& e : edges) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  return static_cast<int>(std::unique(ends.begin(), ends.end()) - ends.begin());
}

std::vector<Edge> edges_of(int n, const EdgeSet& pairs) {
  std::vector<Edge> out;
  // Pair indices ascend in (u,v) order, so the result is already sorted.
  for (auto idx : pairs.indices()) out.push_back(pair_at(n, idx));
  return out;
}

}  // namespace spanlab
