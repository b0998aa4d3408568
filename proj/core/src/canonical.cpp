#include "spanlab/canonical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace spanlab {

namespace {

struct Graph {
  int n = 0;
  std::vector<std::vector<int>> adj;
};

// Refine colours until stable. Colours are ranks of (own colour, sorted
// neighbour colours), so the result depends only on the coloured graph.
std::vector<int> refine(const Graph& g, std::vector<int> colour) {
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) {
      auto& s = sig[static_cast<std::size_t>(v)].first;
      s.push_back(colour[static_cast<std::size_t>(v)]);
      std::vector<int> nb;
      for (int w : g.adj[static_cast<std::size_t>(v)]) nb.push_back(colour[static_cast<std::size_t>(w)]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[static_cast<std::size_t>(v)].second = v;
    }
    std::vector<std::vector<int>> keys;
    keys.reserve(sig.size());
    for (auto& [s, v] : sig) keys.push_back(s);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<int> next(static_cast<std::size_t>(g.n));
    for (auto& [s, v] : sig) {
      next[static_cast<std::size_t>(v)] =
          static_cast<int>(std::lower_bound(keys.begin(), keys.end(), s) - keys.begin());
    }
    colour = std::move(next);
    if (keys.size() == classes) return colour;
    classes = keys.size();
  }
}

std::string encode(const Graph& g, const std::vector<int>& label) {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < g.n; ++v) {
    for (int w : g.adj[static_cast<std::size_t>(v)]) {
      if (v < w) {
        int a = label[static_cast<std::size_t>(v)];
        int b = label[static_cast<std::size_t>(w)];
        if (a > b) std::swap(a, b);
        e.emplace_back(a, b);
      }
    }
  }
  std::sort(e.begin(), e.end());
  std::string out;
  out.reserve(2 + 2 * e.size());
  out.push_back(static_cast<char>(g.n));
  for (auto [a, b] : e) {
    out.push_back(static_cast<char>(a));
    out.push_back(static_cast<char>(b));
  }
  return out;
}

void search(const Graph& g, const std::vector<int>& colour, std::optional<std::string>& best) {
  // First smallest non-singleton cell.
  std::vector<int> cell_size(static_cast<std::size_t>(g.n), 0);
  for (int c : colour) ++cell_size[static_cast<std::size_t>(c)];
  int target = -1;
  for (int c = 0; c < g.n; ++c) {
    const int sz = cell_size[static_cast<std::size_t>(c)];
    if (sz > 1 && (target < 0 || sz < cell_size[static_cast<std::size_t>(target)])) target = c;
  }
  if (target < 0) {
    auto code = encode(g, colour);
    if (!best || code < *best) best = std::move(code);
    return;
  }
  for (int v = 0; v < g.n; ++v) {
    if (colour[static_cast<std::size_t>(v)] != target) continue;
    std::vector<int> split(colour.size());
    for (std::size_t i = 0; i < colour.size(); ++i) split[i] = 2 * colour[i] + 1;
    split[static_cast<std::size_t>(v)] = 2 * target;
    search(g, refine(g, std::move(split)), best);
  }
}

std::string component_form(std::span<const Edge> edges) {
  std::map<int, int> index;
  for (const auto& e : edges) {
    index.try_emplace(e.u, 0);
    index.try_emplace(e.v, 0);
  }
  int next = 0;
  for (auto& [v, i] : index) i = next++;
  Graph g;
  g.n = next;
  g.adj.resize(static_cast<std::size_t>(next));
  for (const auto& e : edges) {
    const int a = index[e.u];
    const int b = index[e.v];
    g.adj[static_cast<std::size_t>(a)].push_back(b);
    g.adj[static_cast<std::size_t>(b)].push_back(a);
  }
  std::optional<std::string> best;
  search(g, refine(g, std::vector<int>(static_cast<std::size_t>(next), 0)), best);
  return *best;
}

}  // namespace

std::string canonical_form(std::span<const Edge> edges) {
  // Certify each component separately and sort; isomorphic graphs have the
  // same multiset of component classes.
  std::map<int, int> parent;
  std::function<int(int)> find = [&](int x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent[x] = x;
      return x;
    }
    if (it->second == x) return x;
    const int root = find(it->second);
    parent[x] = root;
    return root;
  };
  for (const auto& e : edges) {
    const int a = find(e.u);
    const int b = find(e.v);
    if (a != b) parent[a] = b;
  }
  std::map<int, std::vector<Edge>> parts;
  for (const auto& e : edges) parts[find(e.u)].push_back(e);
  std::vector<std::string> codes;
  codes.reserve(parts.size());
  for (auto& [root, part] : parts) codes.push_back(component_form(part));
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (const auto& c : codes) {
    out.push_back(static_cast<char>(c.size() & 0xff));
    out.push_back(static_cast<char>(c.size() >> 8));
    out += c;
  }
  return out;
}

}  // namespace spanlab
