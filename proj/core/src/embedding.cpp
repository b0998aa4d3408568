#include "spanlab/embedding.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace spanlab {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

class Embedder {
 public:
  Embedder(const LabeledGraph& pattern, const LabeledGraph& host, const EmbeddingOptions& options)
      : n_(pattern.n()),
        budget_(options.node_budget),
        pattern_adj_(pattern.adjacency_lists()),
        host_adj_(host.adjacency_masks()),
        map_(static_cast<std::size_t>(n_), -1),
        domain_(static_cast<std::size_t>(n_), 0) {
    const auto pdeg = pattern.degrees();
    const auto hdeg = host.degrees();
    Mask pinned_hosts = 0;
    std::vector<int> pinned_to(static_cast<std::size_t>(n_), -1);
    for (auto [p, h] : options.pinned) {
      if (p < 0 || p >= n_ || h < 0 || h >= n_) throw std::invalid_argument("pin out of range");
      if (pinned_to[static_cast<std::size_t>(p)] >= 0 && pinned_to[static_cast<std::size_t>(p)] != h) {
        infeasible_ = true;
      }
      if ((pinned_hosts & bit(h)) && pinned_to[static_cast<std::size_t>(p)] != h) infeasible_ = true;
      pinned_to[static_cast<std::size_t>(p)] = h;
      pinned_hosts |= bit(h);
    }
    for (int p = 0; p < n_; ++p) {
      const auto pi = static_cast<std::size_t>(p);
      if (pinned_to[pi] >= 0) {
        domain_[pi] = bit(pinned_to[pi]);
        if (hdeg[static_cast<std::size_t>(pinned_to[pi])] < pdeg[pi]) infeasible_ = true;
        continue;
      }
      Mask d = 0;
      for (int h = 0; h < n_; ++h) {
        if (hdeg[static_cast<std::size_t>(h)] >= pdeg[pi] && !(pinned_hosts & bit(h))) d |= bit(h);
      }
      domain_[pi] = d;
      if (d == 0) infeasible_ = true;
    }
    build_order(pinned_to, pdeg);
  }

  EmbeddingResult run() {
    EmbeddingResult result;
    if (infeasible_) {
      result.status = SearchStatus::Absent;
      return result;
    }
    const bool found = search(0);
    result.nodes = nodes_;
    if (aborted_) {
      result.status = SearchStatus::Unknown;
    } else if (found) {
      result.status = SearchStatus::Found;
      result.map = map_;
    } else {
      result.status = SearchStatus::Absent;
    }
    return result;
  }

 private:
  void build_order(const std::vector<int>& pinned_to, const std::vector<int>& pdeg) {
    std::vector<char> placed(static_cast<std::size_t>(n_), 0);
    std::vector<int> links(static_cast<std::size_t>(n_), 0);
    auto place = [&](int p) {
      order_.push_back(p);
      placed[static_cast<std::size_t>(p)] = 1;
      for (int q : pattern_adj_[static_cast<std::size_t>(p)]) ++links[static_cast<std::size_t>(q)];
    };
    for (int p = 0; p < n_; ++p)
      if (pinned_to[static_cast<std::size_t>(p)] >= 0) place(p);
    while (static_cast<int>(order_.size()) < n_) {
      int best = -1;
      for (int p = 0; p < n_; ++p) {
        const auto pi = static_cast<std::size_t>(p);
        if (placed[pi]) continue;
        if (best < 0) {
          best = p;
          continue;
        }
        const auto bi = static_cast<std::size_t>(best);
        if (links[pi] > links[bi] || (links[pi] == links[bi] && pdeg[pi] > pdeg[bi])) best = p;
      }
      place(best);
    }
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int p = order_[depth];
    const auto pi = static_cast<std::size_t>(p);
    Mask cand = domain_[pi] & ~used_;
    while (cand) {
      const int h = std::countr_zero(cand);
      cand &= cand - 1;
      if (++nodes_ > budget_) {
        aborted_ = true;
        return false;
      }
      map_[pi] = h;
      used_ |= bit(h);
      // Narrow the domains of unplaced neighbours; undo on backtrack.
      saved_.clear();
      bool dead = false;
      const std::size_t mark = trail_.size();
      for (int q : pattern_adj_[pi]) {
        const auto qi = static_cast<std::size_t>(q);
        if (map_[qi] >= 0) continue;
        trail_.emplace_back(q, domain_[qi]);
        domain_[qi] &= host_adj_[static_cast<std::size_t>(h)];
        if ((domain_[qi] & ~used_) == 0) dead = true;
      }
      if (!dead && search(depth + 1)) return true;
      while (trail_.size() > mark) {
        domain_[static_cast<std::size_t>(trail_.back().first)] = trail_.back().second;
        trail_.pop_back();
      }
      used_ &= ~bit(h);
      map_[pi] = -1;
      if (aborted_) return false;
    }
    return false;
  }

  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  bool infeasible_ = false;
  std::vector<std::vector<int>> pattern_adj_;
  std::vector<Mask> host_adj_;
  std::vector<int> map_;
  std::vector<Mask> domain_;
  std::vector<int> order_;
  Mask used_ = 0;
  std::vector<std::pair<int, Mask>> trail_;
  std::vector<Mask> saved_;
};

// Orbit of v under the group generated by gens.
std::vector<int> orbit_closure(int v, const std::vector<std::vector<int>>& gens, int n) {
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  std::vector<int> orbit{v};
  in[static_cast<std::size_t>(v)] = 1;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& g : gens) {
      const int w = g[static_cast<std::size_t>(orbit[i])];
      if (!in[static_cast<std::size_t>(w)]) {
        in[static_cast<std::size_t>(w)] = 1;
        orbit.push_back(w);
      }
    }
  }
  return orbit;
}

std::vector<int> require_automorphism(const LabeledGraph& g, std::vector<std::pair<int, int>> pins,
                                      std::uint64_t budget, bool& found) {
  EmbeddingOptions opts;
  opts.node_budget = budget;
  opts.pinned = std::move(pins);
  auto res = find_spanning_embedding(g, g, opts);
  if (res.status == SearchStatus::Unknown) {
    throw std::runtime_error("automorphism search exceeded its node budget of " +
                             std::to_string(budget));
  }
  found = res.status == SearchStatus::Found;
  return found ? *res.map : std::vector<int>{};
}

}  // namespace

EmbeddingResult find_spanning_embedding(const LabeledGraph& pattern, const LabeledGraph& host,
                                        const EmbeddingOptions& options) {
  if (pattern.n() != host.n()) {
    throw std::invalid_argument("spanning embedding needs equal vertex counts");
  }
  if (pattern.n() > 64) throw std::invalid_argument("embedding search supports n <= 64");
  if (pattern.edge_count() > host.edge_count()) return {SearchStatus::Absent, std::nullopt, 0};
  return Embedder(pattern, host, options).run();
}

BigInt count_automorphisms(const LabeledGraph& g, std::uint64_t node_budget) {
  const int n = g.n();
  const auto deg = g.degrees();
  BigInt total = 1;
  std::vector<std::pair<int, int>> fixed;
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<int>> gens;
    auto orbit = orbit_closure(v, gens, n);
    for (int w = 0; w < n; ++w) {
      if (deg[static_cast<std::size_t>(w)] != deg[static_cast<std::size_t>(v)]) continue;
      if (std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
      auto pins = fixed;
      pins.emplace_back(v, w);
      bool found = false;
      auto phi = require_automorphism(g, std::move(pins), node_budget, found);
      if (found) {
        gens.push_back(std::move(phi));
        orbit = orbit_closure(v, gens, n);
      }
    }
    total *= orbit.size();
    fixed.emplace_back(v, v);
  }
  return total;
}

std::vector<int> orbit_representatives(const LabeledGraph& g, std::uint64_t node_budget) {
  const int n = g.n();
  const auto deg = g.degrees();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };
  for (int v = 0; v < n; ++v) {
    if (find(v) != v) continue;
    for (int w = v + 1; w < n; ++w) {
      if (deg[static_cast<std::size_t>(w)] != deg[static_cast<std::size_t>(v)]) continue;
      if (find(w) == v) continue;
      bool found = false;
      auto phi = require_automorphism(g, {{v, w}}, node_budget, found);
      if (!found) continue;
      for (int x = 0; x < n; ++x) unite(x, phi[static_cast<std::size_t>(x)]);
    }
  }
  std::vector<int> reps;
  for (int v = 0; v < n; ++v)
    if (find(v) == v) reps.push_back(v);
  return reps;
}

}  // namespace spanlab
