#include "spanlab/density.hpp"

#include "spanlab/copyfamily.hpp"
#include "spanlab/random.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>
#include <unordered_set>

namespace spanlab {

namespace {

using Mask = std::uint64_t;

// Vertex and component counts of a small edge list, reusing scratch arrays.
class ShapeCounter {
 public:
  explicit ShapeCounter(int n) : parent_(static_cast<std::size_t>(n)), stamp_(static_cast<std::size_t>(n), 0) {}

  void count(std::span<const Edge> edges, int& vertices, int& comps) {
    ++epoch_;
    vertices = 0;
    comps = 0;
    for (const auto& e : edges) {
      for (int x : {e.u, e.v}) {
        auto xi = static_cast<std::size_t>(x);
        if (stamp_[xi] != epoch_) {
          stamp_[xi] = epoch_;
          parent_[xi] = x;
          ++vertices;
          ++comps;
        }
      }
      const int a = find(e.u);
      const int b = find(e.v);
      if (a != b) {
        parent_[static_cast<std::size_t>(a)] = b;
        --comps;
      }
    }
  }

 private:
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto xi = static_cast<std::size_t>(x);
      parent_[xi] = parent_[static_cast<std::size_t>(parent_[xi])];
      x = parent_[xi];
    }
    return x;
  }

  std::vector<int> parent_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
};

ComponentCheck evaluate(const StructureSpec& spec, std::size_t l, int vertices, int comps) {
  ComponentCheck out;
  out.edges = l;
  out.vertices = vertices;
  out.components = comps;
  const long long L = static_cast<long long>(l);
  const long long V = vertices;
  const long long c = comps;
  if (spec.kind == StructureKind::C4CycleOverlap2) {
    out.small_applies = 10 * L <= spec.n;
    out.small_holds = !out.small_applies || 3 * (V - c) >= 2 * L + c;
    out.large_holds = 3 * (V - c) >= 2 * L - 3;
    return out;
  }
  if (spec.s != 2 || spec.r < 4) {
    throw std::domain_error(spec.name() + ": component inequalities are stated for K_{r,2,n} with r >= 4");
  }
  const long long r = spec.r;
  out.small_applies = 2 * r * L <= spec.n;
  out.small_holds = !out.small_applies || (r + 1) * (V - c) >= 2 * L + c;
  out.large_holds = (r + 1) * V >= 2 * L;
  return out;
}

void require_kr2(const StructureSpec& spec, const std::string& claim) {
  spec.validate();
  if (spec.kind != StructureKind::KrsCycle || spec.s != 2 || spec.r < 4) {
    throw std::domain_error("claim '" + claim + "' applies to K_{r,2,n} with r >= 4, not " + spec.name());
  }
}

void require_c4(const StructureSpec& spec, const std::string& claim) {
  spec.validate();
  if (spec.kind != StructureKind::C4CycleOverlap2) {
    throw std::domain_error("claim '" + claim + "' applies to the C4 cycle, not " + spec.name());
  }
}

DensityVerdict make_verdict(const std::string& claim, const StructureSpec& spec) {
  DensityVerdict v;
  v.claim_id = claim;
  v.structure = spec.name();
  return v;
}

std::string str(long long x) { return std::to_string(x); }
std::string str(const Rational& x) { return x.str(); }

void add_violation(DensityVerdict& verdict, const DensityOptions& options, Violation v) {
  if (verdict.violations.size() < options.max_witnesses) {
    verdict.violations.push_back(std::move(v));
  } else if (verdict.violations.size() == options.max_witnesses) {
    verdict.violations.push_back({"further violations omitted", {}, {}, "", ""});
  }
}

// Largest induced edge count over v-subsets; falls back to sampling when the
// exhaustive search is over budget.
DensestSubset max_induced(const LabeledGraph& g, int v, const DensityOptions& options, bool& sampled) {
  if (binomial(g.n(), v) <= options.max_subsets) return densest_subset(g, v, options.max_subsets);
  sampled = true;
  DensestSubset best;
  bool any = false;
  for (std::size_t s = 0; s < options.samples; ++s) {
    Rng rng(mix_seed(options.seed, s));
    auto pick = random_subset(static_cast<std::size_t>(g.n()), static_cast<std::size_t>(v), rng);
    std::vector<int> vs(pick.begin(), pick.end());
    const auto e = induced_edge_count(g, vs);
    if (!any || e > best.edges) {
      best = {vs, e};
      any = true;
    }
  }
  return best;
}

int density_vmax(const StructureSpec& spec) { return spec.n / (2 * spec.r) + 1; }

// Edge subsets of the structure: all with at most cap edges, then samples.
void for_each_edge_subset(const LabeledGraph& g, const DensityOptions& options, bool& sampled,
                          const std::function<void(std::span<const Edge>)>& visit) {
  const auto& edges = g.edges();
  const std::size_t f = edges.size();
  const std::size_t cap = std::min(options.exhaustive_edge_cap, f);
  std::vector<Edge> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!pick.empty()) visit(pick);
    if (pick.size() == cap) return;
    for (std::size_t i = start; i < f; ++i) {
      pick.push_back(edges[i]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  if (cap >= f || options.samples == 0) return;
  sampled = true;
  for (std::size_t s = 0; s < options.samples; ++s) {
    Rng rng(mix_seed(options.seed, s));
    const auto size = cap + 1 + static_cast<std::size_t>(uniform_below(rng, f - cap));
    auto sub = random_subset(f, size, rng);
    pick.clear();
    for (auto i : sub) pick.push_back(edges[i]);
    visit(pick);
  }
}

DensityVerdict check_segment(const StructureSpec& spec, const DensityOptions& options) {
  require_kr2(spec, "segment");
  auto out = make_verdict("segment", spec);
  const auto g = build_structure(spec);
  const int step = spec.r - 2;
  for (int start = 0; start < spec.n; start += step) {
    for (int v = 2; v <= density_vmax(spec); ++v) {
      const auto seg = segment(spec.n, start, v);
      const auto observed = static_cast<long long>(induced_edge_count(g, seg));
      const auto claimed = segment_edge_formula(spec.r, v);
      ++out.instances_checked;
      if (observed != claimed) {
        add_violation(out, options, {"segment of length " + str(v) + " at clique start " + str(start), seg, {},
                                     str(observed), str(claimed)});
      }
    }
  }
  return out;
}

DensityVerdict check_easy_bound(const StructureSpec& spec, const DensityOptions& options) {
  require_kr2(spec, "easy-bound");
  auto out = make_verdict("easy-bound", spec);
  for (int v = 2; v <= spec.n; ++v) {
    const Rational lhs(segment_edge_formula(spec.r, v));
    const Rational rhs = easy_bound(spec.r, v);
    ++out.instances_checked;
    if (lhs > rhs) add_violation(out, options, {"v = " + str(v), {}, {}, str(lhs), "<= " + str(rhs)});
  }
  return out;
}

std::size_t best_segment(const LabeledGraph& g, int v, std::vector<int>& where) {
  std::size_t best = 0;
  for (int start = 0; start < g.n(); ++start) {
    auto seg = segment(g.n(), start, v);
    const auto e = induced_edge_count(g, seg);
    if (start == 0 || e > best) {
      best = e;
      where = seg;
    }
  }
  return best;
}

DensityVerdict check_densest_segment(const StructureSpec& spec, const DensityOptions& options) {
  require_kr2(spec, "densest-segment");
  auto out = make_verdict("densest-segment", spec);
  const auto g = build_structure(spec);
  const int step = spec.r - 2;
  for (int v = spec.r; v <= density_vmax(spec); ++v) {
    std::vector<int> where;
    const auto best = best_segment(g, v, where);
    std::size_t aligned = 0;
    for (int i = 0; i * step < spec.n; ++i) {
      const int first = i * step;
      const int last = first + spec.r - 1;
      aligned = std::max(aligned, induced_edge_count(g, segment(spec.n, first, v)));
      aligned = std::max(aligned, induced_edge_count(g, segment(spec.n, ((last - v + 1) % spec.n + spec.n) % spec.n, v)));
    }
    out.instances_checked += static_cast<std::uint64_t>(spec.n);
    if (aligned < best) {
      add_violation(out, options, {"length " + str(v) + ": best segment is not clique-aligned", where, {},
                                   str(static_cast<long long>(best)), str(static_cast<long long>(aligned))});
    }
  }
  return out;
}

DensityVerdict check_compression(const StructureSpec& spec, const DensityOptions& options) {
  require_kr2(spec, "compression");
  auto out = make_verdict("compression", spec);
  const auto g = build_structure(spec);
  for (int v = spec.r; v <= density_vmax(spec); ++v) {
    std::vector<int> where;
    const auto seg = best_segment(g, v, where);
    const auto dense = max_induced(g, v, options, out.sampled);
    out.instances_checked += static_cast<std::uint64_t>(binomial(spec.n, v).convert_to<double>());
    if (dense.edges > seg) {
      add_violation(out, options, {"size " + str(v) + ": a non-segment set is denser", dense.vertices, {},
                                   str(static_cast<long long>(dense.edges)), "<= " + str(static_cast<long long>(seg))});
    }
  }
  return out;
}

DensityVerdict check_density_bound(const StructureSpec& spec, const DensityOptions& options) {
  require_kr2(spec, "density-bound");
  auto out = make_verdict("density-bound", spec);
  const auto g = build_structure(spec);
  for (int v = 2; v <= density_vmax(spec); ++v) {
    const auto dense = max_induced(g, v, options, out.sampled);
    const Rational bound = easy_bound(spec.r, v);
    out.instances_checked += static_cast<std::uint64_t>(binomial(spec.n, v).convert_to<double>());
    if (Rational(dense.edges) > bound) {
      add_violation(out, options, {"|V| = " + str(v), dense.vertices, {},
                                   str(static_cast<long long>(dense.edges)), "<= " + str(bound)});
    }
  }
  return out;
}

DensityVerdict check_c4_edge_bound(const StructureSpec& spec, const DensityOptions& options) {
  require_c4(spec, "c4-edge-bound");
  auto out = make_verdict("c4-edge-bound", spec);
  const auto g = build_structure(spec);
  const int n = spec.n;
  const int vmax = n / 10;
  if (vmax < 4) return out;
  const auto m = pair_count(n);
  const auto adj = g.adjacency_lists();
  // Rooted expansion: grow connected edge sets one adjacent edge at a time,
  // deduplicating globally, while the vertex count stays within range.
  std::unordered_set<EdgeSet, EdgeSetHash> level;
  for (const auto& e : g.edges()) {
    EdgeSet s(m);
    s.insert(pair_index(n, e.u, e.v));
    level.insert(std::move(s));
  }
  std::uint64_t total = 0;
  while (!level.empty()) {
    std::unordered_set<EdgeSet, EdgeSetHash> next;
    for (const auto& s : level) {
      const auto edges = edges_of(n, s);
      const int v = edge_vertex_count(edges);
      if (v >= 4) {
        ++out.instances_checked;
        if (2 * static_cast<long long>(edges.size()) > 3LL * v - 4) {
          add_violation(out, options, {"connected subgraph on " + str(v) + " vertices", {}, edges,
                                       str(static_cast<long long>(edges.size())),
                                       "<= " + str(Rational(3 * v - 4, 2))});
        }
      }
      std::vector<int> verts;
      for (const auto& e : edges) {
        verts.push_back(e.u);
        verts.push_back(e.v);
      }
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      for (int x : verts) {
        for (int y : adj[static_cast<std::size_t>(x)]) {
          const auto idx = pair_index(n, x, y);
          if (s.contains(idx)) continue;
          const bool fresh = !std::binary_search(verts.begin(), verts.end(), y);
          if (fresh && v + 1 > vmax) continue;
          EdgeSet grown = s;
          grown.insert(idx);
          next.insert(std::move(grown));
        }
      }
    }
    total += next.size();
    if (total > options.max_subsets) {
      throw BudgetExceeded("connected subgraph enumeration exceeds the budget", BigInt(total));
    }
    level = std::move(next);
  }
  return out;
}

DensityVerdict check_components(const StructureSpec& spec, const std::string& claim, bool small,
                                const DensityOptions& options) {
  spec.validate();
  auto out = make_verdict(claim, spec);
  const auto g = build_structure(spec);
  ShapeCounter counter(spec.n);
  for_each_edge_subset(g, options, out.sampled, [&](std::span<const Edge> edges) {
    int v = 0, c = 0;
    counter.count(edges, v, c);
    const auto check = evaluate(spec, edges.size(), v, c);
    if (small && !check.small_applies) return;
    ++out.instances_checked;
    const bool ok = small ? check.small_holds : check.large_holds;
    if (!ok) {
      add_violation(out, options, {"l = " + str(static_cast<long long>(edges.size())) + ", |V| = " + str(v) +
                                       ", c = " + str(c),
                                   {}, std::vector<Edge>(edges.begin(), edges.end()), "violated", claim});
    }
  });
  return out;
}

}  // namespace

std::size_t induced_edge_count(const LabeledGraph& g, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.n()) throw std::invalid_argument("vertex outside the graph");
    in[static_cast<std::size_t>(v)] = 1;
  }
  std::size_t count = 0;
  for (const auto& e : g.edges()) {
    if (in[static_cast<std::size_t>(e.u)] && in[static_cast<std::size_t>(e.v)]) ++count;
  }
  return count;
}

long long segment_edge_formula(int r, int v) {
  if (r < 4) throw std::invalid_argument("segment formula needs r >= 4");
  if (v < 2) throw std::invalid_argument("segment formula needs v >= 2 (it is negative at v = 1)");
  const long long a = v / (r - 2);
  const long long b = v % (r - 2);
  const long long clique = static_cast<long long>(r) * (r - 1) / 2 - 1;
  return clique * a + b * (b - 1) / 2 - std::max(2 - b, 0LL) * (r - 2);
}

Rational easy_bound(int r, int v) {
  return Rational(static_cast<long long>(r + 1) * v - (r + 2), 2);
}

std::vector<int> segment(int n, int start, int length) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) out.push_back(((start + i) % n + n) % n);
  return out;
}

DensestSubset densest_subset(const LabeledGraph& g, int v, std::uint64_t max_subsets) {
  const int n = g.n();
  if (v < 1 || v > n) throw std::invalid_argument("densest_subset needs 1 <= v <= n");
  const BigInt space = binomial(n, v);
  if (space > max_subsets) {
    throw BudgetExceeded("densest_subset: C(" + std::to_string(n) + "," + std::to_string(v) + ") = " +
                             to_string(space) + " subsets exceed the budget of " + std::to_string(max_subsets),
                         space);
  }
  const auto adj = g.adjacency_masks();
  DensestSubset best;
  bool any = false;
  std::vector<int> pick;
  std::function<void(int, Mask, std::size_t)> rec = [&](int start, Mask chosen, std::size_t edges) {
    if (static_cast<int>(pick.size()) == v) {
      if (!any || edges > best.edges) {
        best = {pick, edges};
        any = true;
      }
      return;
    }
    const int need = v - static_cast<int>(pick.size());
    for (int x = start; x <= n - need; ++x) {
      pick.push_back(x);
      rec(x + 1, chosen | (Mask{1} << x),
          edges + static_cast<std::size_t>(std::popcount(adj[static_cast<std::size_t>(x)] & chosen)));
      pick.pop_back();
    }
  };
  rec(0, 0, 0);
  return best;
}

ComponentCheck component_inequalities(const StructureSpec& spec, const EdgeSet& I) {
  spec.validate();
  if (I.universe() != pair_count(spec.n)) throw std::invalid_argument("edge subset over the wrong ground set");
  if (!I.is_subset_of(build_structure(spec).edge_set())) {
    throw std::invalid_argument("I is not a subgraph of the canonical structure");
  }
  const auto edges = edges_of(spec.n, I);
  ShapeCounter counter(spec.n);
  int v = 0, c = 0;
  counter.count(edges, v, c);
  return evaluate(spec, edges.size(), v, c);
}

bool check_component_inequality(const StructureSpec& spec, const EdgeSet& I) {
  return component_inequalities(spec, I).holds();
}

const std::vector<std::string>& density_claims() {
  static const std::vector<std::string> ids = {"segment",       "easy-bound", "densest-segment",
                                               "compression",   "density-bound", "c4-edge-bound",
                                               "c4-small",      "c4-large",   "krs-small",
                                               "krs-large",     "all"};
  return ids;
}

DensityVerdict verify_density_lemma(const std::string& claim_id, const StructureSpec& spec,
                                    const DensityOptions& options) {
  if (claim_id == "segment") return check_segment(spec, options);
  if (claim_id == "easy-bound") return check_easy_bound(spec, options);
  if (claim_id == "densest-segment") return check_densest_segment(spec, options);
  if (claim_id == "compression") return check_compression(spec, options);
  if (claim_id == "density-bound") return check_density_bound(spec, options);
  if (claim_id == "c4-edge-bound") return check_c4_edge_bound(spec, options);
  if (claim_id == "c4-small") {
    require_c4(spec, claim_id);
    return check_components(spec, claim_id, true, options);
  }
  if (claim_id == "c4-large") {
    require_c4(spec, claim_id);
    return check_components(spec, claim_id, false, options);
  }
  if (claim_id == "krs-small") {
    require_kr2(spec, claim_id);
    return check_components(spec, claim_id, true, options);
  }
  if (claim_id == "krs-large") {
    require_kr2(spec, claim_id);
    return check_components(spec, claim_id, false, options);
  }
  if (claim_id == "all") {
    spec.validate();
    std::vector<std::string> ids;
    if (spec.kind == StructureKind::C4CycleOverlap2) {
      ids = {"c4-edge-bound", "c4-small", "c4-large"};
    } else {
      ids = {"segment", "easy-bound", "densest-segment", "compression", "density-bound", "krs-small", "krs-large"};
    }
    auto all = make_verdict("all", spec);
    for (const auto& id : ids) {
      auto part = verify_density_lemma(id, spec, options);
      all.instances_checked += part.instances_checked;
      all.sampled = all.sampled || part.sampled;
      for (auto& v : part.violations) {
        v.detail = id + ": " + v.detail;
        all.violations.push_back(std::move(v));
      }
    }
    return all;
  }
  throw std::invalid_argument("unknown claim id '" + claim_id + "'");
}

std::vector<BigInt> shape_histogram(const LabeledGraph& g, int l, std::uint64_t max_subsets) {
  const auto& edges = g.edges();
  const int f = static_cast<int>(edges.size());
  if (l < 0) throw std::invalid_argument("edge count must be non-negative");
  std::vector<BigInt> counts(static_cast<std::size_t>(l) + 1, 0);
  if (l > f) return counts;
  const BigInt space = binomial(f, l);
  if (space > max_subsets) {
    throw BudgetExceeded("subgraph count: C(" + std::to_string(f) + "," + std::to_string(l) + ") = " +
                             to_string(space) + " subsets exceed the budget of " + std::to_string(max_subsets),
                         space);
  }
  ShapeCounter counter(g.n());
  std::vector<std::uint64_t> tally(static_cast<std::size_t>(l) + 1, 0);
  std::vector<Edge> pick;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == l) {
      int v = 0, c = 0;
      counter.count(pick, v, c);
      ++tally[static_cast<std::size_t>(c)];
      return;
    }
    const int need = l - static_cast<int>(pick.size());
    for (int i = start; i <= f - need; ++i) {
      pick.push_back(edges[static_cast<std::size_t>(i)]);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  for (std::size_t c = 0; c < tally.size(); ++c) counts[c] = tally[c];
  return counts;
}

BigInt count_subgraphs_by_shape(const LabeledGraph& g, int l, int c, std::uint64_t max_subsets) {
  if (c < 0 || c > l) return 0;
  return shape_histogram(g, l, max_subsets)[static_cast<std::size_t>(c)];
}

Rational subgraph_count_bound_floor(const LabeledGraph& g, int l, int c) {
  const Rational e_low(BigInt(2718281828LL), BigInt(1000000000LL));
  const Rational base = 4 * e_low * g.max_degree();
  Rational power = 1;
  for (int i = 0; i < l; ++i) power *= base;
  return power * binomial(static_cast<int>(g.edge_count()), c);
}

Rational gamma_riordan(const LabeledGraph& g, std::uint64_t max_subsets) {
  if (g.n() < 3) throw std::invalid_argument("gamma needs at least 3 vertices");
  Rational best = 0;
  for (int v = 3; v <= g.n(); ++v) {
    const auto dense = densest_subset(g, v, max_subsets);
    best = std::max(best, Rational(static_cast<long long>(dense.edges), v - 2));
  }
  return best;
}

}  // namespace spanlab
