#include "spanlab/structures.hpp"

#include "spanlab/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace spanlab {

void StructureSpec::validate() const {
  auto fail = [this](const std::string& why) {
    throw std::invalid_argument(name() + ": " + why);
  };
  if (kind == StructureKind::C4CycleOverlap2) {
    if (n % 2 != 0) fail("n must be even");
    if (n < 6) fail("n must be at least 6");
    return;
  }
  if (r < 3) fail("r must be at least 3");
  if (s < 0 || s >= r) fail("need 0 <= s < r");
  if (n <= 0 || n % (r - s) != 0) fail("(r-s) must divide n");
  // With s >= 1 two cliques would overlap on both sides; a K_r-factor only needs two blocks.
  if (s >= 1 && n / (r - s) < 3) fail("need n/(r-s) >= 3");
  if (n <= r) fail("need n > r");
}

bool StructureSpec::valid() const {
  try {
    validate();
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string StructureSpec::name() const {
  if (kind == StructureKind::C4CycleOverlap2) return "C4e(n=" + std::to_string(n) + ")";
  return "K(r=" + std::to_string(r) + ",s=" + std::to_string(s) + ",n=" + std::to_string(n) + ")";
}

Ordering Ordering::identity(int n) {
  Ordering o;
  o.perm.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) o.perm[static_cast<std::size_t>(i)] = i;
  return o;
}

void Ordering::validate(int n) const {
  if (perm.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("ordering has " + std::to_string(perm.size()) +
                                " entries, expected " + std::to_string(n));
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : perm) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("ordering is not a permutation of [0,n)");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

LabeledGraph build_structure(const StructureSpec& spec) {
  spec.validate();
  const int n = spec.n;
  std::vector<Edge> edges;
  if (spec.kind == StructureKind::C4CycleOverlap2) {
    // Position 2i holds v_{2i+1} (odd labels), 2i+1 holds v_{2i+2} (even labels).
    const int half = n / 2;
    for (int i = 0; i < half; ++i) {
      const int next = (i + 1) % half;
      edges.push_back({2 * i, 2 * i + 1});
      edges.push_back({std::min(2 * i, 2 * next), std::max(2 * i, 2 * next)});
      edges.push_back({std::min(2 * i + 1, 2 * next + 1), std::max(2 * i + 1, 2 * next + 1)});
    }
    return LabeledGraph(n, std::move(edges));
  }
  const int step = spec.r - spec.s;
  const int cliques = n / step;
  for (int i = 0; i < cliques; ++i) {
    for (int a = 0; a < spec.r; ++a) {
      for (int b = a + 1; b < spec.r; ++b) {
        const int u = (i * step + a) % n;
        const int v = (i * step + b) % n;
        edges.push_back({std::min(u, v), std::max(u, v)});
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return LabeledGraph(n, std::move(edges));
}

LabeledGraph structure_from_ordering(const StructureSpec& spec, const Ordering& sigma) {
  sigma.validate(spec.n);
  return build_structure(spec).relabeled(sigma.perm);
}

std::size_t expected_edge_count(const StructureSpec& spec) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.n);
  if (spec.kind == StructureKind::C4CycleOverlap2) return 3 * n / 2;
  return static_cast<std::size_t>(spec.r + spec.s - 1) * n / 2;
}

DegreeProfile expected_degree_profile(const StructureSpec& spec) {
  spec.validate();
  if (spec.kind == StructureKind::C4CycleOverlap2) return {3, 3, spec.n, 0};
  if (2 * spec.s > spec.r) {
    throw std::domain_error(spec.name() + ": heavy/light profile requires s <= r/2");
  }
  const int blocks = spec.n / (spec.r - spec.s);
  DegreeProfile p;
  p.heavy_degree = 2 * spec.r - spec.s - 1;
  p.light_degree = spec.r - 1;
  p.heavy_count = spec.s * blocks;
  p.light_count = (spec.r - 2 * spec.s) * blocks;
  return p;
}

BigInt ordering_stabilizer_size(const StructureSpec& spec) {
  spec.validate();
  if (spec.kind == StructureKind::KrsCycle && 2 * spec.s > spec.r) {
    throw std::domain_error(spec.name() + ": stabilizer size is only supported for s <= r/2");
  }
  return count_automorphisms(build_structure(spec));
}

BigInt closed_form_stabilizer(const StructureSpec& spec) {
  spec.validate();
  if (spec.kind == StructureKind::C4CycleOverlap2) return BigInt(2 * spec.n);
  if (2 * spec.s > spec.r) {
    throw std::domain_error(spec.name() + ": closed form requires s <= r/2");
  }
  if (spec.s == 0) {
    const int blocks = spec.n / spec.r;
    return boost::multiprecision::pow(factorial(spec.r), static_cast<unsigned>(blocks)) *
           factorial(blocks);
  }
  const int blocks = spec.n / (spec.r - spec.s);
  const auto b = static_cast<unsigned>(blocks);
  return BigInt(2 * blocks) * boost::multiprecision::pow(factorial(spec.r - 2 * spec.s), b) *
         boost::multiprecision::pow(factorial(spec.s), b);
}

}  // namespace spanlab
