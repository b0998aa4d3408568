#include "catch_amalgamated.hpp"

#include "spanlab/canonical.hpp"
#include "spanlab/random.hpp"
#include "spanlab/structures.hpp"
#include "spanlab/threshold.hpp"

#include <algorithm>
#include <numeric>
#include <set>

using namespace spanlab;

namespace {

std::vector<Edge> relabel(const std::vector<Edge>& edges, const std::vector<int>& perm) {
  std::vector<Edge> out;
  for (const auto& e : edges) {
    const int u = perm[static_cast<std::size_t>(e.u)];
    const int v = perm[static_cast<std::size_t>(e.v)];
    out.push_back({std::min(u, v), std::max(u, v)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
  Rng rng(11);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto g = sample_gnp(9, 0.4, seed);
    std::vector<int> perm(9);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    REQUIRE(canonical_form(g.edges()) == canonical_form(relabel(g.edges(), perm)));
  }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  const std::vector<Edge> path3{{0, 1}, {1, 2}, {2, 3}};
  const std::vector<Edge> star3{{0, 1}, {0, 2}, {0, 3}};
  const std::vector<Edge> two_edges{{0, 1}, {2, 3}};
  const std::vector<Edge> path2{{0, 1}, {1, 2}};
  CHECK(canonical_form(path3) != canonical_form(star3));
  CHECK(canonical_form(two_edges) != canonical_form(path2));
  // isolated vertex labels do not matter: only spanned vertices count
  CHECK(canonical_form(std::vector<Edge>{{5, 9}}) == canonical_form(std::vector<Edge>{{0, 1}}));

  // C6 vs two triangles: same degree sequence, refinement alone cannot split them
  const std::vector<Edge> c6{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}};
  const std::vector<Edge> tt{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}};
  CHECK(canonical_form(c6) != canonical_form(tt));

  // the cube and the circular ladder on 8 vertices are cubic and not isomorphic
  const auto cube = build_structure(StructureSpec::c4_cycle(8)).edges();
  std::vector<Edge> mobius;
  for (int i = 0; i < 8; ++i) mobius.push_back({std::min(i, (i + 1) % 8), std::max(i, (i + 1) % 8)});
  for (int i = 0; i < 4; ++i) mobius.push_back({i, i + 4});
  CHECK(canonical_form(cube) != canonical_form(mobius));
}

TEST_CASE("number of isomorphism classes of small edge sets") {
  // graphs with 3 edges and no isolated vertices: triangle, P4, star, P3+K2, 3K2
  const auto k6 = LabeledGraph::complete(6).edges();
  std::set<std::string> forms;
  for (std::size_t a = 0; a < k6.size(); ++a)
    for (std::size_t b = a + 1; b < k6.size(); ++b)
      for (std::size_t c = b + 1; c < k6.size(); ++c)
        forms.insert(canonical_form(std::vector<Edge>{k6[a], k6[b], k6[c]}));
  CHECK(forms.size() == 5);
}
