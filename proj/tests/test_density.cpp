#include "catch_amalgamated.hpp"

#include "spanlab/density.hpp"
#include "spanlab/structures.hpp"

#include <numeric>

using namespace spanlab;

namespace {

EdgeSet edges(int n, std::initializer_list<Edge> list) {
  EdgeSet s(pair_count(n));
  for (const auto& e : list) s.insert(pair_index(n, e.u, e.v));
  return s;
}

LabeledGraph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  e.push_back({0, n - 1});
  return LabeledGraph(n, e);
}

}  // namespace

TEST_CASE("induced edge counts") {
  const auto g = build_structure(StructureSpec::krs_cycle(4, 2, 12));
  CHECK(induced_edge_count(g, std::vector<int>{}) == 0);
  std::vector<int> all(12);
  std::iota(all.begin(), all.end(), 0);
  CHECK(induced_edge_count(g, all) == g.edge_count());
  CHECK(induced_edge_count(g, segment(12, 0, 5)) == 8);
  CHECK(segment(12, 10, 4) == std::vector<int>{10, 11, 0, 1});
}

TEST_CASE("segment formula") {
  CHECK(segment_edge_formula(4, 4) == 6);
  CHECK(segment_edge_formula(4, 5) == 8);
  CHECK(segment_edge_formula(5, 3) == 3);
  CHECK_THROWS_AS(segment_edge_formula(3, 4), std::invalid_argument);
  CHECK_THROWS_AS(segment_edge_formula(4, 1), std::invalid_argument);
  for (int r = 4; r <= 7; ++r) {
    const auto g = build_structure(StructureSpec::krs_cycle(r, 2, 8 * (r - 2)));
    for (int v = 2; v <= 3 * r; ++v) {
      INFO("r=" << r << " v=" << v);
      REQUIRE(static_cast<long long>(induced_edge_count(g, segment(g.n(), 0, v))) == segment_edge_formula(r, v));
    }
  }
}

TEST_CASE("easy bound dominates segments") {
  CHECK(easy_bound(4, 5) == Rational(19, 2));
  CHECK(easy_bound(4, 2) == 2);
  CHECK(easy_bound(6, 4) == 10);
  for (int r = 4; r <= 7; ++r)
    for (int v = 2; v <= 40; ++v) REQUIRE(Rational(segment_edge_formula(r, v)) <= easy_bound(r, v));
}

TEST_CASE("densest subsets") {
  const auto k = build_structure(StructureSpec::krs_cycle(4, 2, 32));
  const auto best = densest_subset(k, 5);
  CHECK(best.edges == 8);
  CHECK(induced_edge_count(k, best.vertices) == 8);

  const auto cube = build_structure(StructureSpec::c4_cycle(8));
  CHECK(densest_subset(cube, 4).edges == 4);
  CHECK(densest_subset(cube, 8).edges == 12);
  CHECK_THROWS_AS(densest_subset(k, 10, 1000), BudgetExceeded);
}

TEST_CASE("component inequalities at the tight cases") {
  const auto c4 = StructureSpec::c4_cycle(40);
  const auto single = component_inequalities(c4, edges(40, {{0, 1}}));
  CHECK(single.vertices == 2);
  CHECK(single.components == 1);
  CHECK(single.small_applies);
  CHECK(single.holds());
  const auto square = component_inequalities(c4, edges(40, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(square.edges == 4);
  CHECK(square.vertices == 4);
  CHECK(square.holds());

  const auto krs = StructureSpec::krs_cycle(4, 2, 40);
  const auto k4 = component_inequalities(krs, edges(40, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
  CHECK(k4.vertices == 4);
  CHECK(k4.holds());
  CHECK(check_component_inequality(krs, edges(40, {{0, 1}})));
  CHECK_THROWS_AS(component_inequalities(c4, edges(40, {{0, 5}})), std::invalid_argument);
}

TEST_CASE("density claims pass on small structures") {
  DensityOptions opts;
  opts.samples = 2000;
  opts.seed = 3;
  for (const auto& claim : {"segment", "easy-bound", "densest-segment", "compression", "density-bound"}) {
    INFO(claim);
    CHECK(verify_density_lemma(claim, StructureSpec::krs_cycle(4, 2, 24), opts).pass());
  }
  CHECK(verify_density_lemma("all", StructureSpec::c4_cycle(20), opts).pass());
  CHECK(verify_density_lemma("all", StructureSpec::krs_cycle(5, 2, 30), opts).pass());
  CHECK_THROWS_AS(verify_density_lemma("no-such-claim", StructureSpec::c4_cycle(20), opts), std::invalid_argument);
  CHECK_THROWS_AS(verify_density_lemma("c4-small", StructureSpec::krs_cycle(4, 2, 24), opts), std::domain_error);
}

TEST_CASE("subgraph counts by shape") {
  const auto tri = LabeledGraph::complete(3);
  CHECK(count_subgraphs_by_shape(tri, 2, 1) == 3);
  CHECK(count_subgraphs_by_shape(tri, 1, 1) == 3);
  CHECK(count_subgraphs_by_shape(tri, 1, 2) == 0);
  // Python reference: histograms of l-edge subsets by component count
  const auto cube = build_structure(StructureSpec::c4_cycle(8));
  CHECK(shape_histogram(cube, 2) == std::vector<BigInt>{0, 24, 42});
  CHECK(shape_histogram(cube, 4) == std::vector<BigInt>{0, 126, 264, 96, 9});
  CHECK(shape_histogram(cube, 5) == std::vector<BigInt>{0, 276, 408, 108, 0, 0});
  const auto k = build_structure(StructureSpec::krs_cycle(4, 2, 8));
  CHECK(shape_histogram(k, 3) == std::vector<BigInt>{0, 368, 608, 164});
  CHECK(shape_histogram(k, 4) == std::vector<BigInt>{0, 1668, 2456, 688, 33});
  // (4e*3)^2 C(12,2) is far above 42
  CHECK(Rational(42) <= subgraph_count_bound_floor(cube, 2, 2));
}

TEST_CASE("gamma") {
  CHECK(gamma_riordan(LabeledGraph::complete(4)) == 3);
  CHECK(gamma_riordan(cycle(8)) == 2);
  CHECK(gamma_riordan(build_structure(StructureSpec::krs_cycle(4, 3, 12))) == Rational(18, 5));
  CHECK(gamma_riordan(build_structure(StructureSpec::krs_cycle(5, 3, 12))) == Rational(21, 5));
  CHECK(gamma_riordan(build_structure(StructureSpec::krs_cycle(4, 1, 12))) == 3);
}
