#include "catch_amalgamated.hpp"

#include "spanlab/copyfamily.hpp"
#include "spanlab/spreadness.hpp"
#include "spanlab/structures.hpp"

#include <cmath>

using namespace spanlab;

namespace {

EdgeSet edges(int n, std::initializer_list<Edge> list) {
  EdgeSet s(pair_count(n));
  for (const auto& e : list) s.insert(pair_index(n, e.u, e.v));
  return s;
}

const CopyFamily& cube_family() {
  static const auto f = enumerate_copies(StructureSpec::c4_cycle(8));
  return f;
}

}  // namespace

TEST_CASE("components of an edge subset") {
  CHECK(components(edges(8, {{0, 1}}), 8) == 1);
  CHECK(components(edges(8, {{0, 1}, {2, 3}}), 8) == 2);
  CHECK(components(edges(8, {{0, 1}, {1, 2}}), 8) == 1);
  CHECK(components(EdgeSet(28), 8) == 0);
}

TEST_CASE("spread ratios on the C4 cycle family") {
  const auto& f = cube_family();
  const auto canonical = build_structure(f.spec()).edge_set();
  CHECK(spread_ratio(f, canonical) == Catch::Approx(std::pow(1.0 / 840, 1.0 / 12)).epsilon(1e-12));
  CHECK(spread_fraction(f, edges(8, {{0, 1}})) == Rational(3, 7));
  CHECK(spread_ratio(f, edges(8, {{0, 1}})) == Catch::Approx(3.0 / 7.0));
  // a triangle lies in no copy: the cube is bipartite
  CHECK(spread_ratio(f, edges(8, {{0, 1}, {1, 2}, {0, 2}})) == 0.0);
  CHECK_THROWS_AS(spread_ratio(f, EdgeSet(28)), std::invalid_argument);
}

TEST_CASE("superspread verdicts") {
  const auto& f = cube_family();
  SpreadOptions opts;
  opts.samples = 2000;
  opts.seed = 5;
  const auto q1 = verify_superspread(f, 1.0, 1.0 / 3, 1.0 / 15, opts);
  CHECK(q1.pass);
  CHECK(q1.worst_margin <= 1.0);

  const auto lemma = verify_superspread(f, 250 * std::pow(8.0, -2.0 / 3), 1.0 / 3, 1.0 / 15, opts);
  CHECK(lemma.pass);
  CHECK(lemma.superspread_cap == 0);  // floor(12/15)
  CHECK(lemma.search_mode == "sampled");

  const auto too_small = verify_superspread(f, 0.3, 1.0 / 3, 1.0 / 15, opts);
  CHECK_FALSE(too_small.pass);
  CHECK(too_small.worst_margin > 1.0);
}

TEST_CASE("minimal constant agrees with an exhaustive reference") {
  const auto& f = cube_family();
  // exhaustive value from a Python scan over all 4095 subsets of the canonical copy
  constexpr double reference = 2.2822859191024016;
  SpreadOptions all;
  all.exhaustive_cap = 12;
  const auto exact = minimal_superspread_constant(f, 1.0 / 3, 1.0 / 15, -2.0 / 3, all);
  CHECK(exact.search_mode == "exhaustive");
  CHECK(exact.value == Catch::Approx(reference).epsilon(1e-9));

  SpreadOptions sampled;
  sampled.samples = 5000;
  sampled.seed = 1;
  const auto approx = minimal_superspread_constant(f, 1.0 / 3, 1.0 / 15, -2.0 / 3, sampled);
  CHECK(approx.value <= reference * (1 + 1e-9));

  // verifying at the minimal constant passes, slightly below fails
  const double q = exact.value * std::pow(8.0, -2.0 / 3);
  CHECK(verify_superspread(f, q, 1.0 / 3, 1.0 / 15, all).pass);
  CHECK_FALSE(verify_superspread(f, q * 0.999, 1.0 / 3, 1.0 / 15, all).pass);
}

TEST_CASE("single-copy family needs q >= 1") {
  const auto f = enumerate_copies(StructureSpec::krs_cycle(4, 2, 6));
  REQUIRE(f.size() == 1);
  SpreadOptions all;
  all.exhaustive_cap = 15;
  const auto c = minimal_superspread_constant(f, 1.0 / 5, 1.0 / 20, -2.0 / 5, all);
  CHECK(c.value * std::pow(6.0, -2.0 / 5) == Catch::Approx(1.0));
}

TEST_CASE("K(4,2,8) self-consistency at the measured constant") {
  const auto f = enumerate_copies(StructureSpec::krs_cycle(4, 2, 8));
  SpreadOptions opts;
  opts.samples = 3000;
  opts.seed = 9;
  const auto survey = survey_subsets(f, opts);
  const auto c = minimal_superspread_constant(f, survey, 1.0 / 5, 1.0 / 20, -2.0 / 5);
  CHECK(std::isfinite(c.value));
  CHECK(c.value > 0);
  const double q = c.value * std::pow(8.0, -2.0 / 5);
  CHECK(verify_superspread(f, survey, q, 1.0 / 5, 1.0 / 20).pass);
}

TEST_CASE("survey is reproducible and worker-independent") {
  const auto& f = cube_family();
  SpreadOptions a;
  a.samples = 3000;
  a.seed = 4;
  auto b = a;
  b.workers = 3;
  const auto sa = survey_subsets(f, a);
  const auto sb = survey_subsets(f, b);
  REQUIRE(sa.classes.size() == sb.classes.size());
  for (std::size_t i = 0; i < sa.classes.size(); ++i) {
    CHECK(sa.classes[i].witness == sb.classes[i].witness);
    CHECK(sa.classes[i].count == sb.classes[i].count);
  }
}
