#include "catch_amalgamated.hpp"

#include "spanlab/copyfamily.hpp"
#include "spanlab/fragmentation.hpp"
#include "spanlab/random.hpp"
#include "spanlab/structures.hpp"

#include <cmath>

using namespace spanlab;

namespace {

EdgeSet set6(std::initializer_list<std::uint32_t> xs) {
  return EdgeSet::from_indices(6, std::vector<std::uint32_t>(xs));
}

// A = {0,1,2}, B = {1,2,3}, C = {3,4,5}
std::vector<EdgeSet> tiny() { return {set6({0, 1, 2}), set6({1, 2, 3}), set6({3, 4, 5})}; }

const CopyFamily& cube_family() {
  static const auto f = enumerate_copies(StructureSpec::c4_cycle(8));
  return f;
}

}  // namespace

TEST_CASE("fragments on a hand instance") {
  const auto H = tiny();
  const auto X = set6({2, 3});
  // both A and B lie in A ∪ X; [0,1] precedes [1] lexicographically
  CHECK(fragments_of(H, H[0], X, 3) == std::vector<EdgeSet>{set6({0, 1}), set6({1})});
  CHECK(fragments_of(H, H[0], X, 1) == std::vector<EdgeSet>{set6({1})});
  CHECK(fragments_of(H, H[0], X, 0).empty());
  CHECK(classify_pair(H, H[0], X, 1) == PairClass::Good);
  CHECK(classify_pair(H, H[0], X, 0) == PairClass::Bad);
  CHECK(classify_pair(H, H[2], X, 1) == PairClass::Bad);
  CHECK(classify_pair(H, H[2], X, 2) == PairClass::Good);

  const auto next = fragment_step(initial_state(H), X, 1);
  CHECK(next.good_count == 2);
  REQUIRE(next.fragments.size() == 2);
  CHECK(next.fragments[0].edges == set6({1}));
  CHECK(next.fragments[0].origin == 0);
  CHECK(next.fragments[1].edges == set6({1}));
  CHECK(next.fragments[1].origin == 1);
  CHECK(next.exposed == X);
  CHECK(next.round == 1);
}

TEST_CASE("trivial fragment cases") {
  const auto H = tiny();
  CHECK(fragments_of(H, H[1], EdgeSet::full(6), 0) == std::vector<EdgeSet>{EdgeSet(6)});
  const auto plain = fragments_of(H, H[1], EdgeSet(6), 3);
  REQUIRE(plain.size() == 1);
  CHECK(plain[0] == H[1]);
  CHECK(classify_pair(H, H[1], EdgeSet(6), 2) == PairClass::Bad);

  const auto all = fragment_step(initial_state(H), EdgeSet::full(6), 0);
  CHECK(all.good_count == 3);
  for (const auto& f : all.fragments) CHECK(f.edges.empty());

  const auto same = fragment_step(initial_state(H), EdgeSet(6), 3);
  CHECK(same.sets() == H);
}

TEST_CASE("exposing one copy of the cube family") {
  const auto& f = cube_family();
  const auto X = build_structure(f.spec()).edge_set();
  const auto next = fragment_step(initial_state(f), X, 12);
  REQUIRE(next.good_count == f.size());
  REQUIRE(next.fragments.size() == f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    // direct scan for the smallest J \ X
    const auto SX = f[i] | X;
    std::optional<EdgeSet> best;
    for (const auto& J : f.copies()) {
      if (!J.is_subset_of(SX)) continue;
      const auto R = J - X;
      if (!best || R.lex_less(*best)) best = R;
    }
    REQUIRE(next.fragments[i].edges == *best);
    REQUIRE(next.fragments[i].origin == i);
  }
}

TEST_CASE("bad-pair expectation at the extremes") {
  const auto& f = cube_family();
  const auto full = estimate_bad_pair_expectation(f.copies(), 28, 0, 5, 1, 4.0);
  CHECK(full.mean == 0.0);
  const auto none = estimate_bad_pair_expectation(f.copies(), 0, 11, 5, 1, 4.0);
  CHECK(none.mean == 840.0);
  CHECK(none.rhs == Catch::Approx(2 * std::pow(4.0, -11.0 / 3) * 840));
  const auto a = estimate_bad_pair_expectation(f.copies(), 14, 6, 50, 3, 4.0, 1);
  const auto b = estimate_bad_pair_expectation(f.copies(), 14, 6, 50, 3, 4.0, 4);
  CHECK(a.mean == b.mean);
  CHECK(a.std_error == b.std_error);
}

TEST_CASE("nested exposures grow with w") {
  for (std::uint64_t trial = 0; trial < 20; ++trial) {
    const auto small = nested_exposure(28, 5, 42, trial);
    const auto big = nested_exposure(28, 17, 42, trial);
    CHECK(small.size() == 5);
    CHECK(big.size() == 17);
    CHECK(small.is_subset_of(big));
  }
}

TEST_CASE("intersection profile") {
  const auto& f = cube_family();
  const auto S = build_structure(f.spec()).edge_set();
  const auto prof = intersection_profile(f.copies(), S);
  // Python reference counts out of 840
  const std::vector<int> counts{3, 0, 30, 56, 243, 120, 268, 72, 33, 8, 6, 0, 1};
  REQUIRE(prof.size() == counts.size());
  double total = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    CHECK(prof[j] == Catch::Approx(counts[j] / 840.0));
    total += prof[j];
  }
  CHECK(total == Catch::Approx(1.0));

  const std::vector<EdgeSet> one{S};
  CHECK(intersection_profile(one, S).back() == 1.0);
}

TEST_CASE("claim bound at the extremes") {
  const auto& f = cube_family();
  const auto S = build_structure(f.spec()).edge_set();
  const auto everything = check_claim_bound(f.copies(), S, 28 - 12, 0, 4.0, 3, 1);
  CHECK(everything.mean == 840.0);
  const auto beyond = check_claim_bound(f.copies(), S, 10, 13, 4.0, 3, 1);
  CHECK(beyond.mean == 0.0);
}

TEST_CASE("round schedule") {
  CHECK(pipeline_rounds(1.0 / 3) == 2);
  CHECK(pipeline_rounds(0.5) == 1);
  CHECK(pipeline_rounds(1.0 / 5) == 4);
  CHECK(k_schedule(12, 1.0 / 3, 2) == std::vector<std::size_t>{12, 5, 2});
  CHECK(k_schedule(27, 1.0 / 3, 2) == std::vector<std::size_t>{27, 9, 3});
}

TEST_CASE("pipeline edge cases") {
  const auto& f = cube_family();
  PipelineConfig all;
  all.q = 0.01;
  all.rounds = 0;
  all.p_override = 1.0;
  const auto r = run_pipeline(f, all);
  CHECK(r.success);
  REQUIRE(r.found_copy);
  CHECK(*r.found_copy == f[0]);
  CHECK(r.Y == f.size());

  PipelineConfig nothing;
  nothing.q = 1e-6;
  nothing.p_override = 0.0;
  const auto z = run_pipeline(f, nothing);
  CHECK(z.round_size == 0);
  CHECK_FALSE(z.success);
  CHECK_FALSE(z.advisory.empty());

  PipelineConfig bad;
  bad.q = 0;
  CHECK_THROWS_AS(run_pipeline(f, bad), std::invalid_argument);
}

TEST_CASE("pipeline recovers a verified copy") {
  const auto& f = cube_family();
  PipelineConfig cfg;
  cfg.q = 250 * std::pow(8.0, -2.0 / 3);
  int wins = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    cfg.seed = seed;
    const auto r = run_pipeline(f, cfg);
    CHECK(r.round_size == 28);
    if (!r.success) continue;
    ++wins;
    CHECK(f.contains_copy(*r.found_copy));
    CHECK(r.found_copy->is_subset_of(r.exposure_union));
  }
  CHECK(wins == 20);
}

TEST_CASE("pipeline replay is deterministic") {
  const auto f = enumerate_copies(StructureSpec::c4_cycle(10));
  PipelineConfig cfg;
  cfg.q = 0.06;
  cfg.seed = 77;
  const auto a = run_pipeline(f, cfg);
  cfg.workers = 3;
  const auto b = run_pipeline(f, cfg);
  CHECK(a.success == b.success);
  CHECK(a.found_copy == b.found_copy);
  CHECK(a.Y == b.Y);
  CHECK(a.exposure_union == b.exposure_union);
}
