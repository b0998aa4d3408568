#include "catch_amalgamated.hpp"

#include "spanlab/copyfamily.hpp"
#include "spanlab/structures.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

using namespace spanlab;

namespace {

// Every copy obtained by running over all n! orderings.
std::set<std::vector<std::uint32_t>> brute_force_copies(const StructureSpec& spec) {
  std::vector<int> perm(static_cast<std::size_t>(spec.n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto base = build_structure(spec);
  std::set<std::vector<std::uint32_t>> out;
  do {
    out.insert(base.relabeled(perm).edge_set().indices());
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

TEST_CASE("enumeration matches the n! brute force") {
  for (const auto& spec : {StructureSpec::c4_cycle(6), StructureSpec::c4_cycle(8), StructureSpec::krs_cycle(4, 2, 6),
                           StructureSpec::krs_cycle(4, 2, 8), StructureSpec::krs_cycle(3, 0, 6),
                           StructureSpec::krs_cycle(3, 1, 6), StructureSpec::krs_cycle(3, 1, 8)}) {
    INFO(spec.name());
    const auto family = enumerate_copies(spec);
    const auto brute = brute_force_copies(spec);
    REQUIRE(family.size() == brute.size());
    std::set<std::vector<std::uint32_t>> got;
    for (const auto& c : family.copies()) got.insert(c.indices());
    REQUIRE(got == brute);
    REQUIRE(count_copies_exact(spec) == family.size());
  }
}

TEST_CASE("copy counts") {
  // reference values from an independent Python brute force
  CHECK(enumerate_copies(StructureSpec::c4_cycle(6)).size() == 60);
  CHECK(enumerate_copies(StructureSpec::c4_cycle(8)).size() == 840);
  CHECK(enumerate_copies(StructureSpec::krs_cycle(4, 2, 6)).size() == 1);
  CHECK(enumerate_copies(StructureSpec::krs_cycle(4, 2, 8)).size() == 315);
  CHECK(enumerate_copies(StructureSpec::krs_cycle(3, 0, 6)).size() == 10);
  // 10!/20 and 9!/48
  CHECK(enumerate_copies(StructureSpec::c4_cycle(10)).size() == 181440);
  CHECK(enumerate_copies(StructureSpec::krs_cycle(5, 2, 9)).size() == 7560);
}

TEST_CASE("closed-form counts") {
  CHECK(count_copies_formula(StructureSpec::c4_cycle(8)) == 2520);
  CHECK(count_copies_formula(StructureSpec::krs_cycle(4, 2, 6)) == 15);
  CHECK(count_copies_formula(StructureSpec::krs_cycle(4, 2, 8)) == 315);
  CHECK(count_copies_formula(StructureSpec::krs_cycle(5, 2, 9)) == 7560);
  CHECK_THROWS_AS(count_copies_formula(StructureSpec::krs_cycle(3, 0, 6)), std::domain_error);
  CHECK_THROWS_AS(count_copies_formula(StructureSpec::krs_cycle(5, 2, 6)), std::invalid_argument);
}

TEST_CASE("family invariants") {
  const auto family = enumerate_copies(StructureSpec::c4_cycle(8));
  CHECK(family.k0() == 12);
  CHECK(family.ground_m() == 28);
  for (std::size_t i = 0; i < family.size(); ++i) {
    REQUIRE(family[i].size() == 12);
    if (i > 0) REQUIRE(family[i - 1].lex_less(family[i]));
  }
  CHECK(family.contains_copy(build_structure(family.spec()).edge_set()));
  CHECK_FALSE(family.contains_copy(EdgeSet(28)));

  auto dup = family.copies();
  dup.push_back(dup.front());
  CHECK_THROWS_AS(CopyFamily(family.spec(), dup), std::invalid_argument);
  auto short_copy = family.copies();
  short_copy[3].erase(short_copy[3].indices().front());
  CHECK_THROWS_AS(CopyFamily(family.spec(), short_copy), std::invalid_argument);
}

TEST_CASE("copies containing a subset") {
  const auto family = enumerate_copies(StructureSpec::c4_cycle(8));
  CHECK(copies_containing(family, EdgeSet(28)) == 840);
  CHECK(copies_containing(family, family[17]) == 1);
  // 840 * 12 / 28 by edge transitivity of K_8
  for (std::size_t e = 0; e < 28; ++e) {
    auto I = EdgeSet(28);
    I.insert(e);
    REQUIRE(copies_containing(family, I) == 360);
  }
  // the lazy index and the direct scan agree
  auto I = EdgeSet(28);
  I.insert(pair_index(8, 0, 1));
  I.insert(pair_index(8, 1, 2));
  std::size_t scan = 0;
  for (const auto& c : family.copies()) scan += I.is_subset_of(c) ? 1 : 0;
  for (int rep = 0; rep < 150; ++rep) REQUIRE(family.copies_containing(I) == scan);
  CHECK(family.ids_containing(I).size() == scan);
}

TEST_CASE("enumeration budget") {
  EnumerationBudget tiny;
  tiny.max_copies = 100;
  try {
    enumerate_copies(StructureSpec::c4_cycle(8), tiny);
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() == 840);
  }
}

TEST_CASE("parallel enumeration is deterministic") {
  EnumerationBudget one, four;
  four.workers = 4;
  const auto a = enumerate_copies(StructureSpec::krs_cycle(5, 2, 9), one);
  const auto b = enumerate_copies(StructureSpec::krs_cycle(5, 2, 9), four);
  CHECK(a.copies() == b.copies());
}

TEST_CASE("family dump round trip") {
  const auto spec = StructureSpec::krs_cycle(4, 2, 8);
  const auto family = enumerate_copies(spec);
  std::stringstream s;
  write_family(s, family);
  const auto back = read_family(s, spec);
  CHECK(back.copies() == family.copies());

  std::stringstream bad("8 20 1\n0 1 2\n");
  CHECK_THROWS(read_family(bad, spec));
}
