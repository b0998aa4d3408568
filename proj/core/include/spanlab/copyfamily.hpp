#pragma once

#include "spanlab/bigint.hpp"
#include "spanlab/graph.hpp"
#include "spanlab/structures.hpp"

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <stdexcept>
#include <vector>

namespace spanlab {

struct EnumerationBudget {
  std::uint64_t max_copies = 10'000'000;
  int workers = 1;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, BigInt required)
      : std::runtime_error(what), required_(std::move(required)) {}
  const BigInt& required() const { return required_; }

 private:
  BigInt required_;
};

/// All copies of a structure in K_n, as edge sets over the pair ground set M.
/// Copies are distinct, k0-uniform and sorted lexicographically.
class CopyFamily {
 public:
  CopyFamily(StructureSpec spec, std::vector<EdgeSet> copies);

  const StructureSpec& spec() const { return spec_; }
  int n() const { return spec_.n; }
  std::size_t ground_m() const { return pair_count(spec_.n); }
  std::size_t k0() const { return k0_; }
  std::size_t size() const { return copies_.size(); }
  const std::vector<EdgeSet>& copies() const { return copies_; }
  const EdgeSet& operator[](std::size_t i) const { return copies_[i]; }

  // |F ∩ <I>|: number of copies containing every pair of I.
  std::size_t copies_containing(const EdgeSet& I) const;
  // Ids of those copies, ascending.
  std::vector<std::size_t> ids_containing(const EdgeSet& I) const;
  // Whether the family has a copy equal to s.
  bool contains_copy(const EdgeSet& s) const;

 private:
  struct Index;
  const Index* index() const;

  StructureSpec spec_;
  std::size_t k0_ = 0;
  std::vector<EdgeSet> copies_;
  std::shared_ptr<Index> index_;
};

// Enumerates every copy by running over orderings with vertex 0 placed at one
// position per automorphism orbit, deduplicating by edge set.
CopyFamily enumerate_copies(const StructureSpec& spec, const EnumerationBudget& budget = {});

// Closed-form copy count: (n-1)!/2 for the C4 cycle and
// (n-1)!(r-s) / (2((r-2s)!)^{n/(r-s)}(s!)^{n/(r-s)}) for K_{r,s,n} with 1 <= s <= r/2.
BigInt count_copies_formula(const StructureSpec& spec);

// n!/|Aut(F)|, computed from the exact automorphism count.
BigInt count_copies_exact(const StructureSpec& spec);

std::size_t copies_containing(const CopyFamily& family, const EdgeSet& I);

// Dump format: "n k0 count" header, then one copy per line as pair indices.
void write_family(std::ostream& out, const CopyFamily& family);
CopyFamily read_family(std::istream& in, const StructureSpec& spec);

}  // namespace spanlab
