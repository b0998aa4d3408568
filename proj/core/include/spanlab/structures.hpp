#pragma once

#include "spanlab/bigint.hpp"
#include "spanlab/graph.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace spanlab {

enum class StructureKind {
  // Cyclically ordered C4 copies, consecutive ones sharing one edge, overlap edges disjoint.
  C4CycleOverlap2,
  // n/(r-s) copies of K_r on Z_n, consecutive copies sharing s vertices.
  KrsCycle,
};

struct StructureSpec {
  StructureKind kind = StructureKind::C4CycleOverlap2;
  int r = 4;
  int s = 2;
  int n = 0;

  static StructureSpec c4_cycle(int n) { return {StructureKind::C4CycleOverlap2, 4, 2, n}; }
  static StructureSpec krs_cycle(int r, int s, int n) { return {StructureKind::KrsCycle, r, s, n}; }

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
  bool valid() const;
  std::string name() const;

  friend bool operator==(const StructureSpec&, const StructureSpec&) = default;
};

/// A permutation of [0,n): perm[position] is the vertex placed at that position.
struct Ordering {
  std::vector<int> perm;

  static Ordering identity(int n);
  void validate(int n) const;
  friend bool operator==(const Ordering&, const Ordering&) = default;
};

// Canonical copy on the identity ordering.
LabeledGraph build_structure(const StructureSpec& spec);

// Copy obtained by placing vertex sigma.perm[p] at position p of the canonical copy.
LabeledGraph structure_from_ordering(const StructureSpec& spec, const Ordering& sigma);

// Edge count: 3n/2 for the C4 cycle, (r+s-1)n/2 for K_{r,s,n}.
std::size_t expected_edge_count(const StructureSpec& spec);

struct DegreeProfile {
  int heavy_degree = 0;
  int light_degree = 0;
  int heavy_count = 0;
  int light_count = 0;
};

// Heavy/light tallies of K_{r,s,n}; only defined for s <= r/2.
DegreeProfile expected_degree_profile(const StructureSpec& spec);

// Orderings that reproduce the canonical copy, i.e. |Aut(build_structure(spec))|,
// counted exactly. Rejects K_{r,s,n} with s > r/2.
BigInt ordering_stabilizer_size(const StructureSpec& spec);

// The closed-form stabilizer: 2n for the C4 cycle,
// 2n/(r-s) * ((r-2s)!)^{n/(r-s)} * (s!)^{n/(r-s)} for 1 <= s <= r/2, and
// (r!)^{n/r} (n/r)! for the K_r-factor s = 0. It assumes no extra symmetry;
// ordering_stabilizer_size is authoritative.
BigInt closed_form_stabilizer(const StructureSpec& spec);

}  // namespace spanlab
