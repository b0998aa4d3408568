#include "spanlab/copyfamily.hpp"

#include "spanlab/embedding.hpp"
#include "spanlab/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

namespace spanlab {

namespace {

constexpr std::size_t kIndexAfterQueries = 100;

}  // namespace

struct CopyFamily::Index {
  std::atomic<std::size_t> queries{0};
  std::once_flag once;
  std::vector<std::vector<std::uint32_t>> postings;
};

CopyFamily::CopyFamily(StructureSpec spec, std::vector<EdgeSet> copies)
    : spec_(spec), k0_(expected_edge_count(spec)), copies_(std::move(copies)),
      index_(std::make_shared<Index>()) {
  const auto m = pair_count(spec_.n);
  for (const auto& c : copies_) {
    if (c.universe() != m) throw std::invalid_argument("copy over the wrong ground set");
    if (c.size() != k0_) {
      throw std::invalid_argument("copy has " + std::to_string(c.size()) + " edges, expected " +
                                  std::to_string(k0_));
    }
  }
  std::sort(copies_.begin(), copies_.end(),
            [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); });
  if (std::adjacent_find(copies_.begin(), copies_.end()) != copies_.end()) {
    throw std::invalid_argument("copy family contains a duplicate copy");
  }
}

const CopyFamily::Index* CopyFamily::index() const {
  if (index_->queries.fetch_add(1, std::memory_order_relaxed) < kIndexAfterQueries) return nullptr;
  std::call_once(index_->once, [this] {
    index_->postings.assign(ground_m(), {});
    for (std::size_t id = 0; id < copies_.size(); ++id) {
      for (auto e : copies_[id].indices()) index_->postings[e].push_back(static_cast<std::uint32_t>(id));
    }
  });
  return index_.get();
}

std::vector<std::size_t> CopyFamily::ids_containing(const EdgeSet& I) const {
  std::vector<std::size_t> out;
  if (I.universe() != ground_m()) throw std::invalid_argument("edge subset over the wrong ground set");
  const auto* idx = index();
  if (idx != nullptr && !I.empty()) {
    const std::vector<std::uint32_t>* shortest = nullptr;
    for (auto e : I.indices()) {
      const auto& p = idx->postings[e];
      if (shortest == nullptr || p.size() < shortest->size()) shortest = &p;
    }
    for (auto id : *shortest) {
      if (I.is_subset_of(copies_[id])) out.push_back(id);
    }
    return out;
  }
  for (std::size_t id = 0; id < copies_.size(); ++id) {
    if (I.is_subset_of(copies_[id])) out.push_back(id);
  }
  return out;
}

std::size_t CopyFamily::copies_containing(const EdgeSet& I) const {
  if (I.empty()) return copies_.size();
  return ids_containing(I).size();
}

bool CopyFamily::contains_copy(const EdgeSet& s) const {
  auto it = std::lower_bound(copies_.begin(), copies_.end(), s,
                             [](const EdgeSet& a, const EdgeSet& b) { return a.lex_less(b); });
  return it != copies_.end() && *it == s;
}

BigInt count_copies_exact(const StructureSpec& spec) {
  spec.validate();
  return factorial(spec.n) / count_automorphisms(build_structure(spec));
}

BigInt count_copies_formula(const StructureSpec& spec) {
  spec.validate();
  if (spec.kind == StructureKind::KrsCycle && (spec.s < 1 || 2 * spec.s > spec.r)) {
    throw std::domain_error(spec.name() + ": copy-count formula requires 1 <= s <= r/2");
  }
  const BigInt denom = closed_form_stabilizer(spec);
  const BigInt total = factorial(spec.n);
  if (total % denom != 0) throw std::logic_error(spec.name() + ": closed form is not an integer");
  return total / denom;
}

CopyFamily enumerate_copies(const StructureSpec& spec, const EnumerationBudget& budget) {
  spec.validate();
  const BigInt required = count_copies_exact(spec);
  if (required > budget.max_copies) {
    throw BudgetExceeded(spec.name() + ": enumeration needs " + to_string(required) +
                             " copies, budget is " + std::to_string(budget.max_copies),
                         required);
  }
  const int n = spec.n;
  const auto canonical = build_structure(spec);
  const auto reps = orbit_representatives(canonical);
  const auto m = pair_count(n);

  // One task per (position of vertex 0, vertex at the first free position).
  struct Task {
    int zero_pos;
    int first_vertex;
  };
  std::vector<Task> tasks;
  for (int p : reps)
    for (int v = 1; v < n; ++v) tasks.push_back({p, v});

  const auto chunks = chunk_count(tasks.size(), budget.workers);
  std::vector<std::vector<EdgeSet>> found(chunks);
  parallel_chunks(tasks.size(), budget.workers, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    std::unordered_set<EdgeSet, EdgeSetHash> seen;
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (std::size_t t = begin; t < end; ++t) {
      const auto [zero_pos, first_vertex] = tasks[t];
      std::vector<int> free_pos;
      for (int p = 0; p < n; ++p)
        if (p != zero_pos) free_pos.push_back(p);
      std::vector<int> rest;
      for (int v = 1; v < n; ++v)
        if (v != first_vertex) rest.push_back(v);
      perm[static_cast<std::size_t>(zero_pos)] = 0;
      perm[static_cast<std::size_t>(free_pos[0])] = first_vertex;
      do {
        for (std::size_t i = 0; i < rest.size(); ++i) perm[static_cast<std::size_t>(free_pos[i + 1])] = rest[i];
        EdgeSet s(m);
        for (const auto& e : canonical.edges()) {
          s.insert(pair_index(n, perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
        }
        seen.insert(std::move(s));
      } while (std::next_permutation(rest.begin(), rest.end()));
    }
    found[chunk].assign(seen.begin(), seen.end());
  });

  std::unordered_set<EdgeSet, EdgeSetHash> all;
  for (auto& part : found)
    for (auto& s : part) all.insert(std::move(s));
  return CopyFamily(spec, std::vector<EdgeSet>(all.begin(), all.end()));
}

std::size_t copies_containing(const CopyFamily& family, const EdgeSet& I) {
  return family.copies_containing(I);
}

void write_family(std::ostream& out, const CopyFamily& family) {
  out << family.n() << ' ' << family.k0() << ' ' << family.size() << '\n';
  for (const auto& c : family.copies()) {
    const auto idx = c.indices();
    for (std::size_t i = 0; i < idx.size(); ++i) out << (i ? " " : "") << idx[i];
    out << '\n';
  }
}

CopyFamily read_family(std::istream& in, const StructureSpec& spec) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("family dump: missing header");
  std::istringstream header(line);
  int n = 0;
  std::size_t k0 = 0, count = 0;
  if (!(header >> n >> k0 >> count)) throw std::runtime_error("family dump: malformed header");
  if (n != spec.n) throw std::runtime_error("family dump: n does not match the structure");
  if (k0 != expected_edge_count(spec)) throw std::runtime_error("family dump: k0 does not match");
  const auto m = pair_count(n);
  std::vector<EdgeSet> copies;
  copies.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw std::runtime_error("family dump: truncated");
    std::istringstream row(line);
    std::vector<std::uint32_t> idx;
    long long x = 0;
    while (row >> x) {
      if (x < 0 || static_cast<std::size_t>(x) >= m) throw std::runtime_error("family dump: bad pair index");
      idx.push_back(static_cast<std::uint32_t>(x));
    }
    if (!row.eof()) throw std::runtime_error("family dump: non-numeric entry");
    copies.push_back(EdgeSet::from_indices(m, idx));
  }
  return CopyFamily(spec, std::move(copies));
}

}  // namespace spanlab
