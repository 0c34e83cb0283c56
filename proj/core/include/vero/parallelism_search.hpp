#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

namespace vero {

/// B1 ∥ B2 when they are generated (B = e + r L) by base lines in one class.
struct InducedRelation {
  /// Blocks per class, classes indexed like the base parallel classes.
  std::vector<std::vector<int>> classes;
  bool reflexive = true;
  bool symmetric = true;
  bool transitive = true;
  bool is_equivalence() const { return reflexive && symmetric && transitive; }
};

/// `base` must carry the same structure `v` was built on.
InducedRelation induced_relation(const VeroneseSpace& v, const ParallelStructure& base);

struct EuclidReport {
  bool classes_cover = true;        // every class covers every point
  bool k_members_per_point = true;  // each class has exactly k blocks through each point
  bool fails_euclid = false;        // two distinct related blocks share a point
  int witness_point = -1;
  int witness_block_a = -1;
  int witness_block_b = -1;
};
EuclidReport check_euclid_failure(const VeroneseSpace& v, const ParallelStructure& base);

enum class SearchOutcome { kNone, kFound, kBudgetExceeded };
const char* to_string(SearchOutcome o);

struct ParallelismSearchResult {
  SearchOutcome outcome = SearchOutcome::kNone;
  std::uint64_t nodes = 0;
  std::uint64_t tree_hash = 0;  // FNV-1a over the decision sequence
  std::size_t units = 0;        // per-leaf directions
  /// Classes of blocks when found.
  std::vector<std::vector<int>> parallelism;
};

/// Backtracking over partitions of the blocks into point-covering classes of
/// one common size, each class a union of per-leaf directions (the blocks of
/// one leaf generated by one base class).
ParallelismSearchResult search_leaf_closed_parallelism(const VeroneseSpace& v, const ParallelStructure& base,
                                                       std::uint64_t node_budget = 10'000'000);

/// Pairs (n, k) with C(n+k-1, k) = n C(n+k-1, k-1).
std::vector<std::pair<int, int>> counting_identity_solutions(int n_min, int n_max, int k_min, int k_max);

struct VeblenCrossCheck {
  bool by_definition = false;
  bool by_generators = false;  // same leaf and base-parallel generators
};
VeblenCrossCheck veblen_parallel_in_affine_veronese(const VeroneseSpace& v, const ParallelStructure& base, int b1,
                                                    int b2);

struct VeblenCrossCheckReport {
  std::uint64_t pairs = 0;
  std::uint64_t parallel_pairs = 0;
  std::optional<std::pair<int, int>> mismatch;
};
VeblenCrossCheckReport cross_check_veblen_parallel(const VeroneseSpace& v, const ParallelStructure& base);

/// The classes generated by ∥° consist of pairwise disjoint lines.
bool veblen_union_is_preparallelism(const IncidenceStructure& g);

}  // namespace vero
