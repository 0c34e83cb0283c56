#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "vero/incidence.hpp"
#include "vero/multiset.hpp"

namespace vero {

/// One presentation e + r*B of a block.
struct BlockOrigin {
  Multiset e;
  int r = 0;
  int base_line = -1;
};

struct VeroneseParameters {
  std::uint64_t v = 0;  // points
  std::uint64_t b = 0;  // lines
  std::uint64_t r = 0;  // lines through a point
  std::uint64_t kappa = 0;  // points on a line
  friend bool operator==(const VeroneseParameters&, const VeroneseParameters&) = default;
};

/// v = C(v0+k-1, k), b = C(v0+k-1, k-1) b0, r = k r0, kappa = kappa0.
VeroneseParameters veronese_parameters(std::uint64_t v0, std::uint64_t b0, std::uint64_t r0, std::uint64_t kappa0,
                                       std::uint64_t k);

/// V(k, M0): points are the degree-k multisets over the base points (indexed
/// in lexicographic order), blocks are the sets {e + r x : x in B}.
class VeroneseSpace {
 public:
  /// Throws PreconditionError unless the base is a partial linear space and k >= 1.
  static VeroneseSpace build(IncidenceStructure base, int k);

  const IncidenceStructure& base() const { return base_; }
  int level() const { return level_; }
  const IncidenceStructure& structure() const { return structure_; }
  int point_count() const { return structure_.point_count(); }

  const Multiset& point(int index) const { return points_[static_cast<std::size_t>(index)]; }
  const std::vector<Multiset>& points() const { return points_; }
  int index_of(const Multiset& m) const;
  std::optional<int> find(const Multiset& m) const;

  /// All presentations of a block.
  const std::vector<BlockOrigin>& origins(int block) const { return origins_[static_cast<std::size_t>(block)]; }

  /// Leaves are indexed by e in w_k(S): degree first, then lexicographic, so
  /// leaf 0 is kS.
  int leaf_count() const { return static_cast<int>(leaf_keys_.size()); }
  const Multiset& leaf_key(int leaf) const { return leaf_keys_[static_cast<std::size_t>(leaf)]; }
  /// leaf_image(l)[x] = index of e + (k - |e|) x.
  const std::vector<int>& leaf_image(int leaf) const { return leaf_images_[static_cast<std::size_t>(leaf)]; }
  PointSet leaf_points(int leaf) const { return make_point_set(leaf_image(leaf)); }
  int leaf_of(const Multiset& e) const;
  /// Leaves containing a point, ascending.
  std::vector<int> leaves_through(int point) const;

  /// Leaf containing the block (the top T(B)).
  int top_of_block(int block) const { return block_top_[static_cast<std::size_t>(block)]; }

  /// Images of base point sets (planes) in every leaf.
  std::vector<PointSet> lift(const std::vector<PointSet>& base_sets) const;
  LeafCover leaf_cover(std::vector<PointSet> base_hyperplanes) const;

 private:
  IncidenceStructure base_;
  int level_ = 0;
  std::vector<Multiset> points_;
  std::unordered_map<Multiset, int, MultisetHash> index_;
  IncidenceStructure structure_;
  std::vector<std::vector<BlockOrigin>> origins_;
  std::vector<Multiset> leaf_keys_;
  std::unordered_map<Multiset, int, MultisetHash> leaf_index_;
  std::vector<std::vector<int>> leaf_images_;
  std::vector<int> block_top_;
};

/// Point map f -> r f from V(k, M) into V(rk, M).
std::vector<int> mu_embedding(const VeroneseSpace& source, const VeroneseSpace& target, int r);
/// Point map f -> e + f from V(k, M) into V(k + |e|, M).
std::vector<int> tau_embedding(const VeroneseSpace& source, const VeroneseSpace& target, const Multiset& e);
/// Injective and sends every line of `source` onto a line of `target`.
bool is_embedding(const IncidenceStructure& source, const IncidenceStructure& target, const std::vector<int>& map);

/// A point adjacent to three or more points of a block that lies outside
/// its top; nullopt when the implication holds for every (point, block).
struct LeafAdjacencyCounterexample {
  int point = -1;
  int block = -1;
};
std::optional<LeafAdjacencyCounterexample> find_leaf_adjacency_counterexample(const VeroneseSpace& v);
bool leaf_adjacency_holds(const VeroneseSpace& v, int point, int block);

/// V(k, M0[S']) equals V(k, M0)[m_k(S')] as labelled structures.
bool verify_restriction_fact(const IncidenceStructure& base, const PointSet& subset, int k);
/// Every line of V(k, small) is a line of V(k, large), where `small` has the
/// same points as `large` and a subset of its lines.
bool verify_line_monotonicity(const IncidenceStructure& small, const IncidenceStructure& large, int k);

}  // namespace vero
