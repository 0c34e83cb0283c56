#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "vero/configs.hpp"
#include "vero/incidence.hpp"
#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

namespace vero {

/// M \ H. The reduct-visible data are `structure` and `parallel_classes`;
/// the remaining fields record where everything sits in the ambient space.
struct AffineReduct {
  IncidenceStructure structure;  // proper points, truncated lines
  std::vector<int> to_ambient;   // reduct point -> ambient point
  std::vector<int> parent;       // truncated line -> ambient block
  std::vector<int> infinite_point;  // truncated line -> its ambient point in H
  /// Lines grouped by infinite point, classes ordered by that point.
  std::vector<std::vector<int>> parallel_classes;
  std::vector<int> class_point;   // ambient point of H per class
  std::vector<nlohmann::json> class_label;  // label of that ambient point
  std::vector<int> class_of_line;
  int ambient_points = 0;
  int ambient_lines = 0;
  int leaves_inside = 0;  // ambient leaves entirely inside H

  ParallelStructure parallel() const { return {structure, parallel_classes, false}; }
};

/// Throws PreconditionError if H is not a hyperplane or a truncated line
/// keeps fewer than two points.
AffineReduct build_reduct(const VeroneseSpace& v, const PointSet& h);

nlohmann::json to_json(const AffineReduct& a);
AffineReduct reduct_from_json(const nlohmann::json& j);

/// Maximal strong subspaces of the reduct and, per line, the one holding it.
struct ReductTops {
  std::vector<PointSet> subspaces;
  std::vector<int> line_top;
};
ReductTops reduct_tops(const AffineReduct& a);

bool veblen_parallel(const AffineReduct& a, int l1, int l2);

enum class DirectionKind { kOneLeaf, kTwoLeaf };
const char* to_string(DirectionKind k);

struct Direction {
  DirectionKind kind = DirectionKind::kOneLeaf;
  /// The class split by ∥°; one part for ONE_LEAF, two for TWO_LEAF.
  std::vector<std::vector<int>> subclasses;
};

struct DirectionReport {
  std::vector<Direction> directions;  // indexed like parallel_classes
  int one_leaf = 0;
  int two_leaf = 0;
  /// Every ∥°-class lies inside one ∥_H class.
  bool veblen_refines = true;
  /// ONE_LEAF exactly for the infinite points 2x.
  bool matches_ambient = true;
};

/// Throws PreconditionError when H contains a leaf besides one (degenerate
/// form) and FalsificationError when a class fits neither kind.
DirectionReport classify_directions(const AffineReduct& a);

struct PlaneResult {
  PointSet points;
  bool degenerate = false;  // side condition fails or the union is not a plane
};

/// π(L1, L2, L3): union of the lines ∥_H L1 crossing L2 and L3. Throws
/// PreconditionError unless the three lines form a triangle.
PlaneResult plane_from_triangle(const AffineReduct& a, int l1, int l2, int l3);

/// Planes of the reduct obtained from triangles meeting the side condition.
std::vector<PointSet> reduct_planes(const AffineReduct& a);

/// Sets of class indices declared collinear, each sorted, family sorted.
std::vector<std::vector<int>> recover_horizon_leaf_lines(const AffineReduct& a);
/// Candidate opposite sides are chosen from the parent blocks a + m, b + m;
/// the quadrangle and the crossing lines are then checked on the reduct alone.
std::vector<std::vector<int>> recover_horizon_2S_lines(const AffineReduct& a, const VeroneseSpace& v);

struct Recovered {
  IncidenceStructure structure;  // proper points, then one point per class
  int proper_points = 0;
  std::size_t completed_lines = 0;
  std::size_t leaf_horizon_lines = 0;
  std::size_t double_horizon_lines = 0;
};

Recovered recover_veronese(const AffineReduct& a, const VeroneseSpace& v);

struct RecoveryCheck {
  bool bijective = false;
  bool isomorphism = false;
  std::size_t points = 0;
  std::size_t lines = 0;
  std::size_t unrecovered_lines = 0;
  std::size_t foreign_lines = 0;
};

/// Maps proper points to their ambient points and classes to their infinite
/// points, then compares line sets.
RecoveryCheck check_recovery(const Recovered& r, const AffineReduct& a, const VeroneseSpace& v);

/// Two reduct lines through one deleted point x + y, one per leaf, that are
/// crossed by the two pairs of opposite sides of a proper quadrangle on
/// proper points.
std::optional<NetWitness> net_violation_witness(const AffineReduct& a);
/// Same search with tops supplied by the caller (e.g. from the ambient leaves).
std::optional<NetWitness> net_violation_witness(const AffineReduct& a, const std::vector<int>& line_top);
/// Tops of the reduct lines read off the ambient leaves.
std::vector<int> ambient_line_tops(const AffineReduct& a, const VeroneseSpace& v);

/// Some proper quadrangle (L1, K1, L2, K2) has l crossing K1, K2 and k
/// crossing L1, L2, with the crossing lines in tops other than the sides'.
bool completes_to_proper_net(const AffineReduct& a, const ReductTops& tops, int l, int k);

struct ParallelDefinabilityReport {
  bool equal = true;
  std::uint64_t same_top_pairs = 0;
  std::uint64_t cross_top_positive = 0;
  std::uint64_t cross_top_negative_sampled = 0;
  std::uint64_t seed = 0;
  std::optional<std::pair<int, int>> mismatch;
};

/// Rebuilds ∥_H from incidence: same top and ∥°, or distinct tops, disjoint
/// and completable to a proper net. Every parallel pair is checked; for
/// non-parallel pairs in distinct tops a seeded sample of `negative_samples`
/// pairs is checked.
ParallelDefinabilityReport reconstruct_parallelism(const AffineReduct& a, std::size_t negative_samples = 200,
                                                   std::uint64_t seed = 20240601);

/// Point sets of the classes of planes under "joined by a chain of planes,
/// consecutive ones sharing a line", sorted. Distinct classes may share
/// points; points on no plane are not covered. Throws IndeterminateError when
/// `planes` is empty.
std::vector<PointSet> gamma_leaf_recovery(const IncidenceStructure& g, const std::vector<PointSet>& planes);

}  // namespace vero
