#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

namespace vero {

/// Sorted, duplicate-free list of point indices.
using PointSet = std::vector<int>;

/// Sorts and deduplicates in place, returning the canonical set.
PointSet make_point_set(std::vector<int> points);

/// Points plus a family of lines (point sets), with incidence lookups built
/// once at construction. Immutable afterwards.
///
/// Labels are opaque per-point JSON values (a multiset, a coordinate vector);
/// an empty label vector means "unlabelled".
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  IncidenceStructure(int point_count, std::vector<PointSet> lines,
                     std::vector<nlohmann::json> labels = {});

  int point_count() const { return point_count_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<PointSet>& lines() const { return lines_; }
  const PointSet& line(int id) const { return lines_[static_cast<std::size_t>(id)]; }
  std::span<const int> lines_through(int point) const {
    return point_lines_[static_cast<std::size_t>(point)];
  }

  const std::vector<nlohmann::json>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  /// First line (lowest index) containing both points, if any.
  std::optional<int> line_through(int a, int b) const;
  /// a ~ b: some line carries both points. A point is adjacent to itself
  /// exactly when it lies on a line.
  bool adjacent(int a, int b) const;
  bool on_line(int point, int line) const;
  /// Common point of two lines (lowest index), if they meet.
  std::optional<int> meet(int line_a, int line_b) const;
  bool lines_meet(int line_a, int line_b) const { return meet(line_a, line_b).has_value(); }
  /// Index of the line with exactly this point set.
  std::optional<int> find_line(const PointSet& points) const;
  /// Lines meeting `line` in a point, excluding `line` itself; sorted.
  std::vector<int> lines_meeting(int line) const;

 private:
  static std::uint64_t pair_key(int a, int b) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
  }

  int point_count_ = 0;
  std::vector<PointSet> lines_;
  std::vector<nlohmann::json> labels_;
  std::vector<std::vector<int>> point_lines_;
  std::unordered_map<std::uint64_t, int> pair_line_;
  std::unordered_map<std::uint64_t, std::vector<int>> line_by_hash_;
};

/// Dense membership mask for a point set.
std::vector<char> membership(int point_count, const PointSet& points);

struct PlsViolation {
  enum class Kind { kUndersizedLine, kSharedPair };
  Kind kind = Kind::kUndersizedLine;
  int line = -1;
  int other_line = -1;
  int a = -1;
  int b = -1;
};

struct PlsReport {
  bool ok = true;
  std::optional<PlsViolation> witness;
};

/// Lines of size >= 3 and two distinct points on at most one common line.
/// The witness is the first undersized line, otherwise the lexicographically
/// first point pair lying on two lines.
PlsReport check_partial_linear(const IncidenceStructure& g);
inline bool is_partial_linear(const IncidenceStructure& g) { return check_partial_linear(g).ok; }

/// Adjacency lists of the joinability graph (no self loops), sorted.
std::vector<std::vector<int>> adjacency(const IncidenceStructure& g);
bool is_connected(const IncidenceStructure& g);

PointSet subspace_closure(const IncidenceStructure& g, const PointSet& x);
bool is_subspace(const IncidenceStructure& g, const PointSet& x);
bool is_strong(const IncidenceStructure& g, const PointSet& x);

/// Inclusion-maximal strong subspaces that contain at least one line, in
/// lexicographic order of their point sets.
std::vector<PointSet> maximal_strong_subspaces(const IncidenceStructure& g);

/// Strong subspaces spanned by two intersecting lines and strictly larger
/// than a line. These are the planes of every space built here.
std::vector<PointSet> strong_planes(const IncidenceStructure& g);

bool is_l_transversal(const IncidenceStructure& g, const PointSet& x);
bool is_hyperplane(const IncidenceStructure& g, const PointSet& x);

struct SpikyReport {
  bool spiky = true;
  std::optional<int> witness_point;  // a point of X every line through which stays in X
};

struct FlappyReport {
  bool flappy = true;
  std::optional<int> witness_line;  // a line inside X all of whose planes lie in X
};

SpikyReport check_spiky(const IncidenceStructure& g, const PointSet& x);
/// Throws IndeterminateError when `planes` is empty but X contains a line.
FlappyReport check_flappy(const IncidenceStructure& g, const PointSet& x,
                          const std::vector<PointSet>& planes);

/// Full subset scan; throws CapacityError above 24 points.
std::vector<PointSet> enumerate_hyperplanes(const IncidenceStructure& g);

/// Leaf decomposition of a Veronese-type space: leaves[i][x] is the ambient
/// point that base point x occupies in leaf i, and base_hyperplanes lists the
/// hyperplanes of the base structure. Every hyperplane of the ambient space
/// meets each leaf in the full leaf or in the image of a base hyperplane.
struct LeafCover {
  std::vector<std::vector<int>> leaves;
  std::vector<PointSet> base_hyperplanes;
};

/// Constraint-propagation search over per-leaf traces. Results are sorted.
/// Throws CapacityError if the search exceeds `node_budget` nodes.
std::vector<PointSet> enumerate_hyperplanes(const IncidenceStructure& g, const LeafCover& cover,
                                            std::uint64_t node_budget = 50'000'000);

nlohmann::json to_json(const IncidenceStructure& g);
/// A point by its label (or index when unlabelled).
nlohmann::json point_json(const IncidenceStructure& g, int p);
nlohmann::json points_json(const IncidenceStructure& g, const PointSet& points);
/// {"id": l, "points": [labels]}
nlohmann::json line_json(const IncidenceStructure& g, int l);
/// Accepts labels either as an array or as an object keyed by point index.
IncidenceStructure incidence_from_json(const nlohmann::json& j);

}  // namespace vero
