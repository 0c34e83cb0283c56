#pragma once

#include <unordered_map>
#include <vector>

#include "vero/algebra.hpp"
#include "vero/incidence.hpp"

namespace vero {

/// PG(n, p): points are normalized vectors of GF(p)^{n+1}.
class ProjectiveSpace {
 public:
  ProjectiveSpace(int n, int p);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  const IncidenceStructure& structure() const { return structure_; }
  const std::vector<Vec>& coords() const { return coords_; }
  const Vec& coord(int point) const { return coords_[static_cast<std::size_t>(point)]; }

  /// Index of the point <v>; v must be nonzero.
  int index_of(const Vec& v) const;
  /// Points of the projective subspace spanned by `generators`.
  PointSet span(const std::vector<Vec>& generators) const;
  /// All projective planes (3-dimensional vector subspaces), sorted.
  std::vector<PointSet> planes() const;
  /// Points <u> with f(u) = 0 for the linear functional f.
  PointSet hyperplane(const Vec& functional) const;

 private:
  long long encode(const Vec& normalized) const;

  int n_;
  PrimeField field_;
  std::vector<Vec> coords_;
  std::unordered_map<long long, int> index_;
  IncidenceStructure structure_;
};

/// A geometry with a partition of (some of) its lines into parallel classes.
struct ParallelStructure {
  IncidenceStructure base;
  std::vector<std::vector<int>> parallel_classes;  // line ids
  bool affine = false;
};

/// AG(n, p) with its natural parallelism; points are vectors of GF(p)^n
/// indexed in lexicographic order. p = 2 is rejected.
class AffineSpace {
 public:
  AffineSpace(int n, int p);

  int n() const { return n_; }
  const PrimeField& field() const { return field_; }
  const ParallelStructure& parallel() const { return parallel_; }
  const IncidenceStructure& structure() const { return parallel_.base; }
  const Vec& coord(int point) const { return coords_[static_cast<std::size_t>(point)]; }
  int index_of(const Vec& v) const;
  /// Cosets of 2-dimensional subspaces, sorted.
  std::vector<PointSet> planes() const;

 private:
  int n_;
  PrimeField field_;
  std::vector<Vec> coords_;
  ParallelStructure parallel_;
};

/// Substructure on a point subset: lines fully inside are kept, points are
/// renumbered in increasing order of their parent index.
struct Restriction {
  IncidenceStructure structure;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 when dropped
  bool degenerate = false;       // empty point set
};

Restriction restriction(const IncidenceStructure& g, const PointSet& kept);

/// A polar space embedded in PG(n, p), with its totally isotropic planes.
struct PolarSpace {
  ProjectiveSpace ambient;
  Restriction embedding;  // points of the polar space inside the ambient
  std::vector<PointSet> planes;  // local indices

  const IncidenceStructure& structure() const { return embedding.structure; }
};

/// W(n, p): all points of PG(n, p), lines totally isotropic for xi.
PolarSpace polar_space_symplectic(const BilinearForm& xi);
/// Quadric points of Q with the lines of PG inside them. Requires a
/// totally singular line (Witt index at least 2).
PolarSpace polar_space_quadratic(const QuadraticForm& q);

struct AffinePolarSpace {
  Restriction embedding;  // points kept from the polar space
  IncidenceStructure structure;  // truncated lines
  std::vector<int> parent_line;  // polar line each truncated line comes from
  bool sub_pls_floor = false;    // some truncated line has fewer than 3 points
};

/// Deletes a hyperplane of a polar space; lines inside it disappear, the rest
/// lose exactly one point.
AffinePolarSpace affine_polar_space(const IncidenceStructure& polar, const PointSet& trace);

}  // namespace vero
