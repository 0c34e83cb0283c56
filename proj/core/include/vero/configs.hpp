#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "vero/incidence.hpp"
#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

namespace vero {

/// Apex p on L1 and L2; M1 and M2 avoid p and each cross both L1 and L2 in
/// distinct points. Complete when M1 and M2 meet.
struct VeblenFigure {
  int apex = -1;
  int l1 = -1;
  int l2 = -1;
  int m1 = -1;
  int m2 = -1;
  bool complete = false;
};

/// Every Veblen figure, ordered by apex, then (l1 < l2), then (m1 < m2).
std::vector<VeblenFigure> find_veblen_figures(const IncidenceStructure& g);
std::vector<VeblenFigure> find_incomplete_veblen(const IncidenceStructure& g);

struct VeblenReport {
  bool holds = true;
  std::size_t figures = 0;
  std::optional<VeblenFigure> witness;  // first incomplete figure
};
VeblenReport check_veblen_axiom(const IncidenceStructure& g);

enum class VeblenType { kBaseEmbedded, kFourPointTranslate, kThreePointWith2m };
const char* to_string(VeblenType t);

/// Level 2 only. Throws FalsificationError when no type matches.
VeblenType classify_veblen_in_veronese(const VeroneseSpace& v, const VeblenFigure& f);

/// lines = (L1, K1, L2, K2) in cyclic order; vertices[i] lies on lines[i]
/// and lines[i+1 mod 4]. Opposite vertices are never collinear.
struct QuadrangleFigure {
  std::array<int, 4> lines{};
  std::array<int, 4> vertices{};
  bool proper = false;  // the four tops are pairwise distinct
};

/// Quadrangles without diagonals. `line_top` assigns each line the leaf (or
/// maximal strong subspace) containing it; with `proper_only` only figures
/// with four distinct tops are returned. Stops after `limit` figures.
std::vector<QuadrangleFigure> find_quadrangles(const IncidenceStructure& g, const std::vector<int>& line_top,
                                               bool proper_only = true, std::size_t limit = SIZE_MAX);
std::vector<QuadrangleFigure> find_proper_quadrangles(const VeroneseSpace& v, std::size_t limit = SIZE_MAX);
/// Checks the figure against the definition using point sets only.
bool is_quadrangle(const IncidenceStructure& g, const std::vector<int>& line_top, const QuadrangleFigure& q,
                   bool require_proper = true);
std::vector<int> veronese_line_tops(const VeroneseSpace& v);

enum class QuadrangleType { kTwoLine, kThreeLine };
const char* to_string(QuadrangleType t);

struct QuadrangleClassification {
  QuadrangleType type = QuadrangleType::kTwoLine;
  /// Vertices predicted by the classification (a1+a2, a1+b2, a2+b1, b1+b2 or
  /// 2a, a+c, 2b, b+c), as ambient indices in that order.
  std::array<int, 4> predicted_vertices{};
};

/// Level 2 over a linear space. Throws FalsificationError when the figure
/// fits neither type or its vertices differ from the predicted ones.
QuadrangleClassification classify_proper_quadrangle(const VeroneseSpace& v, const QuadrangleFigure& q);

enum class CrossingCase { kTranslateOfJoin = 1, kThroughCommonPoint = 2, kOverMeetingLines = 3 };

/// K crosses the opposite sides L1, L2 of a proper quadrangle and its top
/// differs from theirs. Throws PreconditionError when this fails and
/// FalsificationError when none of the three cases applies.
CrossingCase classify_crossing_line(const VeroneseSpace& v, int l1, int l2, int k);

/// Proper quadrangle (L1, K1, L2, K2), L3 crossing K1 and K2, K3 crossing L1
/// and L2, with L3 and K3 disjoint.
struct NetWitness {
  QuadrangleFigure quadrangle;
  int l3 = -1;
  int k3 = -1;
};

struct NetReport {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t quadrangles = 0;
  std::uint64_t pairs_checked = 0;
  std::optional<NetWitness> witness;
};

/// A crossing line meets both given lines and differs from them. With
/// `distinct_tops` the crossing lines L3, K3 must also lie in tops other than
/// those of the sides they cross.
NetReport check_net_axiom_proper(const IncidenceStructure& g, const std::vector<int>& line_top,
                                 bool distinct_tops = false, std::uint64_t quadrangle_budget = UINT64_MAX);
NetReport check_net_axiom_proper(const VeroneseSpace& v, bool distinct_tops = false,
                                 std::uint64_t quadrangle_budget = UINT64_MAX);
bool is_net_violation(const IncidenceStructure& g, const std::vector<int>& line_top, const NetWitness& w);

/// The Veblen parallelism: L1 = L2, or the lines are disjoint and there are
/// distinct lines L', L'' through a point p off L1 and L2, each crossing L1
/// and L2, with L1 ∩ L' collinear with L2 ∩ L''.
bool veblen_parallel(const IncidenceStructure& g, int l1, int l2);
/// All L2 with l ∥° L2 (including l itself), sorted.
std::vector<int> veblen_parallel_partners(const IncidenceStructure& g, int l);
/// Classes of the equivalence generated by ∥° on lines; each class sorted,
/// classes ordered by smallest member.
std::vector<std::vector<int>> veblen_parallel_classes(const IncidenceStructure& g);

/// class_of[line], -1 for lines outside every class.
std::vector<int> class_index(const ParallelStructure& a);

struct AffineConditionReport {
  bool holds = true;
  bool exhaustive = true;
  std::uint64_t configurations = 0;
  /// Tamaschke: (side A, side B, side C, line L) with L ∥ A crossing B but not C.
  /// Parallelogram: (A1, B1, A2, B2) with three meets and A2, B2 disjoint.
  std::optional<std::array<int, 4>> witness;
  /// Apex points examined, ascending.
  std::vector<int> strata;
};

/// Both checks iterate over apex points; when the point count exceeds
/// `max_apexes`, an evenly spaced subset of apexes is examined and listed.
AffineConditionReport check_tamaschke(const ParallelStructure& a, int max_apexes = INT32_MAX);
AffineConditionReport check_parallelogram_completion(const ParallelStructure& a, int max_apexes = INT32_MAX);

nlohmann::json to_json(const VeblenFigure& f, const IncidenceStructure& g);
nlohmann::json to_json(const QuadrangleFigure& q, const IncidenceStructure& g);
nlohmann::json to_json(const NetWitness& w, const IncidenceStructure& g);

}  // namespace vero
