#pragma once

#include <optional>
#include <vector>

#include "vero/algebra.hpp"
#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

namespace vero {

/// Per-leaf traces h(e) = {x : e + (k - |e|) x in H}, indexed like the leaves.
struct HFunction {
  std::vector<PointSet> traces;
  int base_points = 0;

  bool is_full(int leaf) const {
    return static_cast<int>(traces[static_cast<std::size_t>(leaf)].size()) == base_points;
  }
};

struct VeroneseHyperplane {
  PointSet points;
  HFunction h;
  bool degenerate = false;  // the defining form has a nonzero radical
};

HFunction extract_h_function(const VeroneseSpace& v, const PointSet& h);

/// Union of e + (k - |e|) h(e). Throws PreconditionError if some trace is
/// neither the full base nor one of `base_hyperplanes`.
PointSet l_transversal_from_h(const VeroneseSpace& v, const HFunction& h,
                              const std::vector<PointSet>& base_hyperplanes);

/// Level 2 over PG(n, p): {x + y : xi(x, y) = 0} (which contains 2S).
/// Rejects non-symplectic or zero forms and even p; throws
/// FalsificationError if the result is not a hyperplane.
VeroneseHyperplane hyperplane_from_symplectic(const VeroneseSpace& v, const ProjectiveSpace& pg,
                                              const BilinearForm& xi);

/// Level k over PG(n, p): {q_1 + ... + q_k : eta(q_1, ..., q_k) = 0}.
VeroneseHyperplane hyperplane_from_alternating(const VeroneseSpace& v, const ProjectiveSpace& pg,
                                               const AlternatingMultiForm& eta);

/// Points of V(k, polar) whose image in V(k, PG) lies in `ambient_hyperplane`.
/// `polar_v` is built on the polar structure, `ambient_v` on PG, and
/// `to_parent` maps polar points to PG points.
PointSet polar_hyperplane(const VeroneseSpace& polar_v, const VeroneseSpace& ambient_v,
                          const std::vector<int>& to_parent, const PointSet& ambient_hyperplane);

/// h(x) = kappa(x) for x in S and h(0) = h0 for a hyperplane h0 of PG.
struct VariantResult {
  PointSet points;
  bool is_subspace = false;
  std::optional<int> witness_line;  // the block a + L(a, q)
  int a = -1;
  int q = -1;
};
VariantResult variant_with_hyperplane_at_zero(const VeroneseSpace& v, const ProjectiveSpace& pg,
                                              const BilinearForm& xi, const PointSet& h0);

/// All nonzero alternating forms on GF(p)^dim, one per scalar class.
std::vector<BilinearForm> alternating_forms_up_to_scalar(int dim, int p);

struct CharacterizationReport {
  std::size_t enumerated = 0;
  std::size_t constructed = 0;
  bool equal = false;
  bool relation_symmetric = true;   // x ~ y iff y ~ x over every enumerated hyperplane
  bool traces_well_formed = true;   // every h(x) is FULL or a base hyperplane
  /// Enumerated hyperplanes with no symplectic form behind them.
  std::vector<PointSet> unmatched;
  /// Each unmatched one is the union of the leaves x + S over a base hyperplane.
  bool unmatched_are_leaf_unions = true;
};

/// Compares every hyperplane of V(2, PG(n, p)) (subset scan up to 24 points,
/// leaf-trace search otherwise) with the symplectic constructions.
CharacterizationReport verify_characterization(const VeroneseSpace& v, const ProjectiveSpace& pg);

nlohmann::json to_json(const VeroneseHyperplane& h, const VeroneseSpace& v);

}  // namespace vero
