#include "vero/hyperplanes.hpp"

#include <algorithm>
#include <set>

#include "vero/error.hpp"

namespace vero {

namespace {

std::vector<PointSet> projective_hyperplanes(const ProjectiveSpace& pg) {
  std::vector<PointSet> out;
  for (const auto& f : pg.coords()) out.push_back(pg.hyperplane(f));
  std::sort(out.begin(), out.end());
  return out;
}

void require_base(const VeroneseSpace& v, const ProjectiveSpace& pg) {
  if (v.base().point_count() != pg.structure().point_count() || v.base().lines() != pg.structure().lines()) {
    throw PreconditionError("Veronese space is not built over this projective space");
  }
}

std::vector<Vec> coords_of(const Multiset& f, const ProjectiveSpace& pg) {
  std::vector<Vec> out;
  for (int x : f.expansion()) out.push_back(pg.coord(x));
  return out;
}

}  // namespace

HFunction extract_h_function(const VeroneseSpace& v, const PointSet& h) {
  HFunction out;
  out.base_points = v.base().point_count();
  const auto in = membership(v.point_count(), h);
  for (int leaf = 0; leaf < v.leaf_count(); ++leaf) {
    PointSet trace;
    const auto& image = v.leaf_image(leaf);
    for (int x = 0; x < out.base_points; ++x) {
      if (in[static_cast<std::size_t>(image[static_cast<std::size_t>(x)])]) trace.push_back(x);
    }
    out.traces.push_back(std::move(trace));
  }
  return out;
}

PointSet l_transversal_from_h(const VeroneseSpace& v, const HFunction& h,
                              const std::vector<PointSet>& base_hyperplanes) {
  if (static_cast<int>(h.traces.size()) != v.leaf_count()) throw PreconditionError("h-function has wrong number of leaves");
  std::set<PointSet> allowed(base_hyperplanes.begin(), base_hyperplanes.end());
  std::vector<int> pts;
  for (int leaf = 0; leaf < v.leaf_count(); ++leaf) {
    const auto& trace = h.traces[static_cast<std::size_t>(leaf)];
    if (!h.is_full(leaf) && !allowed.count(trace)) {
      throw PreconditionError("trace of leaf " + v.leaf_key(leaf).to_string() + " is neither full nor a base hyperplane");
    }
    for (int x : trace) pts.push_back(v.leaf_image(leaf)[static_cast<std::size_t>(x)]);
  }
  return make_point_set(std::move(pts));
}

VeroneseHyperplane hyperplane_from_symplectic(const VeroneseSpace& v, const ProjectiveSpace& pg,
                                              const BilinearForm& xi) {
  require_base(v, pg);
  if (v.level() != 2) throw PreconditionError("symplectic hyperplanes are defined at level 2");
  if (pg.field().p() % 2 == 0) throw PreconditionError("odd characteristic required");
  if (xi.dim() != pg.n() + 1) throw PreconditionError("form dimension does not match the projective space");
  if (xi.is_zero()) throw PreconditionError("zero form");
  if (!xi.is_symplectic()) throw PreconditionError("form is not symplectic");
  VeroneseHyperplane out;
  for (int p = 0; p < v.point_count(); ++p) {
    const auto e = v.point(p).expansion();
    if (xi.evaluate(pg.coord(e[0]), pg.coord(e[1])) == 0) out.points.push_back(p);
  }
  out.h = extract_h_function(v, out.points);
  out.degenerate = !xi.is_nondegenerate();
  if (!is_hyperplane(v.structure(), out.points)) throw FalsificationError("symplectic construction is not a hyperplane");
  return out;
}

VeroneseHyperplane hyperplane_from_alternating(const VeroneseSpace& v, const ProjectiveSpace& pg,
                                               const AlternatingMultiForm& eta) {
  require_base(v, pg);
  if (eta.arity() != v.level()) throw PreconditionError("form arity must equal the Veronese level");
  if (eta.dim() != pg.n() + 1) throw PreconditionError("form dimension does not match the projective space");
  VeroneseHyperplane out;
  for (int p = 0; p < v.point_count(); ++p) {
    if (eta.perp(coords_of(v.point(p), pg))) out.points.push_back(p);
  }
  out.h = extract_h_function(v, out.points);
  out.degenerate = !eta.is_nondegenerate(pg.coords());
  if (!is_hyperplane(v.structure(), out.points)) throw FalsificationError("alternating construction is not a hyperplane");
  return out;
}

PointSet polar_hyperplane(const VeroneseSpace& polar_v, const VeroneseSpace& ambient_v,
                          const std::vector<int>& to_parent, const PointSet& ambient_hyperplane) {
  if (polar_v.level() != ambient_v.level()) throw PreconditionError("levels differ");
  if (static_cast<int>(to_parent.size()) != polar_v.base().point_count()) throw PreconditionError("embedding size mismatch");
  if (polar_v.base().line_count() == 0) throw PreconditionError("polar structure has no lines");
  const auto in = membership(ambient_v.point_count(), ambient_hyperplane);
  PointSet out;
  for (int p = 0; p < polar_v.point_count(); ++p) {
    std::vector<Multiset::Entry> entries;
    for (const auto& e : polar_v.point(p).entries()) {
      entries.push_back({to_parent[static_cast<std::size_t>(e.point)], e.multiplicity});
    }
    const int image = ambient_v.index_of(Multiset::from_entries(std::move(entries)));
    if (in[static_cast<std::size_t>(image)]) out.push_back(p);
  }
  return out;
}

VariantResult variant_with_hyperplane_at_zero(const VeroneseSpace& v, const ProjectiveSpace& pg,
                                              const BilinearForm& xi, const PointSet& h0) {
  require_base(v, pg);
  if (v.level() != 2) throw PreconditionError("level 2 required");
  if (xi.is_zero()) throw PreconditionError("zero form");
  if (!is_hyperplane(pg.structure(), h0)) throw PreconditionError("h0 is not a hyperplane of the projective space");
  const auto in_h0 = membership(pg.structure().point_count(), h0);
  auto perp = [&](int x, int y) { return xi.evaluate(pg.coord(x), pg.coord(y)) == 0; };

  VariantResult out;
  for (int p = 0; p < v.point_count(); ++p) {
    const auto e = v.point(p).expansion();
    const bool keep = e[0] == e[1] ? in_h0[static_cast<std::size_t>(e[0])] != 0 : perp(e[0], e[1]);
    if (keep) out.points.push_back(p);
  }
  // h(x) = kappa(x) also puts 2x in H for selfconjugate x.
  for (int x = 0; x < pg.structure().point_count(); ++x) {
    if (perp(x, x)) out.points.push_back(v.index_of(scale_point(2, x)));
  }
  out.points = make_point_set(std::move(out.points));
  out.is_subspace = is_subspace(v.structure(), out.points);

  for (int a : h0) {
    if (perp(a, a)) continue;
    for (int q = 0; q < pg.structure().point_count(); ++q) {
      if (in_h0[static_cast<std::size_t>(q)] || !perp(a, q)) continue;
      const int base_line = *pg.structure().line_through(a, q);
      PointSet block;
      for (int z : pg.structure().line(base_line)) {
        block.push_back(v.index_of(scale_point(1, a) + scale_point(1, z)));
      }
      out.witness_line = v.structure().find_line(make_point_set(std::move(block)));
      out.a = a;
      out.q = q;
      return out;
    }
  }
  return out;
}

std::vector<BilinearForm> alternating_forms_up_to_scalar(int dim, int p) {
  PrimeField f(p);
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < dim; ++i) {
    for (int j = i + 1; j < dim; ++j) slots.emplace_back(i, j);
  }
  std::vector<BilinearForm> out;
  for (const auto& c : projective_points(static_cast<int>(slots.size()), f)) {
    Matrix m(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c[s];
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = f.neg(c[s]);
    }
    out.emplace_back(f, m);
  }
  return out;
}

CharacterizationReport verify_characterization(const VeroneseSpace& v, const ProjectiveSpace& pg) {
  require_base(v, pg);
  if (v.level() != 2) throw PreconditionError("level 2 required");
  const auto base_hyperplanes = projective_hyperplanes(pg);
  std::vector<PointSet> enumerated;
  if (v.point_count() <= 24) {
    enumerated = enumerate_hyperplanes(v.structure());
  } else {
    enumerated = enumerate_hyperplanes(v.structure(), v.leaf_cover(base_hyperplanes));
  }

  CharacterizationReport report;
  report.enumerated = enumerated.size();
  std::set<PointSet> allowed(base_hyperplanes.begin(), base_hyperplanes.end());
  const int n = pg.structure().point_count();
  for (const auto& h : enumerated) {
    const auto in = membership(v.point_count(), h);
    auto related = [&](int x, int y) {
      return in[static_cast<std::size_t>(v.index_of(scale_point(1, x) + scale_point(1, y)))] != 0;
    };
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (related(x, y) != related(y, x)) report.relation_symmetric = false;
      }
    }
    const auto hf = extract_h_function(v, h);
    for (int leaf = 0; leaf < v.leaf_count(); ++leaf) {
      if (!hf.is_full(leaf) && !allowed.count(hf.traces[static_cast<std::size_t>(leaf)])) report.traces_well_formed = false;
    }
  }

  std::set<PointSet> constructed;
  for (const auto& xi : alternating_forms_up_to_scalar(pg.n() + 1, pg.field().p())) {
    constructed.insert(hyperplane_from_symplectic(v, pg, xi).points);
  }
  report.constructed = constructed.size();
  report.equal = std::set<PointSet>(enumerated.begin(), enumerated.end()) == constructed;

  std::set<PointSet> leaf_unions;
  for (const auto& hb : base_hyperplanes) {
    std::vector<int> pts;
    for (int x : hb) {
      const auto& image = v.leaf_image(v.leaf_of(scale_point(1, x)));
      pts.insert(pts.end(), image.begin(), image.end());
    }
    leaf_unions.insert(make_point_set(std::move(pts)));
  }
  for (const auto& h : enumerated) {
    if (constructed.count(h)) continue;
    report.unmatched.push_back(h);
    if (!leaf_unions.count(h)) report.unmatched_are_leaf_unions = false;
  }
  return report;
}

nlohmann::json to_json(const VeroneseHyperplane& h, const VeroneseSpace& v) {
  nlohmann::json traces = nlohmann::json::array();
  for (int leaf = 0; leaf < v.leaf_count(); ++leaf) {
    nlohmann::json entry;
    entry["e"] = to_json(v.leaf_key(leaf));
    if (h.h.is_full(leaf)) {
      entry["trace"] = "FULL";
    } else {
      entry["trace"] = h.h.traces[static_cast<std::size_t>(leaf)];
    }
    traces.push_back(std::move(entry));
  }
  return {{"points", h.points}, {"h", traces}, {"degenerate", h.degenerate}};
}

}  // namespace vero
