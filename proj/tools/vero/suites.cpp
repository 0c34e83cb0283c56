#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "vero/configs.hpp"
#include "vero/error.hpp"
#include "vero/hyperplanes.hpp"
#include "vero/parallelism_search.hpp"
#include "vero/reduct.hpp"
#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

#include "geometry_io.hpp"

namespace vero::cli {

nlohmann::json to_json(const Verdict& v, bool timings) {
  nlohmann::json j = {{"claim", v.claim}, {"text", v.text}, {"instance", v.instance}, {"pass", v.pass}};
  if (!v.details.empty()) j["details"] = v.details;
  if (!v.witness.is_null()) j["witness"] = v.witness;
  if (timings) j["runtime_s"] = v.seconds;
  return j;
}

Verdict verdict_from_json(const nlohmann::json& j) {
  Verdict v;
  v.claim = j.at("claim").get<std::string>();
  v.text = j.value("text", "");
  v.instance = j.value("instance", nlohmann::json::object());
  v.pass = j.at("pass").get<bool>();
  v.details = j.value("details", nlohmann::json::object());
  if (j.contains("witness")) v.witness = j.at("witness");
  v.seconds = j.value("runtime_s", 0.0);
  return v;
}

class DeskContext {
 public:
  const ProjectiveSpace& pg33() {
    if (!pg33_) pg33_.emplace(3, 3);
    return *pg33_;
  }
  const VeroneseSpace& v33() {
    if (!v33_) v33_.emplace(VeroneseSpace::build(pg33().structure(), 2));
    return *v33_;
  }
  const VeroneseHyperplane& h33() {
    if (!h33_) h33_.emplace(hyperplane_from_symplectic(v33(), pg33(), BilinearForm::standard_symplectic(4, 3)));
    return *h33_;
  }
  const AffineReduct& reduct() {
    if (!reduct_) reduct_.emplace(build_reduct(v33(), h33().points));
    return *reduct_;
  }
  const ReductTops& tops() {
    if (!tops_) tops_.emplace(reduct_tops(reduct()));
    return *tops_;
  }

 private:
  std::optional<ProjectiveSpace> pg33_;
  std::optional<VeroneseSpace> v33_;
  std::optional<VeroneseHyperplane> h33_;
  std::optional<AffineReduct> reduct_;
  std::optional<ReductTops> tops_;
};

namespace {

const nlohmann::json kReductInstance = {{"space", "V(2,PG(3,3))"}, {"hyperplane", "standard symplectic"}};

template <class F>
Verdict timed(std::string claim, std::string text, nlohmann::json instance, F&& body) {
  Verdict v;
  v.claim = std::move(claim);
  v.text = std::move(text);
  v.instance = std::move(instance);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const Error& e) {
    v.pass = false;
    v.details["error"] = e.what();
  }
  v.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

nlohmann::json params_json(const VeroneseParameters& p) {
  return {{"v", p.v}, {"b", p.b}, {"r", p.r}, {"kappa", p.kappa}};
}

VeroneseParameters measure(const IncidenceStructure& g) {
  VeroneseParameters m;
  m.v = static_cast<std::uint64_t>(g.point_count());
  m.b = static_cast<std::uint64_t>(g.line_count());
  std::set<std::size_t> ranks, sizes;
  for (int p = 0; p < g.point_count(); ++p) ranks.insert(g.lines_through(p).size());
  for (const auto& l : g.lines()) sizes.insert(l.size());
  m.r = ranks.size() == 1 ? *ranks.begin() : 0;
  m.kappa = sizes.size() == 1 ? *sizes.begin() : 0;
  return m;
}

void suite_construction(DeskContext&, const VerdictSink& sink) {
  struct Case {
    const char* name;
    int n, p;
    VeroneseParameters expected;
  };
  for (const Case& c : {Case{"V(2,Fano)", 2, 2, {28, 56, 6, 3}}, Case{"V(2,PG(2,3))", 2, 3, {91, 182, 8, 4}}}) {
    sink(timed("construction-counts", "Veronese space parameters match the closed formulas",
               {{"space", c.name}}, [&](Verdict& v) {
                 ProjectiveSpace pg(c.n, c.p);
                 const auto base = measure(pg.structure());
                 const auto formula = veronese_parameters(base.v, base.b, base.r, base.kappa, 2);
                 const auto ver = VeroneseSpace::build(pg.structure(), 2);
                 const auto direct = measure(ver.structure());
                 v.details = {{"enumerated", params_json(direct)}, {"formula", params_json(formula)}};
                 v.pass = direct == formula && direct == c.expected && is_partial_linear(ver.structure());
               }));
  }
}

void suite_hyperplane_small(DeskContext&, const VerdictSink& sink) {
  sink(timed("hyperplane-characterization",
             "every hyperplane of V(2,PG(1,3)) is 2S, the symplectic construction's output",
             {{"space", "V(2,PG(1,3))"}, {"method", "subset scan"}}, [](Verdict& v) {
               ProjectiveSpace pg(1, 3);
               const auto ver = VeroneseSpace::build(pg.structure(), 2);
               const auto r = verify_characterization(ver, pg);
               v.details = {{"enumerated", r.enumerated},
                            {"constructed", r.constructed},
                            {"unmatched", r.unmatched.size()},
                            {"unmatched_are_leaf_unions", r.unmatched_are_leaf_unions}};
               v.pass = r.equal;
               if (!r.unmatched.empty()) {
                 nlohmann::json w = nlohmann::json::array();
                 for (const auto& h : r.unmatched) w.push_back(points_json(ver.structure(), h));
                 v.witness = {{"hyperplanes_without_form", w}};
               }
             }));
}

void suite_symplectic(DeskContext& ctx, const VerdictSink& sink) {
  sink(timed("symplectic-hyperplane", "the symplectic set is a spiky, non-flappy hyperplane with 280 points",
             kReductInstance, [&](Verdict& v) {
               const auto& ver = ctx.v33();
               const auto& h = ctx.h33();
               const bool hyper = is_hyperplane(ver.structure(), h.points);
               const auto spiky = check_spiky(ver.structure(), h.points);
               const auto flappy = check_flappy(ver.structure(), h.points, ver.lift(ctx.pg33().planes()));
               const auto& a = ctx.reduct();
               v.details = {{"H", h.points.size()},
                            {"reduct_points", a.structure.point_count()},
                            {"is_hyperplane", hyper},
                            {"spiky", spiky.spiky},
                            {"flappy", flappy.flappy}};
               v.pass = h.points.size() == 280 && a.structure.point_count() == 540 && hyper && spiky.spiky &&
                        !flappy.flappy;
             }));
}

void suite_negative_control(DeskContext&, const VerdictSink& sink) {
  sink(timed("negative-control",
             "with h(0) a hyperplane not inside the selfconjugate set the construction is not a subspace",
             {{"space", "V(2,PG(2,3))"}, {"form", "identity (symmetric)"}}, [](Verdict& v) {
               ProjectiveSpace pg(2, 3);
               const auto ver = VeroneseSpace::build(pg.structure(), 2);
               const auto xi = BilinearForm::identity(3, 3);
               const auto& g = ver.structure();
               std::size_t tried = 0;
               bool all = true;
               nlohmann::json first;
               for (const auto& f : pg.coords()) {
                 const auto h0 = pg.hyperplane(f);
                 bool inside = true;
                 for (int x : h0) inside = inside && xi.evaluate(pg.coord(x), pg.coord(x)) == 0;
                 if (inside) continue;
                 ++tried;
                 const auto r = variant_with_hyperplane_at_zero(ver, pg, xi, h0);
                 bool ok = !r.is_subspace && r.witness_line.has_value();
                 if (ok) {
                   const auto& line = g.line(*r.witness_line);
                   std::size_t in = 0;
                   for (int p : line) in += std::binary_search(r.points.begin(), r.points.end(), p) ? 1 : 0;
                   ok = in >= 2 && in < line.size();
                 }
                 all = all && ok;
                 if (first.is_null() && r.witness_line) {
                   first = {{"h0", points_json(pg.structure(), h0)}, {"line", line_json(g, *r.witness_line)},
                            {"a", r.a}, {"q", r.q}};
                 }
               }
               v.details = {{"hyperplanes_tried", tried}};
               v.witness = first;
               v.pass = all && tried > 0;
             }));
}

void suite_veblen(DeskContext&, const VerdictSink& sink) {
  struct Case {
    const char* name;
    int p;
  };
  for (const Case& c : {Case{"V(2,Fano)", 2}, Case{"V(2,PG(2,3))", 3}}) {
    sink(timed("veblen-classification",
               "every Veblen figure is base-embedded, a four-point translate or a three-point figure with 2m; "
               "four-point translates occur iff lines have at least 4 points",
               {{"space", c.name}}, [&](Verdict& v) {
                 ProjectiveSpace pg(2, c.p);
                 const auto ver = VeroneseSpace::build(pg.structure(), 2);
                 std::map<std::string, std::size_t> counts;
                 std::size_t unclassifiable = 0;
                 nlohmann::json witness;
                 const auto figures = find_veblen_figures(ver.structure());
                 for (const auto& f : figures) {
                   try {
                     ++counts[to_string(classify_veblen_in_veronese(ver, f))];
                   } catch (const FalsificationError&) {
                     if (unclassifiable++ == 0) witness = to_json(f, ver.structure());
                   }
                 }
                 const bool kappa3 = c.p == 2;
                 const bool type_ii = counts.count(to_string(VeblenType::kFourPointTranslate)) > 0;
                 v.details = {{"figures", figures.size()}, {"types", counts}, {"unclassifiable", unclassifiable}};
                 v.witness = witness;
                 v.pass = unclassifiable == 0 && type_ii == !kappa3;
               }));
  }
}

void suite_net_axiom(DeskContext& ctx, const VerdictSink& sink) {
  sink(timed("net-axiom-holds",
             "for a proper quadrangle, crossing lines in other leaves over both pairs of opposite sides meet",
             {{"space", "V(2,AG(2,3))"}, {"crossing_lines", "tops distinct from the crossed sides"}}, [](Verdict& v) {
               AffineSpace ag(2, 3);
               const auto ver = VeroneseSpace::build(ag.structure(), 2);
               const auto r = check_net_axiom_proper(ver, true);
               v.details = {{"quadrangles", r.quadrangles}, {"pairs_checked", r.pairs_checked},
                            {"exhaustive", r.exhaustive}};
               if (r.witness) v.witness = to_json(*r.witness, ver.structure());
               v.pass = r.holds && r.exhaustive;
             }));
  sink(timed("net-axiom-fails-on-reduct", "the affine reduct violates the net axiom", kReductInstance,
             [&](Verdict& v) {
               const auto& a = ctx.reduct();
               const auto w = net_violation_witness(a, ctx.tops().line_top);
               if (w) {
                 v.witness = to_json(*w, a.structure);
                 v.pass = is_net_violation(a.structure, ctx.tops().line_top, *w);
               } else {
                 v.details["search"] = "exhaustive over cross-leaf pairs of every two-leaf direction; no witness";
                 v.pass = false;
               }
             }));
}

void suite_recovery(DeskContext& ctx, const VerdictSink& sink) {
  sink(timed("recovery", "the Veronese space is recovered from its affine reduct up to the explicit bijection",
             kReductInstance, [&](Verdict& v) {
               const auto& a = ctx.reduct();
               const auto r = recover_veronese(a, ctx.v33());
               const auto c = check_recovery(r, a, ctx.v33());
               v.details = {{"points", c.points},
                            {"lines", c.lines},
                            {"completed_lines", r.completed_lines},
                            {"leaf_horizon_lines", r.leaf_horizon_lines},
                            {"double_horizon_lines", r.double_horizon_lines},
                            {"bijective", c.bijective},
                            {"isomorphism", c.isomorphism},
                            {"unrecovered_lines", c.unrecovered_lines},
                            {"foreign_lines", c.foreign_lines}};
               v.pass = c.isomorphism && c.points == 820 && c.lines == 5330;
             }));
}

void suite_directions(DeskContext& ctx, const VerdictSink& sink) {
  sink(timed("direction-taxonomy",
             "40 one-leaf and 240 two-leaf directions; each two-leaf direction splits into two Veblen classes",
             kReductInstance, [&](Verdict& v) {
               const auto d = classify_directions(ctx.reduct());
               bool split = true;
               nlohmann::json witness;
               for (std::size_t c = 0; c < d.directions.size(); ++c) {
                 const auto& dir = d.directions[c];
                 const std::size_t want = dir.kind == DirectionKind::kOneLeaf ? 1 : 2;
                 if (dir.subclasses.size() != want && split) {
                   split = false;
                   witness = {{"class", c}, {"kind", to_string(dir.kind)}, {"subclasses", dir.subclasses.size()}};
                 }
               }
               v.details = {{"one_leaf", d.one_leaf},
                            {"two_leaf", d.two_leaf},
                            {"veblen_refines", d.veblen_refines},
                            {"matches_ambient", d.matches_ambient}};
               v.witness = witness;
               v.pass = d.one_leaf == 40 && d.two_leaf == 240 && split && d.veblen_refines && d.matches_ambient;
             }));
}

void suite_alternating(DeskContext&, const VerdictSink& sink) {
  sink(timed("alternating-hyperplane",
             "the determinant form gives a hyperplane whose complement consists of 3-subsets",
             {{"space", "V(3,PG(2,3))"}, {"form", "determinant"}}, [](Verdict& v) {
               ProjectiveSpace pg(2, 3);
               const auto ver = VeroneseSpace::build(pg.structure(), 3);
               const auto h = hyperplane_from_alternating(ver, pg, AlternatingMultiForm::determinant(3, 3));
               const bool hyper = is_hyperplane(ver.structure(), h.points);
               std::size_t complement = 0;
               bool supports = true;
               nlohmann::json witness;
               for (int p = 0; p < ver.point_count(); ++p) {
                 if (std::binary_search(h.points.begin(), h.points.end(), p)) continue;
                 ++complement;
                 if (ver.point(p).support().size() != 3 && supports) {
                   supports = false;
                   witness = {{"point", point_json(ver.structure(), p)}};
                 }
               }
               v.details = {{"is_hyperplane", hyper}, {"complement", complement}, {"all_support_3", supports}};
               v.witness = witness;
               v.pass = hyper && complement == 234 && supports;
             }));
}

void suite_polar(DeskContext& ctx, const VerdictSink& sink) {
  const nlohmann::json instance = {{"space", "V(2,W(3,3))"}, {"hyperplane", "standard symplectic, intersected"}};
  auto w = polar_space_symplectic(BilinearForm::standard_symplectic(4, 3));
  sink(timed("polar-counts", "W(3,3) has 40 points and 40 totally isotropic lines", {{"space", "W(3,3)"}},
             [&](Verdict& v) {
               v.details = {{"points", w.structure().point_count()}, {"lines", w.structure().line_count()}};
               v.pass = w.structure().point_count() == 40 && w.structure().line_count() == 40;
             }));
  const auto polar_v = VeroneseSpace::build(w.structure(), 2);
  sink(timed("polar-hyperplane", "the intersected hyperplane is a hyperplane of V(2,W(3,3))", instance,
             [&](Verdict& v) {
               const auto h = polar_hyperplane(polar_v, ctx.v33(), w.embedding.to_parent, ctx.h33().points);
               v.details = {{"H", h.size()}, {"points", polar_v.point_count()}};
               v.pass = is_hyperplane(polar_v.structure(), h);
             }));
  sink(timed("polar-gamma-leaves", "the classes of the plane-chain relation are the leaves", instance,
             [&](Verdict& v) {
               const auto planes = polar_v.lift(w.planes);
               v.details["planes"] = planes.size();
               const auto classes = gamma_leaf_recovery(polar_v.structure(), planes);
               std::vector<PointSet> leaves;
               for (int l = 0; l < polar_v.leaf_count(); ++l) leaves.push_back(polar_v.leaf_points(l));
               std::sort(leaves.begin(), leaves.end());
               v.details["classes"] = classes.size();
               v.pass = classes == leaves;
             }));
}

void suite_parallelism(DeskContext&, const VerdictSink& sink) {
  AffineSpace ag2(2, 3);
  const auto v2 = VeroneseSpace::build(ag2.structure(), 2);
  sink(timed("induced-relation", "the induced relation is an equivalence with one class per base direction",
             {{"space", "V(2,AG(2,3))"}}, [&](Verdict& v) {
               const auto r = induced_relation(v2, ag2.parallel());
               std::vector<std::size_t> sizes;
               for (const auto& c : r.classes) sizes.push_back(c.size());
               v.details = {{"reflexive", r.reflexive}, {"symmetric", r.symmetric}, {"transitive", r.transitive},
                            {"class_sizes", sizes}};
               v.pass = r.is_equivalence() && sizes == std::vector<std::size_t>(4, 30);
             }));
  sink(timed("euclid-failure",
             "each class covers the points with k blocks through each point, so the relation is no parallelism",
             {{"space", "V(2,AG(2,3))"}}, [&](Verdict& v) {
               const auto e = check_euclid_failure(v2, ag2.parallel());
               const auto& g = v2.structure();
               v.details = {{"classes_cover", e.classes_cover}, {"k_members_per_point", e.k_members_per_point},
                            {"fails_euclid", e.fails_euclid}};
               if (e.fails_euclid) {
                 v.details["example"] = {{"point", point_json(g, e.witness_point)},
                                         {"blocks", {line_json(g, e.witness_block_a), line_json(g, e.witness_block_b)}}};
               }
               v.pass = e.classes_cover && e.k_members_per_point && e.fails_euclid;
             }));
  for (int n : {1, 2}) {
    const std::string name = "V(2,AG(" + std::to_string(n) + ",3))";
    sink(timed("leaf-closed-parallelism", "no leaf-closed parallelism with directions of constant size",
               {{"space", name}}, [&](Verdict& v) {
                 AffineSpace ag(n, 3);
                 const auto ver = VeroneseSpace::build(ag.structure(), 2);
                 const auto r = search_leaf_closed_parallelism(ver, ag.parallel());
                 v.details = {{"outcome", to_string(r.outcome)}, {"nodes", r.nodes}, {"units", r.units},
                              {"tree_hash", r.tree_hash},
                              {"open", "parallelisms that are not leaf-closed are not searched"}};
                 if (r.outcome == SearchOutcome::kFound) v.witness = {{"classes", r.parallelism}};
                 v.pass = r.outcome == SearchOutcome::kNone;
               }));
  }
  sink(timed("counting-identity", "C(n+k-1,k) = n C(n+k-1,k-1) has no solution with k > 1",
             {{"n", "2..50"}, {"k", "2..6"}}, [](Verdict& v) {
               const auto sols = counting_identity_solutions(2, 50, 2, 6);
               v.details = {{"solutions", sols.size()}};
               if (!sols.empty()) v.witness = sols;
               v.pass = sols.empty();
             }));
  sink(timed("veblen-parallel-by-generators",
             "Veblen parallelism equals same leaf with parallel generators, and its classes are a preparallelism",
             {{"space", "V(2,AG(2,3))"}}, [&](Verdict& v) {
               const auto c = cross_check_veblen_parallel(v2, ag2.parallel());
               const bool pre = veblen_union_is_preparallelism(v2.structure());
               v.details = {{"pairs", c.pairs}, {"parallel_pairs", c.parallel_pairs}, {"preparallelism", pre}};
               if (c.mismatch) {
                 v.witness = {line_json(v2.structure(), c.mismatch->first), line_json(v2.structure(), c.mismatch->second)};
               }
               v.pass = !c.mismatch && pre;
             }));
}

void suite_affine_conditions(DeskContext& ctx, const VerdictSink& sink) {
  const auto& a = ctx.reduct();
  const ParallelStructure veblen{a.structure, veblen_parallel_classes(a.structure), false};
  using Check = AffineConditionReport (*)(const ParallelStructure&, int);
  const std::pair<const char*, Check> checks[] = {{"tamaschke", &check_tamaschke},
                                                  {"parallelogram-completion", &check_parallelogram_completion}};
  for (const auto& [name, check] : checks) {
    sink(timed(std::string("affine-") + name,
               std::string(name) + " condition holds on the reduct with Veblen parallelism", kReductInstance,
               [&](Verdict& v) {
                 const auto r = check(veblen, INT32_MAX);
                 v.details = {{"configurations", r.configurations},
                              {"exhaustive", r.exhaustive},
                              {"strata", r.strata.size()},
                              {"veblen_classes", veblen.parallel_classes.size()}};
                 if (r.witness) {
                   nlohmann::json w = nlohmann::json::array();
                   for (int l : *r.witness) w.push_back(line_json(a.structure, l));
                   v.witness = w;
                 }
                 v.pass = r.holds;
               }));
  }
}

void suite_definability(DeskContext& ctx, const VerdictSink& sink) {
  sink(timed("parallel-definability",
             "the reduct parallelism is rebuilt from incidence: same top and Veblen parallel, or completable "
             "to a proper net",
             kReductInstance, [&](Verdict& v) {
               const auto r = reconstruct_parallelism(ctx.reduct());
               v.details = {{"same_top_pairs", r.same_top_pairs},
                            {"cross_top_positive", r.cross_top_positive},
                            {"cross_top_negative_sampled", r.cross_top_negative_sampled},
                            {"seed", r.seed}};
               if (r.mismatch) {
                 v.witness = {line_json(ctx.reduct().structure, r.mismatch->first),
                              line_json(ctx.reduct().structure, r.mismatch->second)};
               }
               v.pass = r.equal;
             }));
}

using SuiteFn = void (*)(DeskContext&, const VerdictSink&);

const std::vector<std::pair<std::string, SuiteFn>>& suites() {
  static const std::vector<std::pair<std::string, SuiteFn>> s = {
      {"construction", &suite_construction},
      {"hyperplane-small", &suite_hyperplane_small},
      {"symplectic", &suite_symplectic},
      {"negative-control", &suite_negative_control},
      {"veblen", &suite_veblen},
      {"net-axiom", &suite_net_axiom},
      {"recovery", &suite_recovery},
      {"directions", &suite_directions},
      {"alternating", &suite_alternating},
      {"polar", &suite_polar},
      {"parallelism", &suite_parallelism},
      {"affine-conditions", &suite_affine_conditions},
      {"definability", &suite_definability},
  };
  return s;
}

}  // namespace

SuiteRunner::SuiteRunner() : ctx_(std::make_unique<DeskContext>()) {}
SuiteRunner::~SuiteRunner() = default;

const std::vector<std::string>& SuiteRunner::suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n{"all"};
    for (const auto& s : suites()) n.push_back(s.first);
    return n;
  }();
  return names;
}

bool SuiteRunner::run(const std::string& suite, const VerdictSink& sink) {
  bool ok = true;
  const VerdictSink track = [&](const Verdict& v) {
    ok = ok && v.pass;
    sink(v);
  };
  bool found = false;
  for (const auto& [name, fn] : suites()) {
    if (suite == "all" || suite == name) {
      found = true;
      fn(*ctx_, track);
    }
  }
  if (!found) throw PreconditionError("unknown suite '" + suite + "'");
  return ok;
}

Verdict net_axiom_on_file(const nlohmann::json& space) {
  if (space.contains("veronese")) {
    auto loaded = veronese_from_json(space);
    return timed("net-axiom-holds", "for every proper quadrangle, crossing lines in other leaves meet",
                 {{"space", space.at("veronese")}}, [&](Verdict& v) {
                   const auto r = check_net_axiom_proper(loaded.space, true);
                   v.details = {{"quadrangles", r.quadrangles}, {"pairs_checked", r.pairs_checked}};
                   if (r.witness) v.witness = to_json(*r.witness, loaded.space.structure());
                   v.pass = r.holds;
                 });
  }
  const auto a = reduct_from_json(space);
  nlohmann::json instance = {{"reduct_points", a.structure.point_count()}, {"reduct_lines", a.structure.line_count()}};
  if (space.contains("ambient")) {
    const auto& amb = space.at("ambient");
    instance["ambient"] = {{"level", amb.value("level", 0)},
                           {"base", amb.value("base", nlohmann::json::object()).value("construction", nlohmann::json())}};
  }
  return timed("net-axiom-holds", "for every proper quadrangle, crossing lines in other tops meet", instance,
               [&](Verdict& v) {
                 const auto w = net_violation_witness(a);
                 if (w) v.witness = to_json(*w, a.structure);
                 v.details["search"] = "cross-leaf pairs of every parallel class";
                 v.pass = !w.has_value();
               });
}

}  // namespace vero::cli
