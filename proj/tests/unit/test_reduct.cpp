#include <gtest/gtest.h>

#include <map>
#include <set>

#include "vero/error.hpp"
#include "vero/hyperplanes.hpp"
#include "vero/reduct.hpp"

using vero::AffineReduct;
using vero::BilinearForm;
using vero::ProjectiveSpace;
using vero::VeroneseSpace;

namespace {

bool contains(const vero::PointSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

struct Pg33 {
  ProjectiveSpace pg{3, 3};
  BilinearForm xi = BilinearForm::standard_symplectic(4, 3);
  VeroneseSpace v = VeroneseSpace::build(pg.structure(), 2);
  vero::VeroneseHyperplane h = vero::hyperplane_from_symplectic(v, pg, xi);
  AffineReduct a = vero::build_reduct(v, h.points);
};

const Pg33& pg33() {
  static const Pg33 instance;
  return instance;
}

}  // namespace

TEST(Reduct, ProjectiveLineByDoubleS) {
  ProjectiveSpace pg(1, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto h = vero::hyperplane_from_symplectic(v, pg, BilinearForm::standard_symplectic(2, 3));
  const auto a = vero::build_reduct(v, h.points);
  EXPECT_EQ(a.structure.point_count(), 6);
  EXPECT_EQ(a.structure.line_count(), 4);
  for (const auto& l : a.structure.lines()) EXPECT_EQ(l.size(), 3u);
  EXPECT_EQ(a.parallel_classes.size(), 4u);
  for (const auto& c : a.parallel_classes) EXPECT_EQ(c.size(), 1u);
  EXPECT_EQ(a.leaves_inside, 1);
}

TEST(Reduct, PointsAreNonPerpendicularPairs) {
  const auto& s = pg33();
  EXPECT_EQ(s.a.structure.point_count(), 540);
  for (int p : s.a.to_ambient) {
    const auto e = s.v.point(p).expansion();
    ASSERT_NE(e[0], e[1]);
    EXPECT_NE(s.xi.evaluate(s.pg.coord(e[0]), s.pg.coord(e[1])), 0);
  }
}

TEST(Reduct, TruncatedLinesAndClasses) {
  const auto& s = pg33();
  const auto& g = s.v.structure();
  int inside = 0;
  for (const auto& l : g.lines()) inside += std::includes(s.h.points.begin(), s.h.points.end(), l.begin(), l.end());
  EXPECT_EQ(s.a.structure.line_count(), g.line_count() - inside);
  EXPECT_EQ(s.a.structure.line_count(), 4680);
  for (std::size_t c = 0; c < s.a.parallel_classes.size(); ++c) {
    const auto& cls = s.a.parallel_classes[c];
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const int l = cls[i];
      EXPECT_EQ(s.a.infinite_point[l], s.a.class_point[c]);
      EXPECT_TRUE(contains(s.h.points, s.a.infinite_point[l]));
      EXPECT_TRUE(contains(g.line(s.a.parent[l]), s.a.infinite_point[l]));
      EXPECT_EQ(s.a.structure.line(l).size() + 1, g.line(s.a.parent[l]).size());
      for (std::size_t j = i + 1; j < cls.size(); ++j) EXPECT_FALSE(s.a.structure.lines_meet(l, cls[j]));
    }
  }
  EXPECT_EQ(s.a.parallel_classes.size(), 280u);
}

TEST(Reduct, DirectionsAndTops) {
  const auto& s = pg33();
  const auto d = vero::classify_directions(s.a);
  int doubles = 0;
  for (int p : s.a.class_point) doubles += s.v.point(p).support().size() == 1 ? 1 : 0;
  EXPECT_EQ(d.one_leaf, doubles);
  EXPECT_EQ(d.one_leaf, 40);
  EXPECT_EQ(d.two_leaf, 240);
  EXPECT_TRUE(d.veblen_refines);
  EXPECT_TRUE(d.matches_ambient);
  for (const auto& dir : d.directions) EXPECT_EQ(dir.subclasses.size(), dir.kind == vero::DirectionKind::kOneLeaf ? 1u : 2u);

  const auto tops = vero::reduct_tops(s.a);
  EXPECT_EQ(tops.subspaces.size(), 40u);
  for (const auto& t : tops.subspaces) EXPECT_EQ(t.size(), 27u);  // 40 - 13 points of x + S survive
  // the reduct-only tops group lines exactly as the ambient leaves do
  const auto leaf = vero::ambient_line_tops(s.a, s.v);
  std::map<int, int> to_leaf;
  for (std::size_t l = 0; l < leaf.size(); ++l) {
    const auto [it, fresh] = to_leaf.emplace(tops.line_top[l], leaf[l]);
    EXPECT_EQ(it->second, leaf[l]);
  }
  EXPECT_EQ(to_leaf.size(), 40u);
}

TEST(Reduct, VeblenParallelBasics) {
  const auto& s = pg33();
  const auto& g = s.a.structure;
  EXPECT_TRUE(vero::veblen_parallel(s.a, 0, 0));
  const auto top = vero::ambient_line_tops(s.a, s.v);
  int same_leaf_hits = 0, cross_leaf_hits = 0;
  for (int p = 0; p < 40; ++p) {
    const auto through = g.lines_through(p);
    for (std::size_t i = 0; i < through.size(); ++i)
      for (std::size_t j = i + 1; j < through.size(); ++j)
        if (top[through[i]] != top[through[j]]) {
          EXPECT_FALSE(vero::veblen_parallel(s.a, through[i], through[j]));
          ++cross_leaf_hits;
        }
  }
  for (int l = 1; l < g.line_count() && same_leaf_hits < 20; ++l) {
    if (top[l] != top[0] || g.lines_meet(0, l) || s.a.class_of_line[l] != s.a.class_of_line[0]) continue;
    EXPECT_TRUE(vero::veblen_parallel(s.a, 0, l));
    ++same_leaf_hits;
  }
  EXPECT_GT(cross_leaf_hits, 0);
  EXPECT_GT(same_leaf_hits, 0);
}

TEST(Reduct, PlaneFromLeafTriangle) {
  const auto& s = pg33();
  const auto& g = s.a.structure;
  const auto top = vero::ambient_line_tops(s.a, s.v);
  // a triangle inside one leaf x + S
  const int l2 = 0;
  const int e1 = g.line(l2)[0];
  int l3 = -1;
  for (int l : g.lines_through(e1))
    if (l != l2 && top[l] == top[l2]) l3 = l;
  ASSERT_GE(l3, 0);
  int l1 = -1;
  for (int l = 0; l < g.line_count() && l1 < 0; ++l) {
    if (top[l] != top[l2] || l == l2 || l == l3) continue;
    const auto a = g.meet(l, l2), b = g.meet(l, l3);
    if (a && b && *a != e1 && *b != e1) l1 = l;
  }
  ASSERT_GE(l1, 0);
  const auto r = vero::plane_from_triangle(s.a, l1, l2, l3);
  EXPECT_FALSE(r.degenerate);
  ASSERT_EQ(r.points.size(), 9u);
  // oracle: the base points y of the plane span a projective plane; the plane is that
  // plane minus its trace on the polar of x
  const int x = s.v.leaf_key(top[l2]).expansion()[0];
  std::vector<vero::Vec> ys;
  vero::PointSet base;
  for (int p : r.points) {
    const auto e = s.v.point(s.a.to_ambient[p]).expansion();
    const int y = e[0] == x ? e[1] : e[0];
    base.push_back(y);
    ys.push_back(s.pg.coord(y));
  }
  std::sort(base.begin(), base.end());
  const auto span = s.pg.span(ys);
  EXPECT_EQ(span.size(), 13u);
  vero::PointSet expected;
  for (int y : span)
    if (s.xi.evaluate(s.pg.coord(x), s.pg.coord(y)) != 0) expected.push_back(y);
  EXPECT_EQ(base, expected);
}

TEST(Reduct, PlaneFromThreeLeafTriangleIsDegenerate) {
  const auto& s = pg33();
  const auto& g = s.a.structure;
  // a non-isotropic base line m and the translates a + m, b + m, c + m
  int m = -1;
  for (int l = 0; l < s.pg.structure().line_count() && m < 0; ++l) {
    const auto& pts = s.pg.structure().line(l);
    if (s.xi.evaluate(s.pg.coord(pts[0]), s.pg.coord(pts[1])) != 0) m = l;
  }
  ASSERT_GE(m, 0);
  const auto& mp = s.pg.structure().line(m);
  std::vector<int> sides;
  vero::PointSet proper_m2;
  for (int i = 0; i < 3; ++i) {
    vero::PointSet trace;
    for (int y : mp)
      if (y != mp[i]) trace.push_back(s.v.index_of(vero::Multiset::from_expansion(std::vector<int>{mp[i], y})));
    std::sort(trace.begin(), trace.end());
    vero::PointSet local;
    for (int q : trace) {
      const auto it = std::find(s.a.to_ambient.begin(), s.a.to_ambient.end(), q);
      ASSERT_NE(it, s.a.to_ambient.end());
      local.push_back(static_cast<int>(it - s.a.to_ambient.begin()));
    }
    std::sort(local.begin(), local.end());
    auto line = g.find_line(local);
    ASSERT_TRUE(line.has_value());
    sides.push_back(*line);
    proper_m2.insert(proper_m2.end(), local.begin(), local.end());
  }
  proper_m2 = vero::make_point_set(proper_m2);
  const auto r = vero::plane_from_triangle(s.a, sides[0], sides[1], sides[2]);
  EXPECT_TRUE(r.degenerate);
  EXPECT_TRUE(std::includes(proper_m2.begin(), proper_m2.end(), r.points.begin(), r.points.end()));
  EXPECT_THROW(vero::plane_from_triangle(s.a, sides[0], sides[0], sides[1]), vero::PreconditionError);
}

TEST(Reduct, LeafHorizonLinesMatchAmbient) {
  const auto& s = pg33();
  std::map<int, int> class_of_point;
  for (std::size_t c = 0; c < s.a.class_point.size(); ++c) class_of_point[s.a.class_point[c]] = static_cast<int>(c);
  std::set<std::vector<int>> expected;
  const auto& g = s.v.structure();
  for (int l = 0; l < g.line_count(); ++l) {
    const auto& pts = g.line(l);
    if (s.v.top_of_block(l) == 0) continue;  // lines of 2S
    if (!std::includes(s.h.points.begin(), s.h.points.end(), pts.begin(), pts.end())) continue;
    std::vector<int> cls;
    for (int p : pts) cls.push_back(class_of_point.at(p));
    std::sort(cls.begin(), cls.end());
    expected.insert(cls);
  }
  const auto found = vero::recover_horizon_leaf_lines(s.a);
  EXPECT_EQ(std::set<std::vector<int>>(found.begin(), found.end()), expected);
  EXPECT_EQ(found.size(), 520u);
}

TEST(Reduct, NoNetViolationAtOrderThree) {
  const auto& s = pg33();
  EXPECT_FALSE(vero::net_violation_witness(s.a, vero::ambient_line_tops(s.a, s.v)).has_value());
}

TEST(Reduct, GammaClasses) {
  ProjectiveSpace pg(2, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto classes = vero::gamma_leaf_recovery(v.structure(), v.lift(pg.planes()));
  std::vector<vero::PointSet> leaves;
  for (int l = 0; l < v.leaf_count(); ++l) leaves.push_back(v.leaf_points(l));
  std::sort(leaves.begin(), leaves.end());
  EXPECT_EQ(classes, leaves);
  EXPECT_THROW(vero::gamma_leaf_recovery(v.structure(), {}), vero::IndeterminateError);
}

TEST(Reduct, JsonRoundTripAndRejection) {
  const auto& s = pg33();
  const auto back = vero::reduct_from_json(vero::to_json(s.a));
  EXPECT_EQ(back.structure.lines(), s.a.structure.lines());
  EXPECT_EQ(back.parallel_classes, s.a.parallel_classes);
  EXPECT_EQ(back.class_of_line, s.a.class_of_line);
  vero::PointSet not_h(s.h.points.begin(), s.h.points.end() - 1);
  EXPECT_THROW(vero::build_reduct(s.v, not_h), vero::PreconditionError);
}
