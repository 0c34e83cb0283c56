#include <gtest/gtest.h>

#include "vero/error.hpp"
#include "vero/hyperplanes.hpp"

using vero::BilinearForm;
using vero::ProjectiveSpace;
using vero::VeroneseSpace;

namespace {

bool contains(const vero::PointSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

}  // namespace

TEST(Hyperplanes, SymplecticOnProjectiveLineIsDoubleS) {
  ProjectiveSpace pg(1, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto h = vero::hyperplane_from_symplectic(v, pg, BilinearForm::standard_symplectic(2, 3));
  vero::PointSet doubles;
  for (int x = 0; x < v.point_count(); ++x)
    if (v.point(x).support().size() == 1) doubles.push_back(x);
  EXPECT_EQ(h.points, doubles);
  EXPECT_TRUE(vero::is_hyperplane(v.structure(), h.points));
}

TEST(Hyperplanes, SymplecticPG33MatchesPerpPairs) {
  ProjectiveSpace pg(3, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto xi = BilinearForm::standard_symplectic(4, 3);
  const auto h = vero::hyperplane_from_symplectic(v, pg, xi);
  vero::PointSet oracle;
  for (int p = 0; p < v.point_count(); ++p) {
    const auto e = v.point(p).expansion();
    if (xi.evaluate(pg.coord(e[0]), pg.coord(e[1])) == 0) oracle.push_back(p);
  }
  EXPECT_EQ(h.points, oracle);
  EXPECT_EQ(h.points.size(), 280u);  // 40 points 2x plus 40*12/2 perpendicular pairs
  EXPECT_TRUE(vero::is_hyperplane(v.structure(), h.points));
  EXPECT_TRUE(vero::check_spiky(v.structure(), h.points).spiky);
  EXPECT_FALSE(vero::check_flappy(v.structure(), h.points, v.lift(pg.planes())).flappy);
  // h(x) on the leaf x + S is the polar plane of x
  const auto hf = vero::extract_h_function(v, h.points);
  for (int leaf = 1; leaf < v.leaf_count(); ++leaf) {
    const int x = v.leaf_key(leaf).expansion()[0];
    EXPECT_EQ(hf.traces[leaf], vero::make_point_set(vero::quasi_correlation(xi, pg.coord(x), pg.coords())));
  }
  EXPECT_TRUE(hf.is_full(0));
}

TEST(Hyperplanes, SymplecticRejectsBadForms) {
  ProjectiveSpace pg(2, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  EXPECT_THROW(vero::hyperplane_from_symplectic(v, pg, BilinearForm::identity(3, 3)), vero::PreconditionError);
}

TEST(Hyperplanes, DeterminantLevelThree) {
  ProjectiveSpace pg(2, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 3);
  const auto h = vero::hyperplane_from_alternating(v, pg, vero::AlternatingMultiForm::determinant(3, 3));
  EXPECT_TRUE(vero::is_hyperplane(v.structure(), h.points));
  // complement: unordered triples of non-collinear points, 13*12*9/6
  int complement = 0;
  for (int p = 0; p < v.point_count(); ++p) {
    if (contains(h.points, p)) continue;
    ++complement;
    const auto s = v.point(p).support();
    ASSERT_EQ(s.size(), 3u);
    EXPECT_NE(vero::determinant({pg.coord(s[0]), pg.coord(s[1]), pg.coord(s[2])}, pg.field()), 0);
  }
  EXPECT_EQ(complement, 234);
}

TEST(Hyperplanes, VariantIsNotSubspace) {
  ProjectiveSpace pg(2, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto xi = BilinearForm::identity(3, 3);
  const auto h0 = pg.hyperplane({1, 0, 0});  // contains (0,1,0), which is not selfconjugate
  const auto r = vero::variant_with_hyperplane_at_zero(v, pg, xi, h0);
  EXPECT_FALSE(r.is_subspace);
  ASSERT_TRUE(r.witness_line.has_value());
  int inside = 0;
  for (int x : v.structure().line(*r.witness_line)) inside += contains(r.points, x) ? 1 : 0;
  EXPECT_GE(inside, 2);
  EXPECT_LT(inside, 4);
}

TEST(Hyperplanes, CharacterizationOnProjectiveLine) {
  ProjectiveSpace pg(1, 3);
  const auto v = VeroneseSpace::build(pg.structure(), 2);
  const auto r = vero::verify_characterization(v, pg);
  // exhaustive scan also finds the leaves x + S, which come from no symplectic form
  EXPECT_EQ(r.enumerated, 5u);
  EXPECT_EQ(r.constructed, 1u);
  EXPECT_EQ(r.unmatched.size(), 4u);
  EXPECT_TRUE(r.unmatched_are_leaf_unions);
  EXPECT_TRUE(r.traces_well_formed);
  EXPECT_FALSE(r.equal);
}

TEST(Hyperplanes, PolarIntersection) {
  ProjectiveSpace pg(3, 3);
  const auto xi = BilinearForm::standard_symplectic(4, 3);
  const auto av = VeroneseSpace::build(pg.structure(), 2);
  const auto h = vero::hyperplane_from_symplectic(av, pg, xi);
  auto w = vero::polar_space_symplectic(xi);
  const auto pv = VeroneseSpace::build(w.structure(), 2);
  const auto ph = vero::polar_hyperplane(pv, av, w.embedding.to_parent, h.points);
  EXPECT_TRUE(vero::is_hyperplane(pv.structure(), ph));
  EXPECT_EQ(ph.size(), 280u);  // W(3,3) has every point of PG(3,3)
}
