#include <gtest/gtest.h>

#include "vero/error.hpp"
#include "vero/multiset.hpp"
#include "vero/parallelism_search.hpp"

using vero::AffineSpace;
using vero::VeroneseSpace;

namespace {

// |w_k(S)|: multisets of degree below k over n points.
std::uint64_t leaves(int n, int k) {
  std::uint64_t total = 0;
  for (int d = 0; d < k; ++d) total += vero::binomial(static_cast<std::uint64_t>(n + d - 1), static_cast<std::uint64_t>(d));
  return total;
}

}  // namespace

TEST(ParallelismSearch, InducedClassSizes) {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {1, 3}, {2, 3}}) {
    AffineSpace ag(n, 3);
    const auto v = VeroneseSpace::build(ag.structure(), k);
    const auto r = vero::induced_relation(v, ag.parallel());
    EXPECT_TRUE(r.is_equivalence());
    ASSERT_EQ(r.classes.size(), ag.parallel().parallel_classes.size());
    for (std::size_t c = 0; c < r.classes.size(); ++c) {
      EXPECT_EQ(r.classes[c].size(), leaves(ag.structure().point_count(), k) * ag.parallel().parallel_classes[c].size());
    }
  }
}

TEST(ParallelismSearch, SameGeneratorRelated) {
  AffineSpace ag(2, 3);
  const auto v = VeroneseSpace::build(ag.structure(), 2);
  const auto r = vero::induced_relation(v, ag.parallel());
  // a + L and 2L share the generator L, so they fall in one class
  for (int b = 0; b < v.structure().line_count(); ++b) {
    const auto& o = v.origins(b).front();
    for (int c = 0; c < v.structure().line_count(); ++c) {
      if (v.origins(c).front().base_line != o.base_line) continue;
      bool together = false;
      for (const auto& cls : r.classes)
        together = together || (std::count(cls.begin(), cls.end(), b) && std::count(cls.begin(), cls.end(), c));
      EXPECT_TRUE(together);
    }
  }
}

TEST(ParallelismSearch, EuclidFailure) {
  AffineSpace ag(2, 3);
  const auto v2 = VeroneseSpace::build(ag.structure(), 2);
  const auto e = vero::check_euclid_failure(v2, ag.parallel());
  EXPECT_TRUE(e.classes_cover);
  EXPECT_TRUE(e.k_members_per_point);
  ASSERT_TRUE(e.fails_euclid);
  const auto& g = v2.structure();
  EXPECT_NE(e.witness_block_a, e.witness_block_b);
  EXPECT_TRUE(g.on_line(e.witness_point, e.witness_block_a));
  EXPECT_TRUE(g.on_line(e.witness_point, e.witness_block_b));

  const auto v1 = VeroneseSpace::build(ag.structure(), 1);
  const auto one = vero::check_euclid_failure(v1, ag.parallel());
  EXPECT_FALSE(one.fails_euclid);
  EXPECT_TRUE(one.k_members_per_point);
}

TEST(ParallelismSearch, NoneOnAffineLine) {
  AffineSpace ag(1, 3);
  const auto v = VeroneseSpace::build(ag.structure(), 2);
  // oracle: a covering class of disjoint 3-blocks on 6 points needs two disjoint blocks
  const auto& g = v.structure();
  bool disjoint_pair = false;
  for (int a = 0; a < g.line_count(); ++a)
    for (int b = a + 1; b < g.line_count(); ++b) disjoint_pair = disjoint_pair || !g.lines_meet(a, b);
  EXPECT_FALSE(disjoint_pair);
  const auto r = vero::search_leaf_closed_parallelism(v, ag.parallel());
  EXPECT_EQ(r.outcome, vero::SearchOutcome::kNone);
  EXPECT_EQ(r.units, 4u);
  const auto again = vero::search_leaf_closed_parallelism(v, ag.parallel());
  EXPECT_EQ(again.tree_hash, r.tree_hash);
  EXPECT_EQ(again.nodes, r.nodes);
}

TEST(ParallelismSearch, NoneOnAffinePlaneAndFoundAtLevelOne) {
  AffineSpace ag(2, 3);
  const auto v2 = VeroneseSpace::build(ag.structure(), 2);
  const auto r = vero::search_leaf_closed_parallelism(v2, ag.parallel());
  EXPECT_EQ(r.outcome, vero::SearchOutcome::kNone);
  EXPECT_EQ(r.units, 40u);  // 10 leaves, 4 directions each

  const auto v1 = VeroneseSpace::build(ag.structure(), 1);
  const auto found = vero::search_leaf_closed_parallelism(v1, ag.parallel());
  ASSERT_EQ(found.outcome, vero::SearchOutcome::kFound);
  auto expected = ag.parallel().parallel_classes;
  for (auto& c : expected) std::sort(c.begin(), c.end());
  std::sort(expected.begin(), expected.end());
  auto got = found.parallelism;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expected);
}

TEST(ParallelismSearch, BudgetIsReported) {
  AffineSpace ag(2, 3);
  const auto v1 = VeroneseSpace::build(ag.structure(), 1);
  const auto r = vero::search_leaf_closed_parallelism(v1, ag.parallel(), 2);
  EXPECT_EQ(r.outcome, vero::SearchOutcome::kBudgetExceeded);
  EXPECT_STREQ(vero::to_string(r.outcome), "BUDGET_EXCEEDED");
}

TEST(ParallelismSearch, CountingIdentity) {
  EXPECT_TRUE(vero::counting_identity_solutions(2, 50, 2, 6).empty());
  // the ratio C(n+k-1,k) / C(n+k-1,k-1) is n/k, so equality with n means k = 1
  EXPECT_EQ(vero::counting_identity_solutions(2, 50, 1, 1).size(), 49u);
  for (int n = 2; n <= 10; ++n)
    for (int k = 1; k <= 6; ++k) {
      const auto top = static_cast<std::uint64_t>(n + k - 1);
      EXPECT_EQ(vero::binomial(top, k) * k, vero::binomial(top, k - 1) * static_cast<std::uint64_t>(n));
    }
}

TEST(ParallelismSearch, VeblenParallelTwoRoutes) {
  AffineSpace ag(2, 3);
  const auto v = VeroneseSpace::build(ag.structure(), 2);
  const auto r = vero::cross_check_veblen_parallel(v, ag.parallel());
  EXPECT_FALSE(r.mismatch.has_value());
  EXPECT_EQ(r.pairs, 120u * 121u / 2u);
  // reflexive pairs plus 3 pairs in each of the 40 per-leaf directions
  EXPECT_EQ(r.parallel_pairs, 120u + 40u * 3u);
  EXPECT_TRUE(vero::veblen_union_is_preparallelism(v.structure()));
  const auto self = vero::veblen_parallel_in_affine_veronese(v, ag.parallel(), 5, 5);
  EXPECT_TRUE(self.by_definition && self.by_generators);
}

TEST(ParallelismSearch, RejectsForeignBase) {
  AffineSpace ag(2, 3), other(1, 3);
  const auto v = VeroneseSpace::build(ag.structure(), 2);
  EXPECT_THROW(vero::induced_relation(v, other.parallel()), vero::PreconditionError);
}
