#include <gtest/gtest.h>

#include <map>
#include <set>

#include "vero/error.hpp"
#include "vero/spaces.hpp"
#include "vero/veronese.hpp"

using vero::IncidenceStructure;
using vero::Multiset;
using vero::VeroneseSpace;

namespace {

IncidenceStructure fano() { return vero::ProjectiveSpace(2, 2).structure(); }

using Sorted = std::vector<int>;  // sorted expansion of a multiset

void all_multisets(int n, int k, int from, Sorted& cur, std::vector<Sorted>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = from; x < n; ++x) {
    cur.push_back(x);
    all_multisets(n, k, x, cur, out);
    cur.pop_back();
  }
}

// Blocks of V(k, base) as sets of sorted expansions, built straight from the definition.
std::set<std::set<Sorted>> brute_blocks(const IncidenceStructure& base, int k) {
  std::set<std::set<Sorted>> blocks;
  for (int deg = 0; deg < k; ++deg) {
    std::vector<Sorted> es;
    Sorted cur;
    all_multisets(base.point_count(), deg, 0, cur, es);
    for (const auto& e : es) {
      for (const auto& line : base.lines()) {
        std::set<Sorted> block;
        for (int x : line) {
          Sorted s = e;
          for (int i = deg; i < k; ++i) s.push_back(x);
          std::sort(s.begin(), s.end());
          block.insert(s);
        }
        blocks.insert(block);
      }
    }
  }
  return blocks;
}

std::set<std::set<Sorted>> library_blocks(const VeroneseSpace& v) {
  std::set<std::set<Sorted>> blocks;
  for (const auto& l : v.structure().lines()) {
    std::set<Sorted> block;
    for (int p : l) block.insert(v.point(p).expansion());
    blocks.insert(block);
  }
  return blocks;
}

}  // namespace

TEST(Veronese, MatchesDefinition) {
  const std::vector<std::pair<IncidenceStructure, int>> cases = {
      {fano(), 2}, {fano(), 3}, {vero::ProjectiveSpace(2, 3).structure(), 2}, {vero::AffineSpace(2, 3).structure(), 2}};
  for (const auto& [base, k] : cases) {
    const auto v = VeroneseSpace::build(base, k);
    const auto brute = brute_blocks(base, k);
    EXPECT_EQ(library_blocks(v), brute);
    EXPECT_EQ(static_cast<std::size_t>(v.structure().line_count()), brute.size());
    EXPECT_TRUE(vero::is_partial_linear(v.structure()));
  }
}

TEST(Veronese, ParametersAgainstEnumeration) {
  struct Case {
    IncidenceStructure base;
    std::uint64_t r0, kappa0;
    int k;
  };
  for (const auto& c : {Case{fano(), 3, 3, 2}, Case{fano(), 3, 3, 3}, Case{vero::ProjectiveSpace(2, 3).structure(), 4, 4, 2},
                        Case{vero::ProjectiveSpace(2, 3).structure(), 4, 4, 3}}) {
    const auto v = VeroneseSpace::build(c.base, c.k);
    const auto p = vero::veronese_parameters(static_cast<std::uint64_t>(c.base.point_count()),
                                             static_cast<std::uint64_t>(c.base.line_count()), c.r0, c.kappa0,
                                             static_cast<std::uint64_t>(c.k));
    EXPECT_EQ(p.v, static_cast<std::uint64_t>(v.point_count()));
    EXPECT_EQ(p.b, static_cast<std::uint64_t>(v.structure().line_count()));
    for (int x = 0; x < v.point_count(); ++x) EXPECT_EQ(v.structure().lines_through(x).size(), p.r);
    for (const auto& l : v.structure().lines()) EXPECT_EQ(l.size(), p.kappa);
  }
  const auto f = vero::veronese_parameters(7, 7, 3, 3, 2);
  EXPECT_EQ(f, (vero::VeroneseParameters{28, 56, 6, 3}));
  EXPECT_EQ(vero::veronese_parameters(13, 13, 4, 4, 2), (vero::VeroneseParameters{91, 182, 8, 4}));
}

TEST(Veronese, Leaves) {
  for (int k : {2, 3}) {
    const auto v = VeroneseSpace::build(fano(), k);
    std::uint64_t below = 0;
    for (int d = 0; d < k; ++d) below += vero::binomial(7 + d - 1, d);
    EXPECT_EQ(static_cast<std::uint64_t>(v.leaf_count()), below);
    EXPECT_EQ(v.leaf_key(0).degree(), 0);
    for (int x = 0; x < v.point_count(); ++x) EXPECT_EQ(static_cast<int>(v.leaves_through(x).size()), k);
    for (int b = 0; b < v.structure().line_count(); ++b) {
      const auto leaf = v.leaf_points(v.top_of_block(b));
      for (int x : v.structure().line(b)) EXPECT_TRUE(std::binary_search(leaf.begin(), leaf.end(), x));
    }
  }
}

TEST(Veronese, LevelOneIsBase) {
  const auto v = VeroneseSpace::build(fano(), 1);
  EXPECT_EQ(v.point_count(), 7);
  EXPECT_EQ(v.structure().line_count(), 7);
  EXPECT_EQ(v.leaf_count(), 1);
}

TEST(Veronese, Embeddings) {
  const auto v1 = VeroneseSpace::build(fano(), 1);
  const auto v2 = VeroneseSpace::build(fano(), 2);
  const auto v3 = VeroneseSpace::build(fano(), 3);
  const auto mu = vero::mu_embedding(v1, v3, 3);
  EXPECT_TRUE(vero::is_embedding(v1.structure(), v3.structure(), mu));
  const auto tau = vero::tau_embedding(v2, v3, vero::scale_point(1, 4));
  EXPECT_TRUE(vero::is_embedding(v2.structure(), v3.structure(), tau));
  for (int x = 0; x < v2.point_count(); ++x) EXPECT_EQ(v3.point(tau[x]), v2.point(x) + vero::scale_point(1, 4));
}

TEST(Veronese, RestrictionAndMonotonicity) {
  const auto pg = vero::ProjectiveSpace(2, 3).structure();
  EXPECT_TRUE(vero::verify_restriction_fact(pg, pg.line(0), 2));
  EXPECT_TRUE(vero::verify_restriction_fact(pg, {0, 1, 2, 3, 4, 5, 6}, 2));
  std::vector<vero::PointSet> fewer(pg.lines().begin(), pg.lines().begin() + 6);
  EXPECT_TRUE(vero::verify_line_monotonicity(IncidenceStructure(pg.point_count(), fewer), pg, 2));
}

TEST(Veronese, RejectsNonPls) {
  IncidenceStructure bad(4, {{0, 1, 2}, {2, 3}});
  EXPECT_THROW(VeroneseSpace::build(bad, 2), vero::PreconditionError);
  EXPECT_THROW(VeroneseSpace::build(fano(), 0), vero::PreconditionError);
}
