#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "vero/error.hpp"
#include "vero/multiset.hpp"

using vero::Multiset;

namespace {

// Pascal triangle, kept separate from vero::binomial.
std::uint64_t pascal(int n, int k) {
  std::vector<std::vector<std::uint64_t>> t(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    t[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
    for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return (k < 0 || k > n) ? 0 : t[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Multiset ms(std::initializer_list<int> pts) {
  std::vector<int> v(pts);
  return Multiset::from_expansion(v);
}

}  // namespace

TEST(Multiset, EnumerateThreeTwo) {
  auto all = vero::enumerate_multisets(3, 2);
  ASSERT_EQ(all.size(), 6u);
  std::vector<Multiset> want = {ms({0, 0}), ms({0, 1}), ms({0, 2}), ms({1, 1}), ms({1, 2}), ms({2, 2})};
  EXPECT_EQ(all, want);
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(Multiset, EnumerateDegreeZero) {
  for (int n = 1; n < 5; ++n) {
    auto all = vero::enumerate_multisets(n, 0);
    ASSERT_EQ(all.size(), 1u);
    EXPECT_TRUE(all[0].empty());
  }
}

TEST(Multiset, EnumerateFourTwo) {
  auto all = vero::enumerate_multisets(4, 2);
  EXPECT_EQ(all.size(), pascal(5, 2));
  std::set<std::vector<int>> distinct;
  for (const auto& m : all) distinct.insert(m.expansion());
  EXPECT_EQ(distinct.size(), all.size());
}

TEST(Multiset, EmptyUniverseRejected) {
  EXPECT_THROW(vero::enumerate_multisets(0, 2), vero::PreconditionError);
  EXPECT_EQ(vero::enumerate_multisets(0, 0).size(), 1u);
}

TEST(Multiset, CountsMatchPascal) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= 4; ++k) {
      EXPECT_EQ(vero::enumerate_multisets(n, k).size(), pascal(n + k - 1, k)) << n << " " << k;
      EXPECT_EQ(vero::binomial(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k)),
                pascal(n + k - 1, k));
    }
  }
}

TEST(Multiset, AddAccumulates) {
  EXPECT_EQ(ms({0, 1}) + ms({1}), ms({0, 1, 1}));
  EXPECT_EQ(ms({0, 1}) + Multiset{}, ms({0, 1}));
  auto s = vero::scale_point(2, 0) + vero::scale_point(1, 2);
  EXPECT_EQ(s, ms({0, 0, 2}));
  EXPECT_EQ(s.degree(), 3);
  EXPECT_EQ(s.to_string(), "2*0 + 2");
}

TEST(Multiset, AddCommutativeAssociative) {
  auto all = vero::enumerate_multisets(4, 2);
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(a + b, b + a);
      for (const auto& c : all) EXPECT_EQ((a + b) + c, a + (b + c));
    }
  }
}

TEST(Multiset, ScalePoint) {
  auto m = vero::scale_point(2, 5);
  ASSERT_EQ(m.entries().size(), 1u);
  EXPECT_EQ(m.entries()[0].point, 5);
  EXPECT_EQ(m.entries()[0].multiplicity, 2);
  EXPECT_EQ(vero::scale_point(1, 0), ms({0}));
  for (int r = 1; r <= 6; ++r) {
    for (int x = 0; x <= 6; ++x) EXPECT_EQ(vero::scale_point(r, x).degree(), r);
  }
  EXPECT_THROW(vero::scale_point(0, 1), vero::PreconditionError);
  EXPECT_EQ(vero::scale(2, ms({0, 1})), ms({0, 0, 1, 1}));
}

TEST(Multiset, Support) {
  EXPECT_EQ(ms({0, 0, 1}).support(), (std::vector<int>{0, 1}));
  EXPECT_TRUE(Multiset{}.support().empty());
  EXPECT_EQ(Multiset{}.degree(), 0);
  for (const auto& f : vero::enumerate_multisets(5, 3)) {
    EXPECT_EQ(f.degree(), 3);
    EXPECT_LE(f.support().size(), 3u);
  }
}

TEST(Multiset, CanonicalUnderPermutation) {
  std::mt19937 rng(7);
  for (const auto& f : vero::enumerate_multisets(4, 4)) {
    auto e = f.expansion();
    for (int t = 0; t < 5; ++t) {
      std::shuffle(e.begin(), e.end(), rng);
      EXPECT_EQ(Multiset::from_expansion(e), f);
    }
  }
}

TEST(Multiset, OrderIsLexicographicOnExpansion) {
  auto all = vero::enumerate_multisets_below(4, 4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      EXPECT_EQ(a < b, a.expansion() < b.expansion());
    }
  }
}

TEST(Multiset, JsonRoundTrip) {
  auto m = ms({0, 0, 3});
  auto j = vero::to_json(m);
  EXPECT_EQ(j.dump(), "[[0,2],[3,1]]");
  EXPECT_EQ(vero::multiset_from_json(j), m);
  EXPECT_THROW(vero::multiset_from_json(nlohmann::json::object()), vero::PreconditionError);
}
