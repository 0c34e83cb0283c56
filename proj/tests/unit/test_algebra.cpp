#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "vero/algebra.hpp"
#include "vero/error.hpp"

using vero::Matrix;
using vero::PrimeField;
using vero::Vec;

namespace {

int det_by_permutations(const Matrix& m, const PrimeField& f) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long long total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    long long term = 1;
    for (int i = 0; i < n; ++i) term = f.reduce(term * m[i][perm[i]]);
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return f.reduce(total);
}

Vec times(const Matrix& m, const Vec& v, const PrimeField& f) {
  Vec out;
  for (const auto& row : m) out.push_back(f.dot(row, v));
  return out;
}

}  // namespace

TEST(Algebra, FieldInverses) {
  for (int p : {3, 5, 7, 11}) {
    PrimeField f(p);
    for (int a = 1; a < p; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1) << p << " " << a;
  }
  EXPECT_THROW(PrimeField(4), vero::PreconditionError);
  EXPECT_TRUE(vero::is_prime(13));
  EXPECT_FALSE(vero::is_prime(1));
}

TEST(Algebra, ProjectivePointCount) {
  for (int p : {2, 3, 5}) {
    for (int dim = 2; dim <= 4; ++dim) {
      PrimeField f(p);
      int q = 1;
      for (int i = 0; i < dim; ++i) q *= p;
      const auto pts = vero::projective_points(dim, f);
      EXPECT_EQ(static_cast<int>(pts.size()), (q - 1) / (p - 1));
      EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
      for (const auto& v : pts) EXPECT_EQ(vero::normalize_projective(v, f), v);
    }
  }
}

TEST(Algebra, RankNullityAndDeterminant) {
  std::mt19937 rng(7);
  PrimeField f(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    Matrix m(static_cast<std::size_t>(rows), Vec(static_cast<std::size_t>(cols)));
    for (auto& r : m)
      for (auto& x : r) x = static_cast<int>(rng() % 5);
    const auto ns = vero::null_space(m, f);
    EXPECT_EQ(vero::rank(m, f) + static_cast<int>(ns.size()), cols);
    for (const auto& v : ns) EXPECT_TRUE(vero::is_zero_vector(times(m, v, f)));
    if (rows == cols) {
      EXPECT_EQ(vero::determinant(m, f), det_by_permutations(m, f));
      EXPECT_EQ(vero::determinant(m, f) != 0, vero::rank(m, f) == rows);
    }
  }
}

TEST(Algebra, BilinearKinds) {
  const auto j = vero::BilinearForm::standard_symplectic(4, 3);
  EXPECT_TRUE(j.is_alternating());
  EXPECT_FALSE(j.is_symmetric());
  EXPECT_TRUE(j.is_nondegenerate());
  const auto id = vero::BilinearForm::identity(3, 3);
  EXPECT_TRUE(id.is_symmetric());
  EXPECT_FALSE(id.is_alternating());
  EXPECT_TRUE(id.is_reflexive());
  vero::BilinearForm degenerate(PrimeField(3), {{0, 1, 0}, {2, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(degenerate.radical().size(), 1u);
}

TEST(Algebra, QuasiCorrelationIsPerp) {
  PrimeField f(3);
  const auto pts = vero::projective_points(4, f);
  const auto j = vero::BilinearForm::standard_symplectic(4, 3);
  for (std::size_t q = 0; q < pts.size(); q += 7) {
    const auto perp = vero::quasi_correlation(j, pts[q], pts);
    EXPECT_EQ(perp.size(), 13u);
    EXPECT_TRUE(std::binary_search(perp.begin(), perp.end(), static_cast<int>(q)));
  }
}

TEST(Algebra, QuadricsAndWittIndex) {
  PrimeField f(3);
  const auto pts = vero::projective_points(4, f);
  const auto hyp = vero::QuadraticForm::hyperbolic(4, 3);
  const auto ell = vero::QuadraticForm::elliptic(4, 3);
  EXPECT_EQ(hyp.singular_points(pts).size(), 16u);  // (q+1)^2
  EXPECT_EQ(ell.singular_points(pts).size(), 10u);  // q^2+1
  EXPECT_EQ(hyp.witt_index(), 2);
  EXPECT_EQ(ell.witt_index(), 1);
  for (const auto& u : pts) {
    for (const auto& v : pts) {
      Vec s(4);
      for (int i = 0; i < 4; ++i) s[i] = f.add(u[i], v[i]);
      EXPECT_EQ(hyp.polar(u, v), f.sub(f.sub(hyp.evaluate(s), hyp.evaluate(u)), hyp.evaluate(v)));
    }
  }
}

TEST(Algebra, DeterminantFormIsAlternating) {
  const auto eta = vero::AlternatingMultiForm::determinant(3, 3);
  PrimeField f(3);
  const Vec e0{1, 0, 0}, e1{0, 1, 0}, e2{0, 0, 1}, w{1, 2, 1};
  EXPECT_EQ(eta.evaluate({e0, e1, e2}), 1);
  EXPECT_EQ(eta.evaluate({e1, e0, e2}), f.neg(1));
  EXPECT_EQ(eta.evaluate({w, e1, w}), 0);
  EXPECT_EQ(eta.evaluate({w, e1, e2}), det_by_permutations({w, e1, e2}, f));
}

TEST(Algebra, JsonRoundTrip) {
  const auto j = vero::BilinearForm::standard_symplectic(4, 5);
  EXPECT_EQ(vero::bilinear_from_json(vero::to_json(j)).matrix(), j.matrix());
  const auto eta = vero::AlternatingMultiForm::determinant(3, 3);
  EXPECT_EQ(vero::alternating_from_json(vero::to_json(eta)).coefficients(), eta.coefficients());
  const auto q = vero::QuadraticForm::parabolic(5, 3);
  EXPECT_EQ(vero::quadratic_from_json(vero::to_json(q)).matrix(), q.matrix());
}
