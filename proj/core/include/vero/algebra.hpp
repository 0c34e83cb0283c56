#pragma once

#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

namespace vero {

using Vec = std::vector<int>;
using Matrix = std::vector<std::vector<int>>;

bool is_prime(int n);

/// GF(p) for a prime p. Elements are ints in [0, p).
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int reduce(long long x) const {
    long long r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }
  int add(int a, int b) const { return reduce(static_cast<long long>(a) + b); }
  int sub(int a, int b) const { return reduce(static_cast<long long>(a) - b); }
  int mul(int a, int b) const { return reduce(static_cast<long long>(a) * b); }
  int neg(int a) const { return reduce(-static_cast<long long>(a)); }
  int inv(int a) const;
  int pow(int a, long long e) const;
  int dot(const Vec& u, const Vec& v) const;

 private:
  int p_;
};

/// Scales a nonzero vector so its first nonzero coordinate is 1.
Vec normalize_projective(const Vec& v, const PrimeField& f);
bool is_zero_vector(const Vec& v);

/// All normalized representatives of PG(dim-1, p), in lexicographic order.
std::vector<Vec> projective_points(int dim, const PrimeField& f);

/// Rank and right null space by Gaussian elimination mod p.
int rank(Matrix m, const PrimeField& f);
std::vector<Vec> null_space(const Matrix& m, const PrimeField& f);
int determinant(Matrix m, const PrimeField& f);

/// xi(u, v) = u^T M v over GF(p).
class BilinearForm {
 public:
  BilinearForm(PrimeField f, Matrix m);

  /// J = [[0, I], [-I, 0]] on GF(p)^dim, dim even.
  static BilinearForm standard_symplectic(int dim, int p);
  static BilinearForm identity(int dim, int p);

  const PrimeField& field() const { return field_; }
  int dim() const { return static_cast<int>(m_.size()); }
  const Matrix& matrix() const { return m_; }

  int evaluate(const Vec& u, const Vec& v) const;
  bool is_zero() const;
  bool is_symmetric() const;
  /// M^T = -M with zero diagonal, i.e. xi(v, v) = 0 for all v.
  bool is_alternating() const;
  bool is_reflexive() const { return is_symmetric() || is_alternating(); }
  bool is_symplectic() const { return is_alternating(); }
  std::vector<Vec> radical() const;
  bool is_nondegenerate() const { return radical().empty(); }

 private:
  PrimeField field_;
  Matrix m_;
};

/// Indices (into `points`) of the projective points <u> with xi(u, q) = 0.
/// Throws PreconditionError for the zero form.
std::vector<int> quasi_correlation(const BilinearForm& xi, const Vec& q, const std::vector<Vec>& points);

/// Q(v) = sum_{i <= j} a_ij v_i v_j, stored upper triangular.
class QuadraticForm {
 public:
  QuadraticForm(PrimeField f, Matrix upper);

  /// v0 v1 + v2 v3 + ... on GF(p)^dim, dim even.
  static QuadraticForm hyperbolic(int dim, int p);
  /// Parabolic form v0^2 + v1 v2 + v3 v4 + ... on GF(p)^dim, dim odd.
  static QuadraticForm parabolic(int dim, int p);
  /// Elliptic form: an anisotropic binary form plus hyperbolic pairs, dim even.
  static QuadraticForm elliptic(int dim, int p);

  const PrimeField& field() const { return field_; }
  int dim() const { return static_cast<int>(a_.size()); }
  const Matrix& matrix() const { return a_; }

  int evaluate(const Vec& v) const;
  /// Polar form B(u, v) = Q(u + v) - Q(u) - Q(v).
  int polar(const Vec& u, const Vec& v) const;
  /// Indices of singular points among `points`.
  std::vector<int> singular_points(const std::vector<Vec>& points) const;
  /// Projective dimension + 1 of a maximal totally singular subspace, found by
  /// greedy extension over the singular points.
  int witt_index() const;
  /// A totally singular line exists.
  bool isotropic_index_at_least_2() const { return witt_index() >= 2; }

 private:
  PrimeField field_;
  Matrix a_;
};

/// k-linear alternating form on GF(p)^n, given by coefficients on strictly
/// increasing index tuples: eta(v_1..v_k) = sum_I c_I det[v_j(I_l)].
class AlternatingMultiForm {
 public:
  AlternatingMultiForm(PrimeField f, int arity, int dim, std::map<std::vector<int>, int> coeffs);

  static AlternatingMultiForm determinant(int dim, int p);
  /// The arity-2 form with the same values as an alternating bilinear form.
  static AlternatingMultiForm from_bilinear(const BilinearForm& xi);

  const PrimeField& field() const { return field_; }
  int arity() const { return arity_; }
  int dim() const { return dim_; }
  const std::map<std::vector<int>, int>& coefficients() const { return coeffs_; }

  int evaluate(const std::vector<Vec>& args) const;
  bool perp(const std::vector<Vec>& args) const { return evaluate(args) == 0; }
  /// For every point q some q_2..q_k make eta nonzero.
  bool is_nondegenerate(const std::vector<Vec>& points) const;

 private:
  PrimeField field_;
  int arity_;
  int dim_;
  std::map<std::vector<int>, int> coeffs_;
};

nlohmann::json to_json(const BilinearForm& xi);
nlohmann::json to_json(const QuadraticForm& q);
nlohmann::json to_json(const AlternatingMultiForm& eta);
BilinearForm bilinear_from_json(const nlohmann::json& j);
QuadraticForm quadratic_from_json(const nlohmann::json& j);
AlternatingMultiForm alternating_from_json(const nlohmann::json& j);

}  // namespace vero
