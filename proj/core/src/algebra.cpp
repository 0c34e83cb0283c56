#include "vero/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "vero/error.hpp"

namespace vero {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("modulus " + std::to_string(p) + " is not prime");
}

int PrimeField::pow(int a, long long e) const {
  long long base = reduce(a);
  long long r = 1;
  while (e > 0) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<int>(r);
}

int PrimeField::inv(int a) const {
  if (reduce(a) == 0) throw PreconditionError("inverse of zero");
  return pow(a, p_ - 2);
}

int PrimeField::dot(const Vec& u, const Vec& v) const {
  long long s = 0;
  for (std::size_t i = 0; i < u.size(); ++i) s += static_cast<long long>(u[i]) * v[i];
  return reduce(s);
}

bool is_zero_vector(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

Vec normalize_projective(const Vec& v, const PrimeField& f) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.reduce(v[i]);
  auto lead = std::find_if(out.begin(), out.end(), [](int x) { return x != 0; });
  if (lead == out.end()) throw PreconditionError("zero vector has no projective point");
  const int s = f.inv(*lead);
  for (auto& x : out) x = f.mul(x, s);
  return out;
}

std::vector<Vec> projective_points(int dim, const PrimeField& f) {
  if (dim < 1) throw PreconditionError("vector dimension must be positive");
  std::vector<Vec> out;
  Vec v(static_cast<std::size_t>(dim), 0);
  // Lexicographic counting; keep vectors whose first nonzero entry is 1.
  while (true) {
    auto lead = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
    if (lead != v.end() && *lead == 1) out.push_back(v);
    int i = dim - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == f.p() - 1) v[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++v[static_cast<std::size_t>(i)];
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(Matrix& m, const PrimeField& f) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && f.reduce(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const int s = f.inv(m[r][c]);
    for (auto& x : m[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const int factor = f.reduce(m[i][c]);
      if (factor == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

}  // namespace

int rank(Matrix m, const PrimeField& f) { return static_cast<int>(rref(m, f).size()); }

std::vector<Vec> null_space(const Matrix& m, const PrimeField& f) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  Matrix a = m;
  const auto pivots = rref(a, f);
  std::vector<char> is_pivot(cols, 0);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[static_cast<std::size_t>(pivots[r])] = f.neg(a[r][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

int determinant(Matrix m, const PrimeField& f) {
  const std::size_t n = m.size();
  int det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && f.reduce(m[piv][c]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = f.neg(det);
    }
    det = f.mul(det, m[c][c]);
    const int s = f.inv(m[c][c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      const int factor = f.mul(m[i][c], s);
      if (factor == 0) continue;
      for (std::size_t j = c; j < n; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[c][j]));
    }
  }
  return det;
}

namespace {

Matrix reduce_square(const Matrix& m, const PrimeField& f) {
  Matrix out = m;
  for (const auto& row : out) {
    if (row.size() != out.size()) throw PreconditionError("form matrix must be square");
  }
  for (auto& row : out) {
    for (auto& x : row) x = f.reduce(x);
  }
  return out;
}

}  // namespace

BilinearForm::BilinearForm(PrimeField f, Matrix m) : field_(f), m_(reduce_square(m, f)) {}

BilinearForm BilinearForm::standard_symplectic(int dim, int p) {
  if (dim <= 0 || dim % 2 != 0) throw PreconditionError("standard symplectic form needs even dimension");
  PrimeField f(p);
  const int h = dim / 2;
  Matrix m(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
  for (int i = 0; i < h; ++i) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + h)] = 1;
    m[static_cast<std::size_t>(i + h)][static_cast<std::size_t>(i)] = f.neg(1);
  }
  return {f, m};
}

BilinearForm BilinearForm::identity(int dim, int p) {
  Matrix m(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
  for (int i = 0; i < dim; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return {PrimeField(p), m};
}

int BilinearForm::evaluate(const Vec& u, const Vec& v) const {
  long long s = 0;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (u[i] == 0) continue;
    long long row = 0;
    for (std::size_t j = 0; j < m_.size(); ++j) row += static_cast<long long>(m_[i][j]) * v[j];
    s += static_cast<long long>(u[i]) * field_.reduce(row);
  }
  return field_.reduce(s);
}

bool BilinearForm::is_zero() const {
  return std::all_of(m_.begin(), m_.end(), [](const Vec& r) { return is_zero_vector(r); });
}

bool BilinearForm::is_symmetric() const {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    for (std::size_t j = i + 1; j < m_.size(); ++j) {
      if (m_[i][j] != m_[j][i]) return false;
    }
  }
  return true;
}

bool BilinearForm::is_alternating() const {
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i][i] != 0) return false;
    for (std::size_t j = i + 1; j < m_.size(); ++j) {
      if (field_.add(m_[i][j], m_[j][i]) != 0) return false;
    }
  }
  return true;
}

std::vector<Vec> BilinearForm::radical() const { return null_space(m_, field_); }

std::vector<int> quasi_correlation(const BilinearForm& xi, const Vec& q, const std::vector<Vec>& points) {
  if (xi.is_zero()) throw PreconditionError("quasi-correlation of the zero form");
  std::vector<int> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (xi.evaluate(points[i], q) == 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

QuadraticForm::QuadraticForm(PrimeField f, Matrix upper) : field_(f), a_(reduce_square(upper, f)) {
  for (std::size_t i = 0; i < a_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      a_[j][i] = field_.add(a_[j][i], a_[i][j]);
      a_[i][j] = 0;
    }
  }
}

QuadraticForm QuadraticForm::hyperbolic(int dim, int p) {
  if (dim <= 0 || dim % 2 != 0) throw PreconditionError("hyperbolic form needs even dimension");
  Matrix a(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
  for (int i = 0; i < dim; i += 2) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
  return {PrimeField(p), a};
}

QuadraticForm QuadraticForm::parabolic(int dim, int p) {
  if (dim <= 0 || dim % 2 != 1) throw PreconditionError("parabolic form needs odd dimension");
  Matrix a(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
  a[0][0] = 1;
  for (int i = 1; i < dim; i += 2) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
  return {PrimeField(p), a};
}

QuadraticForm QuadraticForm::elliptic(int dim, int p) {
  if (dim < 2 || dim % 2 != 0) throw PreconditionError("elliptic form needs even dimension");
  PrimeField f(p);
  if (p == 2) {
    Matrix a(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
    a[0][0] = a[0][1] = a[1][1] = 1;
    for (int i = 2; i < dim; i += 2) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
    return {f, a};
  }
  int nonsquare = 2;
  while (f.pow(nonsquare, (p - 1) / 2) != p - 1) ++nonsquare;
  Matrix a(static_cast<std::size_t>(dim), Vec(static_cast<std::size_t>(dim), 0));
  a[0][0] = 1;
  a[1][1] = f.neg(nonsquare);
  for (int i = 2; i < dim; i += 2) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + 1)] = 1;
  return {f, a};
}

int QuadraticForm::evaluate(const Vec& v) const {
  long long s = 0;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (v[i] == 0) continue;
    long long row = 0;
    for (std::size_t j = i; j < a_.size(); ++j) row += static_cast<long long>(a_[i][j]) * v[j];
    s += static_cast<long long>(v[i]) * field_.reduce(row);
  }
  return field_.reduce(s);
}

int QuadraticForm::polar(const Vec& u, const Vec& v) const {
  Vec w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = field_.add(u[i], v[i]);
  return field_.sub(field_.sub(evaluate(w), evaluate(u)), evaluate(v));
}

std::vector<int> QuadraticForm::singular_points(const std::vector<Vec>& points) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (evaluate(points[i]) == 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

int QuadraticForm::witt_index() const {
  const auto points = projective_points(dim(), field_);
  std::vector<Vec> basis;
  for (const auto& v : points) {
    if (evaluate(v) != 0) continue;
    bool orthogonal = std::all_of(basis.begin(), basis.end(), [&](const Vec& b) { return polar(b, v) == 0; });
    if (!orthogonal) continue;
    Matrix trial = basis;
    trial.push_back(v);
    if (rank(trial, field_) == static_cast<int>(trial.size())) basis.push_back(v);
  }
  return static_cast<int>(basis.size());
}

AlternatingMultiForm::AlternatingMultiForm(PrimeField f, int arity, int dim, std::map<std::vector<int>, int> coeffs)
    : field_(f), arity_(arity), dim_(dim) {
  if (arity < 1 || dim < arity) throw PreconditionError("alternating form needs 1 <= arity <= dimension");
  for (const auto& [tuple, value] : coeffs) {
    if (static_cast<int>(tuple.size()) != arity) throw PreconditionError("coefficient tuple has wrong arity");
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (tuple[i] < 0 || tuple[i] >= dim || (i > 0 && tuple[i] <= tuple[i - 1])) {
        throw PreconditionError("coefficient tuples must be strictly increasing indices below the dimension");
      }
    }
    const int v = field_.reduce(value);
    if (v != 0) coeffs_[tuple] = v;
  }
}

AlternatingMultiForm AlternatingMultiForm::determinant(int dim, int p) {
  std::vector<int> all(static_cast<std::size_t>(dim));
  for (int i = 0; i < dim; ++i) all[static_cast<std::size_t>(i)] = i;
  return {PrimeField(p), dim, dim, {{all, 1}}};
}

AlternatingMultiForm AlternatingMultiForm::from_bilinear(const BilinearForm& xi) {
  if (!xi.is_alternating()) throw PreconditionError("bilinear form is not alternating");
  std::map<std::vector<int>, int> coeffs;
  for (int i = 0; i < xi.dim(); ++i) {
    for (int j = i + 1; j < xi.dim(); ++j) {
      const int v = xi.matrix()[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v != 0) coeffs[{i, j}] = v;
    }
  }
  return {xi.field(), 2, xi.dim(), coeffs};
}

int AlternatingMultiForm::evaluate(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw PreconditionError("argument count does not match arity");
  long long s = 0;
  Matrix minor(static_cast<std::size_t>(arity_), Vec(static_cast<std::size_t>(arity_)));
  for (const auto& [tuple, c] : coeffs_) {
    for (int r = 0; r < arity_; ++r) {
      for (int l = 0; l < arity_; ++l) {
        minor[static_cast<std::size_t>(r)][static_cast<std::size_t>(l)] =
            args[static_cast<std::size_t>(r)][static_cast<std::size_t>(tuple[static_cast<std::size_t>(l)])];
      }
    }
    s += static_cast<long long>(c) * vero::determinant(minor, field_);
  }
  return field_.reduce(s);
}

bool AlternatingMultiForm::is_nondegenerate(const std::vector<Vec>& points) const {
  std::vector<Vec> args(static_cast<std::size_t>(arity_));
  // Depth-first over the remaining arguments, stopping at the first nonzero value.
  auto search = [&](auto&& self, int slot) -> bool {
    if (slot == arity_) return evaluate(args) != 0;
    for (const auto& q : points) {
      args[static_cast<std::size_t>(slot)] = q;
      if (self(self, slot + 1)) return true;
    }
    return false;
  };
  for (const auto& q : points) {
    args[0] = q;
    if (!search(search, 1)) return false;
  }
  return true;
}

nlohmann::json to_json(const BilinearForm& xi) { return {{"p", xi.field().p()}, {"matrix", xi.matrix()}}; }

nlohmann::json to_json(const QuadraticForm& q) {
  return {{"p", q.field().p()}, {"quadratic", true}, {"matrix", q.matrix()}};
}

nlohmann::json to_json(const AlternatingMultiForm& eta) {
  nlohmann::json coeffs = nlohmann::json::object();
  for (const auto& [tuple, c] : eta.coefficients()) {
    std::string key;
    for (std::size_t i = 0; i < tuple.size(); ++i) key += (i ? "<" : "") + std::to_string(tuple[i]);
    coeffs[key] = c;
  }
  return {{"p", eta.field().p()}, {"arity", eta.arity()}, {"dim", eta.dim()}, {"coeffs", coeffs}};
}

BilinearForm bilinear_from_json(const nlohmann::json& j) {
  if (!j.contains("p") || !j.contains("matrix")) throw PreconditionError("bilinear form JSON needs p and matrix");
  return {PrimeField(j.at("p").get<int>()), j.at("matrix").get<Matrix>()};
}

QuadraticForm quadratic_from_json(const nlohmann::json& j) {
  if (!j.contains("p") || !j.contains("matrix")) throw PreconditionError("quadratic form JSON needs p and matrix");
  return {PrimeField(j.at("p").get<int>()), j.at("matrix").get<Matrix>()};
}

AlternatingMultiForm alternating_from_json(const nlohmann::json& j) {
  if (!j.contains("p") || !j.contains("arity") || !j.contains("coeffs")) {
    throw PreconditionError("alternating form JSON needs p, arity and coeffs");
  }
  std::map<std::vector<int>, int> coeffs;
  int max_index = -1;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    std::vector<int> tuple;
    std::stringstream ss(key);
    std::string part;
    while (std::getline(ss, part, '<')) tuple.push_back(std::stoi(part));
    for (int t : tuple) max_index = std::max(max_index, t);
    coeffs[tuple] = value.get<int>();
  }
  const int dim = j.contains("dim") ? j.at("dim").get<int>() : max_index + 1;
  return {PrimeField(j.at("p").get<int>()), j.at("arity").get<int>(), dim, coeffs};
}

}  // namespace vero
