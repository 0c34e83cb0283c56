#include "vero/spaces.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

#include "vero/error.hpp"

namespace vero {

namespace {

// All nonzero combinations of the generators, as normalized vectors.
std::vector<Vec> combinations(const std::vector<Vec>& gens, const PrimeField& f) {
  std::vector<Vec> out;
  if (gens.empty()) return out;
  const std::size_t dim = gens[0].size();
  std::vector<int> c(gens.size(), 0);
  while (true) {
    std::size_t i = gens.size();
    while (i > 0 && c[i - 1] == f.p() - 1) c[--i] = 0;
    if (i == 0) break;
    ++c[i - 1];
    Vec v(dim, 0);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (c[g] == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) v[j] = f.add(v[j], f.mul(c[g], gens[g][j]));
    }
    if (!is_zero_vector(v)) out.push_back(normalize_projective(v, f));
  }
  return out;
}

}  // namespace

ProjectiveSpace::ProjectiveSpace(int n, int p) : n_(n), field_(p) {
  if (n < 1) throw PreconditionError("projective dimension must be at least 1");
  coords_ = projective_points(n + 1, field_);
  for (std::size_t i = 0; i < coords_.size(); ++i) index_[encode(coords_[i])] = static_cast<int>(i);
  const int v = static_cast<int>(coords_.size());
  std::vector<PointSet> lines;
  std::set<std::pair<int, int>> covered;
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (covered.count({a, b})) continue;
      PointSet l = span({coords_[static_cast<std::size_t>(a)], coords_[static_cast<std::size_t>(b)]});
      for (std::size_t i = 0; i < l.size(); ++i) {
        for (std::size_t j = i + 1; j < l.size(); ++j) covered.insert({l[i], l[j]});
      }
      lines.push_back(std::move(l));
    }
  }
  std::vector<nlohmann::json> labels;
  labels.reserve(coords_.size());
  for (const auto& c : coords_) labels.emplace_back(c);
  structure_ = IncidenceStructure(v, std::move(lines), std::move(labels));
}

long long ProjectiveSpace::encode(const Vec& normalized) const {
  long long key = 0;
  for (int x : normalized) key = key * field_.p() + x;
  return key;
}

int ProjectiveSpace::index_of(const Vec& v) const {
  if (static_cast<int>(v.size()) != n_ + 1) throw PreconditionError("coordinate vector has wrong length");
  return index_.at(encode(normalize_projective(v, field_)));
}

PointSet ProjectiveSpace::span(const std::vector<Vec>& generators) const {
  std::vector<int> pts;
  for (const auto& v : combinations(generators, field_)) pts.push_back(index_.at(encode(v)));
  return make_point_set(std::move(pts));
}

std::vector<PointSet> ProjectiveSpace::planes() const {
  std::set<PointSet> out;
  if (n_ < 2) return {};
  for (const auto& l : structure_.lines()) {
    auto seen = membership(structure_.point_count(), l);
    for (int q = 0; q < structure_.point_count(); ++q) {
      if (seen[static_cast<std::size_t>(q)]) continue;
      PointSet plane = span({coords_[static_cast<std::size_t>(l[0])], coords_[static_cast<std::size_t>(l[1])],
                             coords_[static_cast<std::size_t>(q)]});
      for (int x : plane) seen[static_cast<std::size_t>(x)] = 1;
      out.insert(std::move(plane));
    }
  }
  return {out.begin(), out.end()};
}

PointSet ProjectiveSpace::hyperplane(const Vec& functional) const {
  if (is_zero_vector(functional)) throw PreconditionError("zero functional");
  PointSet out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (field_.dot(functional, coords_[i]) == 0) out.push_back(static_cast<int>(i));
  }
  return out;
}

AffineSpace::AffineSpace(int n, int p) : n_(n), field_(p) {
  if (n < 1) throw PreconditionError("affine dimension must be at least 1");
  if (p == 2) throw PreconditionError("AG(n,2) has 2-point lines, below the partial linear space floor");
  int v = 1;
  for (int i = 0; i < n; ++i) v *= p;
  coords_.reserve(static_cast<std::size_t>(v));
  for (int idx = 0; idx < v; ++idx) {
    Vec c(static_cast<std::size_t>(n));
    int rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      c[static_cast<std::size_t>(i)] = rest % p;
      rest /= p;
    }
    coords_.push_back(std::move(c));
  }
  std::vector<PointSet> lines;
  std::vector<std::vector<int>> classes;
  for (const auto& d : projective_points(n, field_)) {
    std::vector<int> cls;
    std::vector<char> covered(static_cast<std::size_t>(v), 0);
    for (int x = 0; x < v; ++x) {
      if (covered[static_cast<std::size_t>(x)]) continue;
      PointSet l;
      for (int t = 0; t < p; ++t) {
        Vec y = coords_[static_cast<std::size_t>(x)];
        for (int i = 0; i < n; ++i) {
          y[static_cast<std::size_t>(i)] = field_.add(y[static_cast<std::size_t>(i)], field_.mul(t, d[static_cast<std::size_t>(i)]));
        }
        const int yi = index_of(y);
        covered[static_cast<std::size_t>(yi)] = 1;
        l.push_back(yi);
      }
      cls.push_back(static_cast<int>(lines.size()));
      lines.push_back(make_point_set(std::move(l)));
    }
    classes.push_back(std::move(cls));
  }
  std::vector<nlohmann::json> labels;
  for (const auto& c : coords_) labels.emplace_back(c);
  parallel_.base = IncidenceStructure(v, std::move(lines), std::move(labels));
  parallel_.parallel_classes = std::move(classes);
  parallel_.affine = true;
}

int AffineSpace::index_of(const Vec& v) const {
  int idx = 0;
  for (int x : v) idx = idx * field_.p() + field_.reduce(x);
  return idx;
}

std::vector<PointSet> AffineSpace::planes() const {
  std::set<PointSet> out;
  if (n_ < 2) return {};
  const auto& g = parallel_.base;
  for (int p0 = 0; p0 < g.point_count(); ++p0) {
    auto through = g.lines_through(p0);
    for (std::size_t i = 0; i < through.size(); ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        PointSet seed = g.line(through[i]);
        seed.insert(seed.end(), g.line(through[j]).begin(), g.line(through[j]).end());
        out.insert(subspace_closure(g, make_point_set(seed)));
      }
    }
  }
  return {out.begin(), out.end()};
}

Restriction restriction(const IncidenceStructure& g, const PointSet& kept) {
  Restriction r;
  r.from_parent.assign(static_cast<std::size_t>(g.point_count()), -1);
  for (int p : kept) {
    if (p < 0 || p >= g.point_count()) throw PreconditionError("restriction point out of range");
    r.from_parent[static_cast<std::size_t>(p)] = static_cast<int>(r.to_parent.size());
    r.to_parent.push_back(p);
  }
  std::vector<PointSet> lines;
  for (const auto& l : g.lines()) {
    PointSet local;
    for (int p : l) {
      const int q = r.from_parent[static_cast<std::size_t>(p)];
      if (q < 0) break;
      local.push_back(q);
    }
    if (local.size() == l.size()) lines.push_back(std::move(local));
  }
  std::vector<nlohmann::json> labels;
  if (g.has_labels()) {
    for (int p : r.to_parent) labels.push_back(g.labels()[static_cast<std::size_t>(p)]);
  }
  r.structure = IncidenceStructure(static_cast<int>(r.to_parent.size()), std::move(lines), std::move(labels));
  r.degenerate = r.to_parent.empty();
  return r;
}

namespace {

std::vector<PointSet> planes_inside(const ProjectiveSpace& pg, const Restriction& r,
                                    const std::function<bool(const PointSet&)>& accept) {
  std::vector<PointSet> out;
  for (const auto& plane : pg.planes()) {
    if (!std::all_of(plane.begin(), plane.end(), [&](int p) { return r.from_parent[static_cast<std::size_t>(p)] >= 0; })) continue;
    if (!accept(plane)) continue;
    PointSet local;
    for (int p : plane) local.push_back(r.from_parent[static_cast<std::size_t>(p)]);
    out.push_back(std::move(local));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PolarSpace polar_space_symplectic(const BilinearForm& xi) {
  if (!xi.is_symplectic()) throw PreconditionError("form is not symplectic");
  if (!xi.is_nondegenerate()) throw PreconditionError("symplectic form is degenerate");
  if (xi.dim() % 2 != 0 || xi.dim() < 2) throw PreconditionError("symplectic polar space needs even vector dimension");
  ProjectiveSpace pg(xi.dim() - 1, xi.field().p());
  const auto& coords = pg.coords();
  auto isotropic = [&](const PointSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (xi.evaluate(coords[static_cast<std::size_t>(s[i])], coords[static_cast<std::size_t>(s[j])]) != 0) return false;
      }
    }
    return true;
  };
  std::vector<PointSet> lines;
  for (const auto& l : pg.structure().lines()) {
    if (isotropic(l)) lines.push_back(l);
  }
  Restriction r;
  const int v = pg.structure().point_count();
  for (int p = 0; p < v; ++p) {
    r.to_parent.push_back(p);
    r.from_parent.push_back(p);
  }
  r.structure = IncidenceStructure(v, std::move(lines), pg.structure().labels());
  auto planes = planes_inside(pg, r, isotropic);
  return {std::move(pg), std::move(r), std::move(planes)};
}

PolarSpace polar_space_quadratic(const QuadraticForm& q) {
  if (!q.isotropic_index_at_least_2()) throw PreconditionError("quadric has no totally singular line; not a polar space");
  ProjectiveSpace pg(q.dim() - 1, q.field().p());
  auto r = restriction(pg.structure(), q.singular_points(pg.coords()));
  auto planes = planes_inside(pg, r, [](const PointSet&) { return true; });
  return {std::move(pg), std::move(r), std::move(planes)};
}

AffinePolarSpace affine_polar_space(const IncidenceStructure& polar, const PointSet& trace) {
  if (!is_hyperplane(polar, trace)) throw PreconditionError("trace is not a hyperplane of the polar space");
  const auto in = membership(polar.point_count(), trace);
  PointSet kept;
  for (int p = 0; p < polar.point_count(); ++p) {
    if (!in[static_cast<std::size_t>(p)]) kept.push_back(p);
  }
  AffinePolarSpace out;
  out.embedding = restriction(IncidenceStructure(polar.point_count(), {}, polar.labels()), kept);
  std::vector<PointSet> lines;
  for (int id = 0; id < polar.line_count(); ++id) {
    const auto& l = polar.line(id);
    PointSet local;
    for (int p : l) {
      const int q = out.embedding.from_parent[static_cast<std::size_t>(p)];
      if (q >= 0) local.push_back(q);
    }
    if (local.empty()) continue;
    if (local.size() + 1 != l.size()) throw FalsificationError("hyperplane meets a line in neither one point nor all of it");
    if (local.size() < 3) out.sub_pls_floor = true;
    lines.push_back(std::move(local));
    out.parent_line.push_back(id);
  }
  out.structure = IncidenceStructure(static_cast<int>(kept.size()), std::move(lines), out.embedding.structure.labels());
  return out;
}

}  // namespace vero
