#include "vero/reduct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "vero/error.hpp"

namespace vero {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(idx(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[idx(x)] != x) {
      parent_[idx(x)] = parent_[idx(parent_[idx(x)])];
      x = parent_[idx(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[idx(std::max(a, b))] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

std::vector<int> line_ids_in(const IncidenceStructure& g, const PointSet& x) {
  const auto in = membership(g.point_count(), x);
  std::vector<int> out;
  for (int p : x) {
    for (int l : g.lines_through(p)) {
      const auto& pts = g.line(l);
      if (std::all_of(pts.begin(), pts.end(), [&](int q) { return in[idx(q)] != 0; })) out.push_back(l);
    }
  }
  return make_point_set(std::move(out));
}

std::vector<int> veblen_ids(const IncidenceStructure& g) {
  std::vector<int> ids(idx(g.line_count()), -1);
  const auto classes = veblen_parallel_classes(g);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    for (int l : classes[c]) ids[idx(l)] = static_cast<int>(c);
  }
  return ids;
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// Proper quadrangle (L1, K1, L2, K2) with l crossing K1, K2 and k crossing
// L1, L2; every crossing line sits in a top other than the line it crosses.
std::optional<QuadrangleFigure> find_completion(const IncidenceStructure& g, const std::vector<int>& top,
                                                const std::vector<std::vector<int>>& meeting, int l, int k) {
  auto crossing_of = [&](int line) {
    std::vector<int> out;
    for (int m : meeting[idx(line)]) {
      if (top[idx(m)] != top[idx(line)]) out.push_back(m);
    }
    return out;
  };
  const auto ks = crossing_of(l);
  const auto ls = crossing_of(k);
  for (std::size_t i = 0; i < ks.size(); ++i) {
    for (std::size_t j = i + 1; j < ks.size(); ++j) {
      const int k1 = ks[i];
      const int k2 = ks[j];
      if (top[idx(k1)] == top[idx(k2)]) continue;
      std::vector<int> cand;
      for (int m : sorted_intersection(sorted_intersection(ls, meeting[idx(k1)]), meeting[idx(k2)])) {
        if (m != k1 && m != k2 && top[idx(m)] != top[idx(k1)] && top[idx(m)] != top[idx(k2)]) cand.push_back(m);
      }
      for (std::size_t s = 0; s < cand.size(); ++s) {
        for (std::size_t t = s + 1; t < cand.size(); ++t) {
          const int l1 = cand[s];
          const int l2 = cand[t];
          if (top[idx(l1)] == top[idx(l2)]) continue;
          QuadrangleFigure q{{l1, k1, l2, k2}, {*g.meet(l1, k1), *g.meet(k1, l2), *g.meet(l2, k2), *g.meet(k2, l1)}, true};
          if (is_quadrangle(g, top, q, true)) return q;
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> all_meeting(const IncidenceStructure& g) {
  std::vector<std::vector<int>> out(idx(g.line_count()));
  for (int l = 0; l < g.line_count(); ++l) out[idx(l)] = g.lines_meeting(l);
  return out;
}

}  // namespace

AffineReduct build_reduct(const VeroneseSpace& v, const PointSet& h) {
  const auto& g = v.structure();
  if (!is_hyperplane(g, h)) throw PreconditionError("H is not a hyperplane of the Veronese space");
  const auto in = membership(g.point_count(), h);
  AffineReduct a;
  a.ambient_points = g.point_count();
  a.ambient_lines = g.line_count();
  std::vector<int> from_ambient(idx(g.point_count()), -1);
  std::vector<nlohmann::json> labels;
  for (int p = 0; p < g.point_count(); ++p) {
    if (in[idx(p)]) continue;
    from_ambient[idx(p)] = static_cast<int>(a.to_ambient.size());
    a.to_ambient.push_back(p);
    if (g.has_labels()) labels.push_back(g.labels()[idx(p)]);
  }
  std::vector<PointSet> lines;
  for (int b = 0; b < g.line_count(); ++b) {
    PointSet trace;
    int infinite = -1;
    for (int p : g.line(b)) {
      if (in[idx(p)]) {
        infinite = p;
      } else {
        trace.push_back(from_ambient[idx(p)]);
      }
    }
    if (trace.empty()) continue;
    if (trace.size() < 2) throw PreconditionError("a truncated line keeps fewer than two points");
    lines.push_back(std::move(trace));
    a.parent.push_back(b);
    a.infinite_point.push_back(infinite);
  }
  a.structure = IncidenceStructure(static_cast<int>(a.to_ambient.size()), std::move(lines), std::move(labels));

  std::map<int, std::vector<int>> by_point;
  for (int l = 0; l < a.structure.line_count(); ++l) by_point[a.infinite_point[idx(l)]].push_back(l);
  a.class_of_line.assign(idx(a.structure.line_count()), -1);
  for (auto& [point, members] : by_point) {
    for (int l : members) a.class_of_line[idx(l)] = static_cast<int>(a.parallel_classes.size());
    a.parallel_classes.push_back(members);
    a.class_point.push_back(point);
    a.class_label.push_back(g.has_labels() ? g.labels()[idx(point)] : nlohmann::json(point));
  }
  for (int leaf = 0; leaf < v.leaf_count(); ++leaf) {
    const auto& image = v.leaf_image(leaf);
    if (std::all_of(image.begin(), image.end(), [&](int p) { return in[idx(p)] != 0; })) ++a.leaves_inside;
  }
  return a;
}

nlohmann::json to_json(const AffineReduct& a) {
  return {{"structure", to_json(a.structure)},
          {"to_ambient", a.to_ambient},
          {"parent", a.parent},
          {"infinite_point", a.infinite_point},
          {"parallel_classes", a.parallel_classes},
          {"class_point", a.class_point},
          {"class_label", a.class_label},
          {"ambient_points", a.ambient_points},
          {"ambient_lines", a.ambient_lines},
          {"leaves_inside", a.leaves_inside}};
}

AffineReduct reduct_from_json(const nlohmann::json& j) {
  try {
    AffineReduct a;
    a.structure = incidence_from_json(j.at("structure"));
    a.to_ambient = j.at("to_ambient").get<std::vector<int>>();
    a.parent = j.at("parent").get<std::vector<int>>();
    a.infinite_point = j.at("infinite_point").get<std::vector<int>>();
    a.parallel_classes = j.at("parallel_classes").get<std::vector<std::vector<int>>>();
    a.class_point = j.at("class_point").get<std::vector<int>>();
    a.class_label = j.at("class_label").get<std::vector<nlohmann::json>>();
    a.ambient_points = j.at("ambient_points").get<int>();
    a.ambient_lines = j.at("ambient_lines").get<int>();
    a.leaves_inside = j.at("leaves_inside").get<int>();
    a.class_of_line.assign(idx(a.structure.line_count()), -1);
    for (std::size_t c = 0; c < a.parallel_classes.size(); ++c) {
      for (int l : a.parallel_classes[c]) {
        if (l < 0 || l >= a.structure.line_count()) throw PreconditionError("parallel class names an unknown line");
        a.class_of_line[idx(l)] = static_cast<int>(c);
      }
    }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed reduct JSON: ") + e.what());
  }
}

ReductTops reduct_tops(const AffineReduct& a) {
  const auto& g = a.structure;
  ReductTops t;
  t.subspaces = maximal_strong_subspaces(g);
  std::vector<std::vector<int>> of_point(idx(g.point_count()));
  for (std::size_t s = 0; s < t.subspaces.size(); ++s) {
    for (int p : t.subspaces[s]) of_point[idx(p)].push_back(static_cast<int>(s));
  }
  for (int l = 0; l < g.line_count(); ++l) {
    const auto& pts = g.line(l);
    auto common = sorted_intersection(of_point[idx(pts[0])], of_point[idx(pts[1])]);
    if (common.size() != 1) throw FalsificationError("a reduct line does not lie in exactly one maximal strong subspace");
    t.line_top.push_back(common.front());
  }
  return t;
}

bool veblen_parallel(const AffineReduct& a, int l1, int l2) { return veblen_parallel(a.structure, l1, l2); }

const char* to_string(DirectionKind k) { return k == DirectionKind::kOneLeaf ? "ONE_LEAF" : "TWO_LEAF"; }

DirectionReport classify_directions(const AffineReduct& a) {
  if (a.leaves_inside > 1) throw PreconditionError("H contains more than one leaf; the form is degenerate");
  const auto ids = veblen_ids(a.structure);
  DirectionReport report;
  std::map<int, int> veblen_home;
  for (int l = 0; l < a.structure.line_count(); ++l) {
    auto [it, inserted] = veblen_home.try_emplace(ids[idx(l)], a.class_of_line[idx(l)]);
    if (!inserted && it->second != a.class_of_line[idx(l)]) report.veblen_refines = false;
  }
  for (std::size_t c = 0; c < a.parallel_classes.size(); ++c) {
    std::map<int, std::vector<int>> parts;
    for (int l : a.parallel_classes[c]) parts[ids[idx(l)]].push_back(l);
    Direction d;
    for (auto& [id, members] : parts) d.subclasses.push_back(std::move(members));
    if (d.subclasses.size() == 1) {
      d.kind = DirectionKind::kOneLeaf;
      ++report.one_leaf;
    } else if (d.subclasses.size() == 2) {
      d.kind = DirectionKind::kTwoLeaf;
      ++report.two_leaf;
    } else {
      throw FalsificationError("a direction splits into more than two Veblen classes");
    }
    const bool doubled = a.class_label[c].is_array() && a.class_label[c].size() == 1;
    if (doubled != (d.kind == DirectionKind::kOneLeaf)) report.matches_ambient = false;
    report.directions.push_back(std::move(d));
  }
  return report;
}

PlaneResult plane_from_triangle(const AffineReduct& a, int l1, int l2, int l3) {
  const auto& g = a.structure;
  if (l1 == l2 || l2 == l3 || l1 == l3) throw PreconditionError("triangle sides must be distinct");
  auto e1 = g.meet(l2, l3);
  auto e2 = g.meet(l1, l3);
  auto e3 = g.meet(l1, l2);
  if (!e1 || !e2 || !e3 || *e1 == *e2 || *e2 == *e3 || *e1 == *e3) {
    throw PreconditionError("lines do not form a triangle");
  }
  PlaneResult r;
  bool side = false;
  for (int e0 : g.line(l1)) {
    if (e0 != *e2 && e0 != *e3 && g.adjacent(e0, *e1)) side = true;
  }
  std::vector<int> pts;
  for (int l : a.parallel_classes[idx(a.class_of_line[idx(l1)])]) {
    if (g.lines_meet(l, l2) && g.lines_meet(l, l3)) pts.insert(pts.end(), g.line(l).begin(), g.line(l).end());
  }
  r.points = make_point_set(std::move(pts));
  const bool plane = r.points.size() > g.line(l1).size() && is_strong(g, r.points) &&
                     std::includes(r.points.begin(), r.points.end(), g.line(l2).begin(), g.line(l2).end()) &&
                     std::includes(r.points.begin(), r.points.end(), g.line(l3).begin(), g.line(l3).end());
  r.degenerate = !side || !plane;
  return r;
}

std::vector<PointSet> reduct_planes(const AffineReduct& a) {
  const auto& g = a.structure;
  std::set<PointSet> planes;
  for (int e1 = 0; e1 < g.point_count(); ++e1) {
    const auto through = g.lines_through(e1);
    for (std::size_t i = 0; i < through.size(); ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const int l2 = through[i];
        const int l3 = through[j];
        bool done = false;
        for (int e3 : g.line(l2)) {
          if (done || e3 == e1) continue;
          for (int l1 : g.lines_through(e3)) {
            if (l1 == l2) continue;
            auto e2 = g.meet(l1, l3);
            if (!e2 || *e2 == e1) continue;
            bool side = false;
            for (int e0 : g.line(l1)) {
              if (e0 != *e2 && e0 != e3 && g.adjacent(e0, e1)) side = true;
            }
            if (!side) continue;
            auto r = plane_from_triangle(a, l1, l2, l3);
            if (!r.degenerate) planes.insert(std::move(r.points));
            done = true;
            break;
          }
        }
      }
    }
  }
  return {planes.begin(), planes.end()};
}

std::vector<std::vector<int>> recover_horizon_leaf_lines(const AffineReduct& a) {
  std::set<std::vector<int>> out;
  for (const auto& plane : reduct_planes(a)) {
    std::vector<int> classes;
    for (int l : line_ids_in(a.structure, plane)) classes.push_back(a.class_of_line[idx(l)]);
    out.insert(make_point_set(std::move(classes)));
  }
  return {out.begin(), out.end()};
}

std::vector<std::vector<int>> recover_horizon_2S_lines(const AffineReduct& a, const VeroneseSpace& v) {
  if (v.level() != 2) throw PreconditionError("level 2 required");
  const auto& g = a.structure;
  const auto tops = reduct_tops(a);
  const auto& top = tops.line_top;
  const auto dirs = classify_directions(a);
  std::vector<int> top_direction(tops.subspaces.size(), -1);
  for (std::size_t c = 0; c < dirs.directions.size(); ++c) {
    if (dirs.directions[c].kind != DirectionKind::kOneLeaf) continue;
    top_direction[idx(top[idx(a.parallel_classes[c].front())])] = static_cast<int>(c);
  }
  const auto meeting = all_meeting(g);

  std::map<int, std::vector<int>> by_base;  // base line m -> reduct lines a + m
  for (int l = 0; l < g.line_count(); ++l) {
    const auto& o = v.origins(a.parent[idx(l)]).front();
    if (o.r == 1) by_base[o.base_line].push_back(l);
  }

  // A horizon line has as many points as a truncated line plus one.
  const std::size_t line_size = g.line(0).size() + 1;
  std::vector<std::vector<int>> declared;
  for (const auto& [m, cands] : by_base) {
    std::set<int> covered;
    for (std::size_t i = 0; i < cands.size() && covered.size() < line_size; ++i) {
      for (std::size_t j = i + 1; j < cands.size() && covered.size() < line_size; ++j) {
        const int lp = cands[i];
        const int lpp = cands[j];
        if (g.lines_meet(lp, lpp) || top[idx(lp)] == top[idx(lpp)]) continue;
        std::vector<int> crossing;
        for (int k : sorted_intersection(meeting[idx(lp)], meeting[idx(lpp)])) {
          if (top[idx(k)] != top[idx(lp)] && top[idx(k)] != top[idx(lpp)]) crossing.push_back(k);
        }
        bool quadrangle = false;
        for (std::size_t s = 0; s < crossing.size() && !quadrangle; ++s) {
          for (std::size_t t = s + 1; t < crossing.size() && !quadrangle; ++t) {
            const int k1 = crossing[s];
            const int k2 = crossing[t];
            QuadrangleFigure q{{lp, k1, lpp, k2},
                               {*g.meet(lp, k1), *g.meet(k1, lpp), *g.meet(lpp, k2), *g.meet(k2, lp)},
                               true};
            quadrangle = is_quadrangle(g, top, q, true);
          }
        }
        if (!quadrangle) continue;
        std::vector<int> d;
        for (int k : crossing) {
          const int dir = top_direction[idx(top[idx(k)])];
          if (dir >= 0) d.push_back(dir);
        }
        d = make_point_set(std::move(d));
        if (d.size() >= 3) {
          covered.insert(d.begin(), d.end());
          declared.push_back(std::move(d));
        }
      }
    }
  }

  // Collinear sets sharing two directions lie on one line.
  UnionFind uf(static_cast<int>(declared.size()));
  std::map<std::pair<int, int>, int> pair_owner;
  for (std::size_t s = 0; s < declared.size(); ++s) {
    const auto& d = declared[s];
    for (std::size_t i = 0; i < d.size(); ++i) {
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        auto [it, inserted] = pair_owner.try_emplace({d[i], d[j]}, static_cast<int>(s));
        if (!inserted) uf.unite(it->second, static_cast<int>(s));
      }
    }
  }
  std::map<int, std::vector<int>> merged;
  for (std::size_t s = 0; s < declared.size(); ++s) {
    auto& target = merged[uf.find(static_cast<int>(s))];
    target.insert(target.end(), declared[s].begin(), declared[s].end());
  }
  std::set<std::vector<int>> out;
  for (auto& [root, d] : merged) out.insert(make_point_set(std::move(d)));
  return {out.begin(), out.end()};
}

Recovered recover_veronese(const AffineReduct& a, const VeroneseSpace& v) {
  const auto& g = a.structure;
  Recovered r;
  r.proper_points = g.point_count();
  const int n = g.point_count();
  std::vector<PointSet> lines;
  for (int l = 0; l < g.line_count(); ++l) {
    auto pts = g.line(l);
    pts.push_back(n + a.class_of_line[idx(l)]);
    lines.push_back(make_point_set(std::move(pts)));
  }
  r.completed_lines = lines.size();
  auto add_horizon = [&](const std::vector<std::vector<int>>& family) {
    for (const auto& d : family) {
      PointSet pts;
      for (int c : d) pts.push_back(n + c);
      lines.push_back(std::move(pts));
    }
    return family.size();
  };
  r.leaf_horizon_lines = add_horizon(recover_horizon_leaf_lines(a));
  r.double_horizon_lines = add_horizon(recover_horizon_2S_lines(a, v));
  std::vector<nlohmann::json> labels;
  if (g.has_labels()) {
    labels = g.labels();
    for (std::size_t c = 0; c < a.parallel_classes.size(); ++c) labels.push_back({{"direction", c}});
  }
  r.structure = IncidenceStructure(n + static_cast<int>(a.parallel_classes.size()), std::move(lines), std::move(labels));
  return r;
}

RecoveryCheck check_recovery(const Recovered& r, const AffineReduct& a, const VeroneseSpace& v) {
  RecoveryCheck c;
  c.points = static_cast<std::size_t>(r.structure.point_count());
  c.lines = static_cast<std::size_t>(r.structure.line_count());
  std::vector<int> phi(a.to_ambient);
  phi.insert(phi.end(), a.class_point.begin(), a.class_point.end());
  auto sorted = phi;
  std::sort(sorted.begin(), sorted.end());
  c.bijective = static_cast<int>(phi.size()) == v.point_count() &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                (sorted.empty() || (sorted.front() == 0 && sorted.back() == v.point_count() - 1));
  if (!c.bijective) return c;
  std::vector<char> hit(idx(v.structure().line_count()), 0);
  for (const auto& l : r.structure.lines()) {
    PointSet image;
    for (int p : l) image.push_back(phi[idx(p)]);
    auto found = v.structure().find_line(make_point_set(std::move(image)));
    if (found) {
      hit[idx(*found)] = 1;
    } else {
      ++c.foreign_lines;
    }
  }
  c.unrecovered_lines = static_cast<std::size_t>(std::count(hit.begin(), hit.end(), 0));
  c.isomorphism = c.foreign_lines == 0 && c.unrecovered_lines == 0 && c.lines == hit.size();
  return c;
}

std::optional<NetWitness> net_violation_witness(const AffineReduct& a) {
  return net_violation_witness(a, reduct_tops(a).line_top);
}

std::optional<NetWitness> net_violation_witness(const AffineReduct& a, const std::vector<int>& line_top) {
  const auto& g = a.structure;
  const auto meeting = all_meeting(g);
  for (const auto& cls : a.parallel_classes) {
    std::map<int, std::vector<int>> by_top;
    for (int l : cls) by_top[line_top[idx(l)]].push_back(l);
    if (by_top.size() != 2) continue;
    const auto& first = by_top.begin()->second;
    const auto& second = std::next(by_top.begin())->second;
    for (int l3 : first) {
      for (int k3 : second) {
        if (g.lines_meet(l3, k3)) continue;
        auto q = find_completion(g, line_top, meeting, l3, k3);
        if (q) return NetWitness{*q, l3, k3};
      }
    }
  }
  return std::nullopt;
}

std::vector<int> ambient_line_tops(const AffineReduct& a, const VeroneseSpace& v) {
  std::vector<int> out;
  for (int b : a.parent) out.push_back(v.top_of_block(b));
  return out;
}

bool completes_to_proper_net(const AffineReduct& a, const ReductTops& tops, int l, int k) {
  const auto& g = a.structure;
  std::vector<std::vector<int>> meeting(idx(g.line_count()));
  auto fill = [&](int line) {
    meeting[idx(line)] = g.lines_meeting(line);
    for (int m : meeting[idx(line)]) {
      if (meeting[idx(m)].empty()) meeting[idx(m)] = g.lines_meeting(m);
    }
  };
  fill(l);
  fill(k);
  return find_completion(g, tops.line_top, meeting, l, k).has_value();
}

ParallelDefinabilityReport reconstruct_parallelism(const AffineReduct& a, std::size_t negative_samples,
                                                   std::uint64_t seed) {
  const auto& g = a.structure;
  const auto tops = reduct_tops(a);
  const auto& top = tops.line_top;
  const auto ids = veblen_ids(g);
  const auto meeting = all_meeting(g);
  ParallelDefinabilityReport report;
  report.seed = seed;
  auto fail = [&](int x, int y) {
    if (report.equal) report.mismatch = std::make_pair(x, y);
    report.equal = false;
  };

  // Same top: parallel exactly when Veblen-parallel.
  std::map<int, std::vector<int>> by_top;
  for (int l = 0; l < g.line_count(); ++l) by_top[top[idx(l)]].push_back(l);
  for (const auto& [t, members] : by_top) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const int x = members[i], y = members[j];
        ++report.same_top_pairs;
        const bool stored = a.class_of_line[idx(x)] == a.class_of_line[idx(y)];
        if (stored != (ids[idx(x)] == ids[idx(y)])) fail(x, y);
      }
    }
  }
  // Distinct tops, stored parallel: must be disjoint and completable.
  for (const auto& cls : a.parallel_classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const int x = cls[i], y = cls[j];
        if (top[idx(x)] == top[idx(y)]) continue;
        ++report.cross_top_positive;
        if (g.lines_meet(x, y) || !find_completion(g, top, meeting, x, y)) fail(x, y);
      }
    }
  }
  // Distinct tops, disjoint, stored non-parallel: must not complete.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, g.line_count() - 1);
  std::size_t attempts = 0;
  while (report.cross_top_negative_sampled < negative_samples && attempts < negative_samples * 1000) {
    ++attempts;
    const int x = pick(rng);
    const int y = pick(rng);
    if (top[idx(x)] == top[idx(y)] || a.class_of_line[idx(x)] == a.class_of_line[idx(y)] || g.lines_meet(x, y)) continue;
    ++report.cross_top_negative_sampled;
    if (find_completion(g, top, meeting, x, y)) fail(x, y);
  }
  return report;
}

std::vector<PointSet> gamma_leaf_recovery(const IncidenceStructure& g, const std::vector<PointSet>& planes) {
  if (planes.empty()) throw IndeterminateError("no planes: the chain relation is undefined");
  UnionFind uf(static_cast<int>(planes.size()));
  std::map<int, int> line_owner;
  for (std::size_t s = 0; s < planes.size(); ++s) {
    for (int l : line_ids_in(g, planes[s])) {
      auto [it, inserted] = line_owner.try_emplace(l, static_cast<int>(s));
      if (!inserted) uf.unite(it->second, static_cast<int>(s));
    }
  }
  std::map<int, std::vector<int>> merged;
  for (std::size_t s = 0; s < planes.size(); ++s) {
    auto& target = merged[uf.find(static_cast<int>(s))];
    target.insert(target.end(), planes[s].begin(), planes[s].end());
  }
  std::vector<PointSet> out;
  for (auto& [root, pts] : merged) out.push_back(make_point_set(std::move(pts)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace vero
