#include "vero/configs.hpp"

#include <algorithm>
#include <numeric>

#include "vero/error.hpp"

namespace vero {

namespace {

std::size_t idx(int i) { return static_cast<std::size_t>(i); }

struct Origin2 {
  int point = -1;  // e = point for r = 1, -1 for r = 2
  int base = -1;
};

Origin2 origin2(const VeroneseSpace& v, int block) {
  const auto& o = v.origins(block).front();
  if (o.r == 2) return {-1, o.base_line};
  return {o.e.support().front(), o.base_line};
}

void require_level2(const VeroneseSpace& v) {
  if (v.level() != 2) throw PreconditionError("level 2 required");
}

bool base_on(const VeroneseSpace& v, int point, int base_line) { return v.base().on_line(point, base_line); }

int pair_point(const VeroneseSpace& v, int x, int y) { return v.index_of(scale_point(1, x) + scale_point(1, y)); }

int base_join(const VeroneseSpace& v, int a, int b) {
  auto l = v.base().line_through(a, b);
  if (!l) throw PreconditionError("base points are not collinear; a linear space is required");
  return *l;
}

bool same_vertex_set(std::array<int, 4> a, std::array<int, 4> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

std::vector<int> select_apexes(int n, int max_apexes) {
  std::vector<int> out;
  if (n <= max_apexes) {
    out.resize(idx(n));
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  for (int i = 0; i < max_apexes; ++i) {
    out.push_back(static_cast<int>(static_cast<long long>(i) * n / max_apexes));
  }
  return out;
}

}  // namespace

std::vector<VeblenFigure> find_veblen_figures(const IncidenceStructure& g) {
  std::vector<VeblenFigure> out;
  for (int p = 0; p < g.point_count(); ++p) {
    const auto through = g.lines_through(p);
    for (std::size_t i = 0; i < through.size(); ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const int l1 = through[i];
        const int l2 = through[j];
        struct Cross {
          int line, on1, on2;
        };
        std::vector<Cross> crossing;
        for (int m : g.lines_meeting(l1)) {
          if (g.on_line(p, m)) continue;
          auto q2 = g.meet(m, l2);
          if (!q2) continue;
          crossing.push_back({m, *g.meet(m, l1), *q2});
        }
        for (std::size_t a = 0; a < crossing.size(); ++a) {
          for (std::size_t b = a + 1; b < crossing.size(); ++b) {
            if (crossing[a].on1 == crossing[b].on1 || crossing[a].on2 == crossing[b].on2) continue;
            out.push_back({p, l1, l2, crossing[a].line, crossing[b].line,
                           g.lines_meet(crossing[a].line, crossing[b].line)});
          }
        }
      }
    }
  }
  return out;
}

std::vector<VeblenFigure> find_incomplete_veblen(const IncidenceStructure& g) {
  auto all = find_veblen_figures(g);
  std::vector<VeblenFigure> out;
  std::copy_if(all.begin(), all.end(), std::back_inserter(out), [](const VeblenFigure& f) { return !f.complete; });
  return out;
}

VeblenReport check_veblen_axiom(const IncidenceStructure& g) {
  VeblenReport report;
  for (const auto& f : find_veblen_figures(g)) {
    ++report.figures;
    if (!f.complete && report.holds) {
      report.holds = false;
      report.witness = f;
    }
  }
  return report;
}

const char* to_string(VeblenType t) {
  switch (t) {
    case VeblenType::kBaseEmbedded:
      return "BASE_EMBEDDED";
    case VeblenType::kFourPointTranslate:
      return "FOUR_POINT_TRANSLATE";
    case VeblenType::kThreePointWith2m:
      return "THREE_POINT_WITH_2m";
  }
  return "?";
}

VeblenType classify_veblen_in_veronese(const VeroneseSpace& v, const VeblenFigure& f) {
  require_level2(v);
  const std::array<int, 4> lines{f.l1, f.l2, f.m1, f.m2};
  const int top = v.top_of_block(lines[0]);
  if (std::all_of(lines.begin(), lines.end(), [&](int l) { return v.top_of_block(l) == top; })) {
    return VeblenType::kBaseEmbedded;
  }
  int base = -1;
  int doubles = 0;
  std::vector<int> points;
  for (int l : lines) {
    const auto o = origin2(v, l);
    if (base == -1) base = o.base;
    if (o.base != base) throw FalsificationError("Veblen figure lines come from different base lines and different leaves");
    if (o.point < 0) {
      ++doubles;
    } else {
      if (!base_on(v, o.point, base)) throw FalsificationError("translate point is off its base line");
      points.push_back(o.point);
    }
  }
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw FalsificationError("Veblen figure repeats a translate");
  }
  if (doubles == 0 && points.size() == 4) return VeblenType::kFourPointTranslate;
  if (doubles == 1 && points.size() == 3) return VeblenType::kThreePointWith2m;
  throw FalsificationError("Veblen figure matches none of the three types");
}

std::vector<int> veronese_line_tops(const VeroneseSpace& v) {
  std::vector<int> tops;
  for (int b = 0; b < v.structure().line_count(); ++b) tops.push_back(v.top_of_block(b));
  return tops;
}

bool is_quadrangle(const IncidenceStructure& g, const std::vector<int>& line_top, const QuadrangleFigure& q,
                   bool require_proper) {
  for (int i = 0; i < 4; ++i) {
    const int a = q.lines[idx(i)];
    const int b = q.lines[idx((i + 1) % 4)];
    if (a == b || !g.on_line(q.vertices[idx(i)], a) || !g.on_line(q.vertices[idx(i)], b)) return false;
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (q.vertices[idx(i)] == q.vertices[idx(j)]) return false;
    }
  }
  if (g.adjacent(q.vertices[0], q.vertices[2]) || g.adjacent(q.vertices[1], q.vertices[3])) return false;
  if (require_proper) {
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        if (line_top[idx(q.lines[idx(i)])] == line_top[idx(q.lines[idx(j)])]) return false;
      }
    }
  }
  return true;
}

std::vector<QuadrangleFigure> find_quadrangles(const IncidenceStructure& g, const std::vector<int>& line_top,
                                               bool proper_only, std::size_t limit) {
  std::vector<QuadrangleFigure> out;
  auto top = [&](int l) { return line_top[idx(l)]; };
  for (int l1 = 0; l1 < g.line_count(); ++l1) {
    std::vector<int> ks;
    for (int k : g.lines_meeting(l1)) {
      if (k > l1 && (!proper_only || top(k) != top(l1))) ks.push_back(k);
    }
    for (std::size_t i = 0; i < ks.size(); ++i) {
      const int k1 = ks[i];
      const int p0 = *g.meet(l1, k1);
      for (std::size_t j = i + 1; j < ks.size(); ++j) {
        const int k2 = ks[j];
        if (proper_only && top(k1) == top(k2)) continue;
        const int p3 = *g.meet(l1, k2);
        if (p3 == p0) continue;
        for (int u : g.line(k1)) {
          if (u == p0) continue;
          for (int l2 : g.lines_through(u)) {
            if (l2 <= l1 || l2 == k1 || l2 == k2) continue;
            if (proper_only && (top(l2) == top(l1) || top(l2) == top(k1) || top(l2) == top(k2))) continue;
            auto p2 = g.meet(l2, k2);
            if (!p2 || *p2 == p3) continue;
            QuadrangleFigure q{{l1, k1, l2, k2}, {p0, u, *p2, p3}, false};
            if (!is_quadrangle(g, line_top, q, proper_only)) continue;
            q.proper = is_quadrangle(g, line_top, q, true);
            out.push_back(q);
            if (out.size() >= limit) return out;
          }
        }
      }
    }
  }
  return out;
}

std::vector<QuadrangleFigure> find_proper_quadrangles(const VeroneseSpace& v, std::size_t limit) {
  return find_quadrangles(v.structure(), veronese_line_tops(v), true, limit);
}

const char* to_string(QuadrangleType t) { return t == QuadrangleType::kTwoLine ? "TWO_LINE_TYPE" : "THREE_LINE_TYPE"; }

QuadrangleClassification classify_proper_quadrangle(const VeroneseSpace& v, const QuadrangleFigure& q) {
  require_level2(v);
  if (!is_quadrangle(v.structure(), veronese_line_tops(v), q, true)) {
    throw PreconditionError("figure is not a proper quadrangle");
  }
  std::array<Origin2, 4> o;
  for (int i = 0; i < 4; ++i) o[idx(i)] = origin2(v, q.lines[idx(i)]);
  const std::array<std::array<int, 2>, 2> pairs{{{0, 2}, {1, 3}}};

  // {a1 + m, b1 + m} and {a2 + n, b2 + n}.
  for (int s = 0; s < 2; ++s) {
    const auto& first = pairs[idx(s)];
    const auto& second = pairs[idx(1 - s)];
    const auto& l1 = o[idx(first[0])];
    const auto& l2 = o[idx(first[1])];
    const auto& k1 = o[idx(second[0])];
    const auto& k2 = o[idx(second[1])];
    if (l1.point < 0 || l2.point < 0 || k1.point < 0 || k2.point < 0) continue;
    if (l1.base != l2.base || k1.base != k2.base) continue;
    const int m = l1.base;
    const int n = k1.base;
    const int a1 = l1.point, b1 = l2.point, a2 = k1.point, b2 = k2.point;
    if (!base_on(v, a1, n) || !base_on(v, b1, n) || !base_on(v, a2, m) || !base_on(v, b2, m)) continue;
    QuadrangleClassification c{QuadrangleType::kTwoLine,
                               {pair_point(v, a1, a2), pair_point(v, a1, b2), pair_point(v, a2, b1),
                                pair_point(v, b1, b2)}};
    if (!same_vertex_set(c.predicted_vertices, q.vertices)) {
      throw FalsificationError("two-line quadrangle has unexpected vertices");
    }
    return c;
  }

  // {2n, c + n} and {a + m, b + l}.
  for (int s = 0; s < 2; ++s) {
    const auto& kp = pairs[idx(s)];
    const auto& lp = pairs[idx(1 - s)];
    for (int flip = 0; flip < 2; ++flip) {
      const auto& k1 = o[idx(kp[idx(flip)])];
      const auto& k2 = o[idx(kp[idx(1 - flip)])];
      if (k1.point >= 0 || k2.point < 0 || k1.base != k2.base) continue;
      const int n = k1.base;
      const int c = k2.point;
      for (int swap = 0; swap < 2; ++swap) {
        const auto& la = o[idx(lp[idx(swap)])];
        const auto& lb = o[idx(lp[idx(1 - swap)])];
        if (la.point < 0 || lb.point < 0) continue;
        const int a = la.point, b = lb.point, m = la.base, l = lb.base;
        if (!base_on(v, a, n) || !base_on(v, b, n) || !base_on(v, a, m) || !base_on(v, c, m) || !base_on(v, b, l) ||
            !base_on(v, c, l)) {
          continue;
        }
        QuadrangleClassification cl{QuadrangleType::kThreeLine,
                                    {pair_point(v, a, a), pair_point(v, a, c), pair_point(v, b, b),
                                     pair_point(v, b, c)}};
        if (!same_vertex_set(cl.predicted_vertices, q.vertices)) {
          throw FalsificationError("three-line quadrangle has unexpected vertices");
        }
        return cl;
      }
    }
  }
  throw FalsificationError("proper quadrangle matches neither type");
}

CrossingCase classify_crossing_line(const VeroneseSpace& v, int l1, int l2, int k) {
  require_level2(v);
  const auto& g = v.structure();
  if (k == l1 || k == l2 || !g.lines_meet(k, l1) || !g.lines_meet(k, l2)) {
    throw PreconditionError("K does not cross both lines");
  }
  if (v.top_of_block(k) == v.top_of_block(l1) || v.top_of_block(k) == v.top_of_block(l2)) {
    throw PreconditionError("K shares a top with a crossed line");
  }
  const auto ok = origin2(v, k);
  for (int swap = 0; swap < 2; ++swap) {
    const auto o1 = origin2(v, swap ? l2 : l1);
    const auto o2 = origin2(v, swap ? l1 : l2);
    if (o1.point >= 0 && o2.point >= 0 && o1.base == o2.base && o1.point != o2.point) {
      const int a = o1.point, b = o2.point, m = o1.base;
      const int ab = base_join(v, a, b);
      if (ok.point >= 0 && ok.base == ab && base_on(v, ok.point, m)) return CrossingCase::kTranslateOfJoin;
      if (ok.point < 0 && ok.base == m && base_on(v, a, m) && base_on(v, b, m)) return CrossingCase::kTranslateOfJoin;
    }
    if (o1.point < 0 && o2.point >= 0 && o1.base == o2.base) {
      const int c = o2.point, n = o1.base;
      if (ok.point >= 0 && ok.point != c && base_on(v, ok.point, n) && ok.base == base_join(v, ok.point, c)) {
        return CrossingCase::kThroughCommonPoint;
      }
    }
    if (o1.point >= 0 && o2.point >= 0 && o1.point != o2.point && o1.base != o2.base) {
      const auto& base = v.base();
      auto c = base.meet(o1.base, o2.base);
      if (c) {
        const int ab = base_join(v, o1.point, o2.point);
        if (ok.base == ab && (ok.point < 0 || ok.point == *c)) return CrossingCase::kOverMeetingLines;
      }
    }
  }
  throw FalsificationError("crossing line matches none of the three cases");
}

NetReport check_net_axiom_proper(const IncidenceStructure& g, const std::vector<int>& line_top, bool distinct_tops,
                                 std::uint64_t quadrangle_budget) {
  NetReport report;
  std::vector<std::vector<int>> meeting(idx(g.line_count()));
  for (int l = 0; l < g.line_count(); ++l) meeting[idx(l)] = g.lines_meeting(l);
  auto crossing = [&](int a, int b) {
    std::vector<int> out;
    std::set_intersection(meeting[idx(a)].begin(), meeting[idx(a)].end(), meeting[idx(b)].begin(),
                          meeting[idx(b)].end(), std::back_inserter(out));
    if (distinct_tops) {
      std::erase_if(out, [&](int l) { return line_top[idx(l)] == line_top[idx(a)] || line_top[idx(l)] == line_top[idx(b)]; });
    }
    return out;
  };
  for (const auto& q : find_quadrangles(g, line_top, true)) {
    if (report.quadrangles >= quadrangle_budget) {
      report.exhaustive = false;
      break;
    }
    ++report.quadrangles;
    const auto l3s = crossing(q.lines[1], q.lines[3]);
    const auto k3s = crossing(q.lines[0], q.lines[2]);
    for (int l3 : l3s) {
      for (int k3 : k3s) {
        ++report.pairs_checked;
        if (l3 == k3 || g.lines_meet(l3, k3)) continue;
        report.holds = false;
        report.witness = NetWitness{q, l3, k3};
        return report;
      }
    }
  }
  return report;
}

NetReport check_net_axiom_proper(const VeroneseSpace& v, bool distinct_tops, std::uint64_t quadrangle_budget) {
  return check_net_axiom_proper(v.structure(), veronese_line_tops(v), distinct_tops, quadrangle_budget);
}

bool is_net_violation(const IncidenceStructure& g, const std::vector<int>& line_top, const NetWitness& w) {
  if (!is_quadrangle(g, line_top, w.quadrangle, true)) return false;
  const auto& l = w.quadrangle.lines;
  auto crosses = [&](int x, int a, int b) { return x != a && x != b && g.lines_meet(x, a) && g.lines_meet(x, b); };
  return crosses(w.l3, l[1], l[3]) && crosses(w.k3, l[0], l[2]) && w.l3 != w.k3 && !g.lines_meet(w.l3, w.k3);
}

bool veblen_parallel(const IncidenceStructure& g, int l1, int l2) {
  if (l1 == l2) return true;
  if (g.lines_meet(l1, l2)) return false;
  const auto& line1 = g.line(l1);
  const auto& line2 = g.line(l2);
  for (int a1 : line1) {
    for (int lp : g.lines_through(a1)) {
      if (lp == l1 || !g.lines_meet(lp, l2)) continue;
      for (int p : g.line(lp)) {
        if (g.on_line(p, l1) || g.on_line(p, l2)) continue;
        for (int lpp : g.lines_through(p)) {
          if (lpp == lp || !g.lines_meet(lpp, l1)) continue;
          for (int a2 : line2) {
            if (g.on_line(a2, lpp) && g.adjacent(a1, a2)) return true;
          }
        }
      }
    }
  }
  return false;
}

std::vector<int> veblen_parallel_partners(const IncidenceStructure& g, int l) {
  std::vector<int> out{l};
  for (int a1 : g.line(l)) {
    for (int lp : g.lines_through(a1)) {
      if (lp == l) continue;
      for (int p : g.line(lp)) {
        if (p == a1) continue;
        for (int lpp : g.lines_through(p)) {
          if (lpp == lp) continue;
          auto b1 = g.meet(lpp, l);
          if (!b1) continue;
          for (int a2 : g.line(lpp)) {
            if (a2 == p || a2 == *b1 || !g.adjacent(a1, a2)) continue;
            for (int b2 : g.line(lp)) {
              if (b2 == a1 || b2 == p) continue;
              auto l2 = g.line_through(a2, b2);
              if (l2 && !g.lines_meet(*l2, l)) out.push_back(*l2);
            }
          }
        }
      }
    }
  }
  return make_point_set(std::move(out));
}

std::vector<std::vector<int>> veblen_parallel_classes(const IncidenceStructure& g) {
  std::vector<int> parent(idx(g.line_count()));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[idx(x)] != x) {
      parent[idx(x)] = parent[idx(parent[idx(x)])];
      x = parent[idx(x)];
    }
    return x;
  };
  for (int l = 0; l < g.line_count(); ++l) {
    for (int other : veblen_parallel_partners(g, l)) {
      const int a = find(l), b = find(other);
      if (a != b) parent[idx(std::max(a, b))] = std::min(a, b);
    }
  }
  std::vector<std::vector<int>> by_root(idx(g.line_count()));
  for (int l = 0; l < g.line_count(); ++l) by_root[idx(find(l))].push_back(l);
  std::vector<std::vector<int>> out;
  for (auto& c : by_root) {
    if (!c.empty()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> class_index(const ParallelStructure& a) {
  std::vector<int> out(idx(a.base.line_count()), -1);
  for (std::size_t c = 0; c < a.parallel_classes.size(); ++c) {
    for (int l : a.parallel_classes[c]) out[idx(l)] = static_cast<int>(c);
  }
  return out;
}

AffineConditionReport check_tamaschke(const ParallelStructure& a, int max_apexes) {
  const auto& g = a.base;
  const auto cls = class_index(a);
  AffineConditionReport report;
  report.strata = select_apexes(g.point_count(), max_apexes);
  report.exhaustive = static_cast<int>(report.strata.size()) == g.point_count();
  for (int v : report.strata) {
    const auto through = g.lines_through(v);
    for (int side_a : through) {
      if (cls[idx(side_a)] < 0) continue;
      const auto& parallels = a.parallel_classes[idx(cls[idx(side_a)])];
      for (int side_b : through) {
        if (side_b == side_a) continue;
        for (int x : g.line(side_a)) {
          if (x == v) continue;
          for (int side_c : g.lines_through(x)) {
            if (side_c == side_a || !g.lines_meet(side_c, side_b)) continue;
            ++report.configurations;
            for (int l : parallels) {
              if (l == side_a || l == side_b || l == side_c) continue;
              if (g.lines_meet(l, side_b) && !g.lines_meet(l, side_c)) {
                report.holds = false;
                report.witness = std::array<int, 4>{side_a, side_b, side_c, l};
                return report;
              }
            }
          }
        }
      }
    }
  }
  return report;
}

AffineConditionReport check_parallelogram_completion(const ParallelStructure& a, int max_apexes) {
  const auto& g = a.base;
  const auto cls = class_index(a);
  AffineConditionReport report;
  report.strata = select_apexes(g.point_count(), max_apexes);
  report.exhaustive = static_cast<int>(report.strata.size()) == g.point_count();
  for (int v : report.strata) {
    const auto through = g.lines_through(v);
    for (int a1 : through) {
      if (cls[idx(a1)] < 0) continue;
      for (int b1 : through) {
        if (b1 == a1 || cls[idx(b1)] < 0 || cls[idx(b1)] == cls[idx(a1)]) continue;
        for (int a2 : a.parallel_classes[idx(cls[idx(a1)])]) {
          if (a2 == a1 || !g.lines_meet(a2, b1)) continue;
          for (int b2 : a.parallel_classes[idx(cls[idx(b1)])]) {
            if (b2 == b1 || !g.lines_meet(b2, a1)) continue;
            ++report.configurations;
            if (!g.lines_meet(a2, b2)) {
              report.holds = false;
              report.witness = std::array<int, 4>{a1, b1, a2, b2};
              return report;
            }
          }
        }
      }
    }
  }
  return report;
}

nlohmann::json to_json(const VeblenFigure& f, const IncidenceStructure& g) {
  return {{"apex", point_json(g, f.apex)}, {"L1", line_json(g, f.l1)}, {"L2", line_json(g, f.l2)},
          {"M1", line_json(g, f.m1)},      {"M2", line_json(g, f.m2)}, {"complete", f.complete}};
}

nlohmann::json to_json(const QuadrangleFigure& q, const IncidenceStructure& g) {
  nlohmann::json lines = nlohmann::json::array();
  nlohmann::json vertices = nlohmann::json::array();
  for (int l : q.lines) lines.push_back(line_json(g, l));
  for (int p : q.vertices) vertices.push_back(point_json(g, p));
  return {{"lines", lines}, {"vertices", vertices}, {"proper", q.proper}};
}

nlohmann::json to_json(const NetWitness& w, const IncidenceStructure& g) {
  return {{"quadrangle", to_json(w.quadrangle, g)}, {"L3", line_json(g, w.l3)}, {"K3", line_json(g, w.k3)}};
}

}  // namespace vero
