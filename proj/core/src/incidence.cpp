#include "vero/incidence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "vero/error.hpp"

namespace vero {

PointSet make_point_set(std::vector<int> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

namespace {

std::uint64_t hash_points(const PointSet& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (int p : s) h = (h ^ static_cast<std::uint64_t>(p)) * 1099511628211ull;
  return h;
}

bool contains(const PointSet& s, int p) { return std::binary_search(s.begin(), s.end(), p); }

}  // namespace

IncidenceStructure::IncidenceStructure(int point_count, std::vector<PointSet> lines,
                                       std::vector<nlohmann::json> labels)
    : point_count_(point_count), lines_(std::move(lines)), labels_(std::move(labels)) {
  if (point_count_ < 0) throw PreconditionError("negative point count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != point_count_) {
    throw PreconditionError("label count does not match point count");
  }
  point_lines_.assign(static_cast<std::size_t>(point_count_), {});
  for (std::size_t id = 0; id < lines_.size(); ++id) {
    auto& l = lines_[id];
    l = make_point_set(std::move(l));
    for (int p : l) {
      if (p < 0 || p >= point_count_) throw PreconditionError("line references a point out of range");
      point_lines_[static_cast<std::size_t>(p)].push_back(static_cast<int>(id));
    }
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        pair_line_.try_emplace(pair_key(l[i], l[j]), static_cast<int>(id));
      }
    }
    line_by_hash_[hash_points(l)].push_back(static_cast<int>(id));
  }
}

std::optional<int> IncidenceStructure::line_through(int a, int b) const {
  if (a == b) {
    const auto& ls = point_lines_[static_cast<std::size_t>(a)];
    if (ls.empty()) return std::nullopt;
    return ls.front();
  }
  if (a > b) std::swap(a, b);
  auto it = pair_line_.find(pair_key(a, b));
  if (it == pair_line_.end()) return std::nullopt;
  return it->second;
}

bool IncidenceStructure::adjacent(int a, int b) const { return line_through(a, b).has_value(); }

bool IncidenceStructure::on_line(int point, int line) const { return contains(lines_[static_cast<std::size_t>(line)], point); }

std::optional<int> IncidenceStructure::meet(int line_a, int line_b) const {
  const auto& a = lines_[static_cast<std::size_t>(line_a)];
  const auto& b = lines_[static_cast<std::size_t>(line_b)];
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return *i;
    }
  }
  return std::nullopt;
}

std::optional<int> IncidenceStructure::find_line(const PointSet& points) const {
  auto it = line_by_hash_.find(hash_points(points));
  if (it == line_by_hash_.end()) return std::nullopt;
  for (int id : it->second) {
    if (lines_[static_cast<std::size_t>(id)] == points) return id;
  }
  return std::nullopt;
}

std::vector<int> IncidenceStructure::lines_meeting(int line) const {
  std::vector<int> out;
  for (int p : lines_[static_cast<std::size_t>(line)]) {
    for (int other : point_lines_[static_cast<std::size_t>(p)]) {
      if (other != line) out.push_back(other);
    }
  }
  return make_point_set(std::move(out));
}

std::vector<char> membership(int point_count, const PointSet& points) {
  std::vector<char> mask(static_cast<std::size_t>(point_count), 0);
  for (int p : points) mask[static_cast<std::size_t>(p)] = 1;
  return mask;
}

PlsReport check_partial_linear(const IncidenceStructure& g) {
  for (int id = 0; id < g.line_count(); ++id) {
    if (g.line(id).size() < 3) {
      PlsViolation v;
      v.kind = PlsViolation::Kind::kUndersizedLine;
      v.line = id;
      return {false, v};
    }
  }
  std::optional<PlsViolation> best;
  std::map<std::pair<int, int>, int> first_line;
  for (int id = 0; id < g.line_count(); ++id) {
    const auto& l = g.line(id);
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        auto [it, inserted] = first_line.try_emplace({l[i], l[j]}, id);
        if (inserted) continue;
        if (!best || std::make_pair(l[i], l[j]) < std::make_pair(best->a, best->b)) {
          PlsViolation v;
          v.kind = PlsViolation::Kind::kSharedPair;
          v.line = it->second;
          v.other_line = id;
          v.a = l[i];
          v.b = l[j];
          best = v;
        }
      }
    }
  }
  if (best) return {false, best};
  return {true, std::nullopt};
}

std::vector<std::vector<int>> adjacency(const IncidenceStructure& g) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.point_count()));
  for (const auto& l : g.lines()) {
    for (int a : l) {
      for (int b : l) {
        if (a != b) adj[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  }
  for (auto& row : adj) row = make_point_set(std::move(row));
  return adj;
}

bool is_connected(const IncidenceStructure& g) {
  const int n = g.point_count();
  if (n <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::queue<int> todo;
  todo.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!todo.empty()) {
    const int p = todo.front();
    todo.pop();
    for (int l : g.lines_through(p)) {
      for (int q : g.line(l)) {
        if (!seen[static_cast<std::size_t>(q)]) {
          seen[static_cast<std::size_t>(q)] = 1;
          ++reached;
          todo.push(q);
        }
      }
    }
  }
  return reached == n;
}

namespace {

// Closure by worklist: a line is swallowed once it holds two members.
// When `require_strong` is set, aborts (returns nullopt) as soon as a
// non-adjacent pair would enter the set.
std::optional<PointSet> closure_impl(const IncidenceStructure& g, const PointSet& x, bool require_strong) {
  std::vector<char> in(static_cast<std::size_t>(g.point_count()), 0);
  std::vector<int> members;
  std::unordered_map<int, int> hits;
  std::queue<int> todo;
  auto admit = [&](int p) -> bool {
    if (in[static_cast<std::size_t>(p)]) return true;
    if (require_strong) {
      for (int q : members) {
        if (!g.adjacent(p, q)) return false;
      }
    }
    in[static_cast<std::size_t>(p)] = 1;
    members.push_back(p);
    todo.push(p);
    return true;
  };
  for (int p : x) {
    if (!admit(p)) return std::nullopt;
  }
  while (!todo.empty()) {
    const int p = todo.front();
    todo.pop();
    for (int l : g.lines_through(p)) {
      if (++hits[l] == 2) {
        for (int q : g.line(l)) {
          if (!admit(q)) return std::nullopt;
        }
      }
    }
  }
  return make_point_set(std::move(members));
}

}  // namespace

PointSet subspace_closure(const IncidenceStructure& g, const PointSet& x) {
  return *closure_impl(g, make_point_set(x), false);
}

bool is_subspace(const IncidenceStructure& g, const PointSet& x) {
  const auto in = membership(g.point_count(), x);
  for (const auto& l : g.lines()) {
    int hit = 0;
    for (int p : l) hit += in[static_cast<std::size_t>(p)];
    if (hit >= 2 && hit != static_cast<int>(l.size())) return false;
  }
  return true;
}

bool is_strong(const IncidenceStructure& g, const PointSet& x) {
  if (!is_subspace(g, x)) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (!g.adjacent(x[i], x[j])) return false;
    }
  }
  return true;
}

namespace {

// Merges meeting lines whose union is pairwise collinear. When every
// component is a strong subspace, the components are exactly the maximal
// strong subspaces through lines; otherwise returns nullopt.
std::optional<std::vector<PointSet>> line_components(const IncidenceStructure& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.line_count()));
  for (int l = 0; l < g.line_count(); ++l) parent[static_cast<std::size_t>(l)] = l;
  auto find = [&](int l) {
    while (parent[static_cast<std::size_t>(l)] != l) {
      auto& up = parent[static_cast<std::size_t>(l)];
      up = parent[static_cast<std::size_t>(up)];
      l = up;
    }
    return l;
  };
  auto joined = [&](int a, int b) {
    for (int p : g.line(a)) {
      for (int q : g.line(b)) {
        if (!g.adjacent(p, q)) return false;
      }
    }
    return true;
  };
  for (int p = 0; p < g.point_count(); ++p) {
    auto through = g.lines_through(p);
    for (std::size_t i = 0; i < through.size(); ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        const int a = find(through[i]);
        const int b = find(through[j]);
        if (a != b && joined(through[i], through[j])) parent[static_cast<std::size_t>(a)] = b;
      }
    }
  }
  std::map<int, std::vector<int>> groups;
  for (int l = 0; l < g.line_count(); ++l) {
    auto& pts = groups[find(l)];
    pts.insert(pts.end(), g.line(l).begin(), g.line(l).end());
  }
  std::vector<PointSet> out;
  out.reserve(groups.size());
  std::vector<char> in(static_cast<std::size_t>(g.point_count()), 0);
  for (auto& [root, pts] : groups) {
    PointSet c = make_point_set(std::move(pts));
    for (int p : c) in[static_cast<std::size_t>(p)] = 1;
    bool ok = true;
    for (std::size_t i = 0; ok && i < c.size(); ++i) {
      for (std::size_t j = i + 1; ok && j < c.size(); ++j) ok = g.adjacent(c[i], c[j]);
      for (int l : g.lines_through(c[i])) {
        int hit = 0;
        for (int q : g.line(l)) hit += in[static_cast<std::size_t>(q)];
        ok = ok && (hit == 1 || hit == static_cast<int>(g.line(l).size()));
      }
    }
    for (int p : c) in[static_cast<std::size_t>(p)] = 0;
    if (!ok) return std::nullopt;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<PointSet> maximal_strong_subspaces(const IncidenceStructure& g) {
  if (auto fast = line_components(g)) return *std::move(fast);
  std::map<PointSet, bool> strong_seen;  // closure -> is strong
  std::set<PointSet> maximal;
  std::vector<PointSet> stack;

  auto visit = [&](const PointSet& base) -> std::optional<PointSet> {
    auto closed = closure_impl(g, base, true);
    PointSet key = closed ? *closed : base;
    if (!closed) return std::nullopt;
    auto [it, inserted] = strong_seen.try_emplace(key, true);
    if (inserted) stack.push_back(key);
    return key;
  };

  for (int id = 0; id < g.line_count(); ++id) visit(g.line(id));

  std::vector<int> hit(static_cast<std::size_t>(g.point_count()), 0);
  while (!stack.empty()) {
    PointSet x = std::move(stack.back());
    stack.pop_back();
    // Candidates: points outside X adjacent to every member of X.
    std::vector<int> touched;
    for (int p : x) {
      for (int l : g.lines_through(p)) {
        for (int q : g.line(l)) {
          if (q == p) continue;
          if (hit[static_cast<std::size_t>(q)]++ == 0) touched.push_back(q);
        }
      }
    }
    // hit[q] counts lines, not members; recount exactly against membership.
    std::vector<int> candidates;
    const auto in = membership(g.point_count(), x);
    for (int q : touched) {
      hit[static_cast<std::size_t>(q)] = 0;
      if (in[static_cast<std::size_t>(q)]) continue;
      bool all = true;
      for (int p : x) {
        if (!g.adjacent(p, q)) {
          all = false;
          break;
        }
      }
      if (all) candidates.push_back(q);
    }
    bool extended = false;
    for (int c : make_point_set(std::move(candidates))) {
      PointSet grown = x;
      grown.insert(std::upper_bound(grown.begin(), grown.end(), c), c);
      if (visit(grown)) extended = true;
    }
    if (!extended) maximal.insert(x);
  }
  return {maximal.begin(), maximal.end()};
}

std::vector<PointSet> strong_planes(const IncidenceStructure& g) {
  std::set<PointSet> planes;
  std::set<PointSet> rejected;
  for (int p = 0; p < g.point_count(); ++p) {
    auto through = g.lines_through(p);
    for (std::size_t i = 0; i < through.size(); ++i) {
      for (std::size_t j = i + 1; j < through.size(); ++j) {
        std::vector<int> seed(g.line(through[i]).begin(), g.line(through[i]).end());
        seed.insert(seed.end(), g.line(through[j]).begin(), g.line(through[j]).end());
        PointSet s = make_point_set(std::move(seed));
        if (rejected.count(s)) continue;
        auto closed = closure_impl(g, s, true);
        if (closed) {
          planes.insert(*closed);
        } else {
          rejected.insert(s);
        }
      }
    }
  }
  return {planes.begin(), planes.end()};
}

bool is_l_transversal(const IncidenceStructure& g, const PointSet& x) {
  const auto in = membership(g.point_count(), x);
  for (const auto& l : g.lines()) {
    if (std::none_of(l.begin(), l.end(), [&](int p) { return in[static_cast<std::size_t>(p)] != 0; })) return false;
  }
  return true;
}

bool is_hyperplane(const IncidenceStructure& g, const PointSet& x) {
  return static_cast<int>(x.size()) < g.point_count() && is_l_transversal(g, x) && is_subspace(g, x);
}

SpikyReport check_spiky(const IncidenceStructure& g, const PointSet& x) {
  const auto in = membership(g.point_count(), x);
  for (int p : x) {
    bool escapes = false;
    for (int l : g.lines_through(p)) {
      const auto& pts = g.line(l);
      if (std::any_of(pts.begin(), pts.end(), [&](int q) { return !in[static_cast<std::size_t>(q)]; })) {
        escapes = true;
        break;
      }
    }
    if (!escapes) return {false, p};
  }
  return {true, std::nullopt};
}

FlappyReport check_flappy(const IncidenceStructure& g, const PointSet& x, const std::vector<PointSet>& planes) {
  const auto in = membership(g.point_count(), x);
  auto inside = [&](const PointSet& s, const std::vector<char>& mask) {
    return std::all_of(s.begin(), s.end(), [&](int p) { return mask[static_cast<std::size_t>(p)] != 0; });
  };
  std::vector<int> lines_in_x;
  for (int id = 0; id < g.line_count(); ++id) {
    if (inside(g.line(id), in)) lines_in_x.push_back(id);
  }
  if (lines_in_x.empty()) return {true, std::nullopt};
  if (planes.empty()) throw IndeterminateError("flappy check needs a plane family");

  std::vector<char> rescued(static_cast<std::size_t>(g.line_count()), 0);
  for (const auto& plane : planes) {
    if (inside(plane, in)) continue;
    const auto pmask = membership(g.point_count(), plane);
    for (int p : plane) {
      for (int l : g.lines_through(p)) {
        if (!rescued[static_cast<std::size_t>(l)] && inside(g.line(l), pmask)) rescued[static_cast<std::size_t>(l)] = 1;
      }
    }
  }
  for (int id : lines_in_x) {
    if (!rescued[static_cast<std::size_t>(id)]) return {false, id};
  }
  return {true, std::nullopt};
}

std::vector<PointSet> enumerate_hyperplanes(const IncidenceStructure& g) {
  const int n = g.point_count();
  if (n > 24) throw CapacityError("subset scan is limited to 24 points; supply a leaf cover");
  std::vector<std::uint32_t> masks;
  for (const auto& l : g.lines()) {
    std::uint32_t m = 0;
    for (int p : l) m |= 1u << p;
    masks.push_back(m);
  }
  const std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1);
  std::vector<PointSet> out;
  for (std::uint64_t x = 0; x < full; ++x) {
    const auto s = static_cast<std::uint32_t>(x);
    bool ok = true;
    for (auto m : masks) {
      const std::uint32_t meet = m & s;
      if (meet == 0 || (meet != m && std::popcount(meet) >= 2)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    PointSet ps;
    for (int p = 0; p < n; ++p) {
      if (s & (1u << p)) ps.push_back(p);
    }
    out.push_back(std::move(ps));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LeafSearch {
  const IncidenceStructure& g;
  const LeafCover& cover;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::vector<signed char> status;  // -1 unknown, 0 out, 1 in
  std::vector<std::vector<char>> hyperplane_masks;
  std::vector<PointSet> found;

  void run(std::size_t leaf) {
    if (++nodes > budget) throw CapacityError("leaf-trace hyperplane search exceeded its node budget");
    if (leaf == cover.leaves.size()) {
      PointSet h;
      for (int p = 0; p < g.point_count(); ++p) {
        if (status[static_cast<std::size_t>(p)] == 1) h.push_back(p);
      }
      if (is_hyperplane(g, h)) found.push_back(std::move(h));
      return;
    }
    const auto& image = cover.leaves[leaf];
    // Option -1 is the full leaf, then each base hyperplane.
    for (int option = -1; option < static_cast<int>(cover.base_hyperplanes.size()); ++option) {
      std::vector<int> changed;
      bool ok = true;
      for (std::size_t x = 0; x < image.size(); ++x) {
        const signed char want =
            option < 0 ? 1 : static_cast<signed char>(hyperplane_masks[static_cast<std::size_t>(option)][x]);
        auto& cur = status[static_cast<std::size_t>(image[x])];
        if (cur == -1) {
          cur = want;
          changed.push_back(image[x]);
        } else if (cur != want) {
          ok = false;
          break;
        }
      }
      if (ok) run(leaf + 1);
      for (int p : changed) status[static_cast<std::size_t>(p)] = -1;
    }
  }
};

}  // namespace

std::vector<PointSet> enumerate_hyperplanes(const IncidenceStructure& g, const LeafCover& cover,
                                            std::uint64_t node_budget) {
  std::vector<char> covered(static_cast<std::size_t>(g.point_count()), 0);
  std::size_t base_size = cover.leaves.empty() ? 0 : cover.leaves.front().size();
  for (const auto& leaf : cover.leaves) {
    if (leaf.size() != base_size) throw PreconditionError("leaves must all be images of the same base");
    for (int p : leaf) covered[static_cast<std::size_t>(p)] = 1;
  }
  if (std::any_of(covered.begin(), covered.end(), [](char c) { return c == 0; })) {
    throw PreconditionError("leaf cover does not cover every point");
  }
  LeafSearch search{g, cover, node_budget, 0, {}, {}, {}};
  search.status.assign(static_cast<std::size_t>(g.point_count()), -1);
  for (const auto& h : cover.base_hyperplanes) search.hyperplane_masks.push_back(membership(static_cast<int>(base_size), h));
  search.run(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

nlohmann::json point_json(const IncidenceStructure& g, int p) {
  if (g.has_labels()) return g.labels()[static_cast<std::size_t>(p)];
  return p;
}

nlohmann::json points_json(const IncidenceStructure& g, const PointSet& points) {
  nlohmann::json out = nlohmann::json::array();
  for (int p : points) out.push_back(point_json(g, p));
  return out;
}

nlohmann::json line_json(const IncidenceStructure& g, int l) {
  return {{"id", l}, {"points", points_json(g, g.line(l))}};
}

nlohmann::json to_json(const IncidenceStructure& g) {
  nlohmann::json j;
  j["point_count"] = g.point_count();
  j["lines"] = g.lines();
  if (g.has_labels()) j["labels"] = g.labels();
  return j;
}

IncidenceStructure incidence_from_json(const nlohmann::json& j) {
  if (!j.contains("point_count") || !j.contains("lines")) {
    throw PreconditionError("incidence JSON needs point_count and lines");
  }
  const int n = j.at("point_count").get<int>();
  auto lines = j.at("lines").get<std::vector<PointSet>>();
  std::vector<nlohmann::json> labels;
  if (j.contains("labels")) {
    const auto& l = j.at("labels");
    if (l.is_array()) {
      labels = l.get<std::vector<nlohmann::json>>();
    } else if (l.is_object() && !l.empty()) {
      labels.assign(static_cast<std::size_t>(n), nullptr);
      for (const auto& [key, value] : l.items()) {
        const int idx = std::stoi(key);
        if (idx < 0 || idx >= n) throw PreconditionError("label index out of range");
        labels[static_cast<std::size_t>(idx)] = value;
      }
    }
  }
  return {n, std::move(lines), std::move(labels)};
}

}  // namespace vero
