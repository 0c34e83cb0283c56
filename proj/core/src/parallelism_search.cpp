#include "vero/parallelism_search.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vero/configs.hpp"
#include "vero/error.hpp"

namespace vero {

namespace {

void require_same_base(const VeroneseSpace& v, const ParallelStructure& base) {
  if (v.base().point_count() != base.base.point_count() || v.base().lines() != base.base.lines()) {
    throw PreconditionError("parallel structure does not match the Veronese base");
  }
}

/// Base classes generating each block, ascending.
std::vector<std::vector<int>> generating_classes(const VeroneseSpace& v, const ParallelStructure& base) {
  const auto cls = class_index(base);
  const auto& g = v.structure();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(g.line_count()));
  for (int b = 0; b < g.line_count(); ++b) {
    auto& c = out[static_cast<std::size_t>(b)];
    for (const auto& o : v.origins(b)) {
      const int k = cls[static_cast<std::size_t>(o.base_line)];
      if (k >= 0) c.push_back(k);
    }
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  return out;
}

bool share(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    if (a[i] < b[j]) ++i; else ++j;
  }
  return false;
}

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv(std::uint64_t& h, std::int64_t x) {
  auto u = static_cast<std::uint64_t>(x);
  for (int i = 0; i < 8; ++i) {
    h ^= (u >> (8 * i)) & 0xFFU;
    h *= kFnvPrime;
  }
}

struct Unit {
  std::vector<int> blocks;
  std::vector<char> cover;  // point mask
  int size = 0;             // points covered
};

class Search {
 public:
  Search(std::vector<Unit> units, int points, std::uint64_t budget)
      : units_(std::move(units)), points_(points), budget_(budget), used_(units_.size(), 0) {}

  ParallelismSearchResult run() {
    ParallelismSearchResult r;
    r.units = units_.size();
    hash_ = kFnvOffset;
    const bool found = assign(-1);
    r.nodes = nodes_;
    r.tree_hash = hash_;
    if (found) {
      r.outcome = SearchOutcome::kFound;
      for (const auto& cls : classes_) {
        std::vector<int> blocks;
        for (int u : cls) {
          const auto& b = units_[static_cast<std::size_t>(u)].blocks;
          blocks.insert(blocks.end(), b.begin(), b.end());
        }
        std::sort(blocks.begin(), blocks.end());
        r.parallelism.push_back(std::move(blocks));
      }
    } else {
      r.outcome = exceeded_ ? SearchOutcome::kBudgetExceeded : SearchOutcome::kNone;
    }
    return r;
  }

 private:
  /// Starts a new class at the lowest unused unit. `class_size` is the block
  /// count every class must share (-1 before the first class closes).
  bool assign(int class_size) {
    std::size_t first = 0;
    while (first < units_.size() && used_[first]) ++first;
    if (first == units_.size()) return true;
    std::vector<char> cover(static_cast<std::size_t>(points_), 0);
    std::vector<int> members;
    return extend(static_cast<int>(first), first, cover, 0, 0, members, class_size);
  }

  bool extend(int unit, std::size_t next, std::vector<char>& cover, int covered, int blocks, std::vector<int>& members,
              int class_size) {
    if (exceeded_) return false;
    if (++nodes_ > budget_) {
      exceeded_ = true;
      return false;
    }
    const auto& u = units_[static_cast<std::size_t>(unit)];
    fnv(hash_, unit);
    for (int p = 0; p < points_; ++p) {
      if (u.cover[static_cast<std::size_t>(p)]) cover[static_cast<std::size_t>(p)] = 1;
    }
    covered += u.size;
    blocks += static_cast<int>(u.blocks.size());
    used_[static_cast<std::size_t>(unit)] = 1;
    members.push_back(unit);

    bool ok = false;
    if (covered == points_) {
      if (class_size < 0 || blocks == class_size) {
        classes_.push_back(members);
        fnv(hash_, -2);
        ok = assign(blocks);
        if (!ok) classes_.pop_back();
      }
    } else if (class_size < 0 || blocks < class_size) {
      for (std::size_t w = next + 1; w < units_.size() && !ok; ++w) {
        if (used_[w]) continue;
        const auto& c = units_[w];
        bool disjoint = true;
        for (int p = 0; p < points_ && disjoint; ++p) {
          if (c.cover[static_cast<std::size_t>(p)] && cover[static_cast<std::size_t>(p)]) disjoint = false;
        }
        if (disjoint) ok = extend(static_cast<int>(w), w, cover, covered, blocks, members, class_size);
      }
    }
    if (ok) return true;

    fnv(hash_, -1);
    members.pop_back();
    used_[static_cast<std::size_t>(unit)] = 0;
    for (int p = 0; p < points_; ++p) {
      if (u.cover[static_cast<std::size_t>(p)]) cover[static_cast<std::size_t>(p)] = 0;
    }
    return false;
  }

  std::vector<Unit> units_;
  int points_;
  std::uint64_t budget_;
  std::vector<char> used_;
  std::vector<std::vector<int>> classes_;
  std::uint64_t nodes_ = 0;
  std::uint64_t hash_ = kFnvOffset;
  bool exceeded_ = false;
};

std::uint64_t exact_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

InducedRelation induced_relation(const VeroneseSpace& v, const ParallelStructure& base) {
  require_same_base(v, base);
  const auto gen = generating_classes(v, base);
  const auto n = gen.size();
  InducedRelation r;
  r.classes.assign(base.parallel_classes.size(), {});
  for (std::size_t b = 0; b < n; ++b) {
    for (int c : gen[b]) r.classes[static_cast<std::size_t>(c)].push_back(static_cast<int>(b));
  }

  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = share(gen[i], gen[j]) ? 1 : 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i][i]) r.reflexive = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) r.symmetric = false;
      if (!rel[i][j]) continue;
      for (std::size_t l = 0; l < n && r.transitive; ++l) {
        if (rel[j][l] && !rel[i][l]) r.transitive = false;
      }
    }
  }
  return r;
}

EuclidReport check_euclid_failure(const VeroneseSpace& v, const ParallelStructure& base) {
  const auto rel = induced_relation(v, base);
  const auto& g = v.structure();
  const int k = v.level();
  EuclidReport r;
  for (const auto& cls : rel.classes) {
    std::vector<int> through(static_cast<std::size_t>(g.point_count()), 0);
    std::vector<int> first(static_cast<std::size_t>(g.point_count()), -1);
    for (int b : cls) {
      for (int p : g.line(b)) {
        auto& f = first[static_cast<std::size_t>(p)];
        if (f >= 0 && !r.fails_euclid) {
          r.fails_euclid = true;
          r.witness_point = p;
          r.witness_block_a = f;
          r.witness_block_b = b;
        }
        if (f < 0) f = b;
        ++through[static_cast<std::size_t>(p)];
      }
    }
    for (int c : through) {
      if (c == 0) r.classes_cover = false;
      if (c != k) r.k_members_per_point = false;
    }
  }
  return r;
}

const char* to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kNone: return "NONE";
    case SearchOutcome::kFound: return "FOUND";
    case SearchOutcome::kBudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

ParallelismSearchResult search_leaf_closed_parallelism(const VeroneseSpace& v, const ParallelStructure& base,
                                                       std::uint64_t node_budget) {
  require_same_base(v, base);
  const auto gen = generating_classes(v, base);
  const auto& g = v.structure();
  std::map<std::pair<int, int>, std::vector<int>> by_key;
  for (int b = 0; b < g.line_count(); ++b) {
    const auto& c = gen[static_cast<std::size_t>(b)];
    if (c.size() != 1) throw PreconditionError("block generated by lines of several directions");
    by_key[{v.top_of_block(b), c.front()}].push_back(b);
  }
  std::vector<Unit> units;
  for (auto& [key, blocks] : by_key) {
    Unit u;
    u.cover.assign(static_cast<std::size_t>(g.point_count()), 0);
    u.blocks = blocks;
    bool disjoint = true;
    for (int b : blocks) {
      for (int p : g.line(b)) {
        auto& c = u.cover[static_cast<std::size_t>(p)];
        if (c) disjoint = false;
        c = 1;
      }
    }
    if (!disjoint) throw PreconditionError("per-leaf direction with meeting lines");
    u.size = static_cast<int>(std::count(u.cover.begin(), u.cover.end(), 1));
    units.push_back(std::move(u));
  }
  return Search(std::move(units), g.point_count(), node_budget).run();
}

std::vector<std::pair<int, int>> counting_identity_solutions(int n_min, int n_max, int k_min, int k_max) {
  std::vector<std::pair<int, int>> out;
  for (int n = n_min; n <= n_max; ++n) {
    for (int k = k_min; k <= k_max; ++k) {
      const auto top = static_cast<std::uint64_t>(n + k - 1);
      if (exact_binomial(top, static_cast<std::uint64_t>(k)) ==
          static_cast<std::uint64_t>(n) * exact_binomial(top, static_cast<std::uint64_t>(k - 1))) {
        out.emplace_back(n, k);
      }
    }
  }
  return out;
}

VeblenCrossCheck veblen_parallel_in_affine_veronese(const VeroneseSpace& v, const ParallelStructure& base, int b1,
                                                    int b2) {
  require_same_base(v, base);
  const auto cls = class_index(base);
  VeblenCrossCheck r;
  r.by_definition = veblen_parallel(v.structure(), b1, b2);
  if (b1 == b2) {
    r.by_generators = true;
  } else if (v.top_of_block(b1) == v.top_of_block(b2)) {
    for (const auto& o1 : v.origins(b1)) {
      for (const auto& o2 : v.origins(b2)) {
        const int c1 = cls[static_cast<std::size_t>(o1.base_line)];
        if (o1.e == o2.e && o1.r == o2.r && c1 >= 0 && c1 == cls[static_cast<std::size_t>(o2.base_line)]) {
          r.by_generators = true;
        }
      }
    }
  }
  return r;
}

VeblenCrossCheckReport cross_check_veblen_parallel(const VeroneseSpace& v, const ParallelStructure& base) {
  VeblenCrossCheckReport r;
  const int n = v.structure().line_count();
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      const auto c = veblen_parallel_in_affine_veronese(v, base, a, b);
      ++r.pairs;
      if (c.by_definition) ++r.parallel_pairs;
      if (c.by_definition != c.by_generators && !r.mismatch) r.mismatch = std::make_pair(a, b);
    }
  }
  return r;
}

bool veblen_union_is_preparallelism(const IncidenceStructure& g) {
  for (const auto& cls : veblen_parallel_classes(g)) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        if (g.lines_meet(cls[i], cls[j])) return false;
      }
    }
  }
  return true;
}

}  // namespace vero
