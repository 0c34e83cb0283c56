#include "vero/veronese.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "vero/error.hpp"
#include "vero/spaces.hpp"

namespace vero {

VeroneseParameters veronese_parameters(std::uint64_t v0, std::uint64_t b0, std::uint64_t r0, std::uint64_t kappa0,
                                       std::uint64_t k) {
  if (v0 == 0 || b0 == 0 || r0 == 0 || kappa0 == 0 || k == 0) throw PreconditionError("parameters must be positive");
  return {binomial(v0 + k - 1, k), binomial(v0 + k - 1, k - 1) * b0, k * r0, kappa0};
}

VeroneseSpace VeroneseSpace::build(IncidenceStructure base, int k) {
  if (k < 1) throw PreconditionError("Veronese level must be at least 1");
  if (!is_partial_linear(base)) throw PreconditionError("base is not a partial linear space");
  VeroneseSpace v;
  v.base_ = std::move(base);
  v.level_ = k;
  const int n = v.base_.point_count();
  v.points_ = enumerate_multisets(n, k);
  for (std::size_t i = 0; i < v.points_.size(); ++i) v.index_.emplace(v.points_[i], static_cast<int>(i));

  v.leaf_keys_ = enumerate_multisets_below(n, k);
  for (std::size_t l = 0; l < v.leaf_keys_.size(); ++l) {
    const auto& e = v.leaf_keys_[l];
    v.leaf_index_.emplace(e, static_cast<int>(l));
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) image[static_cast<std::size_t>(x)] = v.index_of(e + scale_point(k - e.degree(), x));
    v.leaf_images_.push_back(std::move(image));
  }

  std::vector<PointSet> blocks;
  std::map<PointSet, int> block_id;
  for (int r = 1; r <= k; ++r) {
    for (const auto& e : enumerate_multisets(n, k - r)) {
      const int leaf = v.leaf_of(e);
      const auto& image = v.leaf_images_[static_cast<std::size_t>(leaf)];
      for (int bl = 0; bl < v.base_.line_count(); ++bl) {
        PointSet pts;
        for (int x : v.base_.line(bl)) pts.push_back(image[static_cast<std::size_t>(x)]);
        pts = make_point_set(std::move(pts));
        auto [it, inserted] = block_id.try_emplace(pts, static_cast<int>(blocks.size()));
        if (inserted) {
          blocks.push_back(pts);
          v.origins_.emplace_back();
          v.block_top_.push_back(leaf);
        }
        v.origins_[static_cast<std::size_t>(it->second)].push_back({e, r, bl});
      }
    }
  }
  std::vector<nlohmann::json> labels;
  labels.reserve(v.points_.size());
  for (const auto& m : v.points_) labels.push_back(to_json(m));
  v.structure_ = IncidenceStructure(static_cast<int>(v.points_.size()), std::move(blocks), std::move(labels));
  return v;
}

int VeroneseSpace::index_of(const Multiset& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw PreconditionError("multiset " + m.to_string() + " is not a point of this space");
  return it->second;
}

std::optional<int> VeroneseSpace::find(const Multiset& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int VeroneseSpace::leaf_of(const Multiset& e) const {
  auto it = leaf_index_.find(e);
  if (it == leaf_index_.end()) throw PreconditionError("multiset " + e.to_string() + " does not index a leaf");
  return it->second;
}

std::vector<int> VeroneseSpace::leaves_through(int point) const {
  const auto& f = points_[static_cast<std::size_t>(point)];
  std::vector<int> out;
  for (const auto& entry : f.entries()) {
    for (int r = 1; r <= entry.multiplicity; ++r) {
      // f = e + r x with e = f - r x.
      std::vector<Multiset::Entry> rest(f.entries().begin(), f.entries().end());
      for (auto& x : rest) {
        if (x.point == entry.point) x.multiplicity -= r;
      }
      out.push_back(leaf_of(Multiset::from_entries(std::move(rest))));
    }
  }
  return make_point_set(std::move(out));
}

std::vector<PointSet> VeroneseSpace::lift(const std::vector<PointSet>& base_sets) const {
  std::vector<PointSet> out;
  for (const auto& image : leaf_images_) {
    for (const auto& s : base_sets) {
      PointSet pts;
      for (int x : s) pts.push_back(image[static_cast<std::size_t>(x)]);
      out.push_back(make_point_set(std::move(pts)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

LeafCover VeroneseSpace::leaf_cover(std::vector<PointSet> base_hyperplanes) const {
  return {leaf_images_, std::move(base_hyperplanes)};
}

std::vector<int> mu_embedding(const VeroneseSpace& source, const VeroneseSpace& target, int r) {
  if (target.level() != r * source.level()) throw PreconditionError("target level must be r times the source level");
  std::vector<int> map;
  for (const auto& f : source.points()) map.push_back(target.index_of(scale(r, f)));
  return map;
}

std::vector<int> tau_embedding(const VeroneseSpace& source, const VeroneseSpace& target, const Multiset& e) {
  if (target.level() != source.level() + e.degree()) throw PreconditionError("target level must be k + |e|");
  std::vector<int> map;
  for (const auto& f : source.points()) map.push_back(target.index_of(e + f));
  return map;
}

bool is_embedding(const IncidenceStructure& source, const IncidenceStructure& target, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != source.point_count()) return false;
  auto sorted = map;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (const auto& l : source.lines()) {
    PointSet image;
    for (int p : l) image.push_back(map[static_cast<std::size_t>(p)]);
    if (!target.find_line(make_point_set(std::move(image)))) return false;
  }
  return true;
}

bool leaf_adjacency_holds(const VeroneseSpace& v, int point, int block) {
  const auto& g = v.structure();
  int adjacent = 0;
  for (int q : g.line(block)) {
    if (q == point || g.adjacent(point, q)) ++adjacent;
  }
  if (adjacent < 3) return true;
  const auto top = v.leaf_points(v.top_of_block(block));
  return std::binary_search(top.begin(), top.end(), point);
}

std::optional<LeafAdjacencyCounterexample> find_leaf_adjacency_counterexample(const VeroneseSpace& v) {
  for (int b = 0; b < v.structure().line_count(); ++b) {
    for (int p = 0; p < v.point_count(); ++p) {
      if (!leaf_adjacency_holds(v, p, b)) return LeafAdjacencyCounterexample{p, b};
    }
  }
  return std::nullopt;
}

namespace {

// Lines as sets of multisets, for label-level comparison.
std::set<std::vector<Multiset>> labelled_lines(const IncidenceStructure& g, const std::vector<Multiset>& label) {
  std::set<std::vector<Multiset>> out;
  for (const auto& l : g.lines()) {
    std::vector<Multiset> pts;
    for (int p : l) pts.push_back(label[static_cast<std::size_t>(p)]);
    std::sort(pts.begin(), pts.end());
    out.insert(std::move(pts));
  }
  return out;
}

Multiset translate(const Multiset& f, const std::vector<int>& to_parent) {
  std::vector<Multiset::Entry> entries;
  for (const auto& e : f.entries()) entries.push_back({to_parent[static_cast<std::size_t>(e.point)], e.multiplicity});
  return Multiset::from_entries(std::move(entries));
}

}  // namespace

bool verify_restriction_fact(const IncidenceStructure& base, const PointSet& subset, int k) {
  const auto small = restriction(base, subset);
  const auto left = VeroneseSpace::build(small.structure, k);
  const auto whole = VeroneseSpace::build(base, k);

  // Right side: V(k, M0) restricted to the multisets supported in the subset.
  const auto in = membership(base.point_count(), subset);
  PointSet kept;
  for (int p = 0; p < whole.point_count(); ++p) {
    const auto support = whole.point(p).support();
    if (std::all_of(support.begin(), support.end(), [&](int x) { return in[static_cast<std::size_t>(x)] != 0; })) {
      kept.push_back(p);
    }
  }
  const auto right = restriction(whole.structure(), kept);

  std::vector<Multiset> left_labels;
  for (const auto& f : left.points()) left_labels.push_back(translate(f, small.to_parent));
  std::vector<Multiset> right_labels;
  for (int p : right.to_parent) right_labels.push_back(whole.point(p));

  auto a = left_labels;
  auto b = right_labels;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  return labelled_lines(left.structure(), left_labels) == labelled_lines(right.structure, right_labels);
}

bool verify_line_monotonicity(const IncidenceStructure& small, const IncidenceStructure& large, int k) {
  if (small.point_count() != large.point_count()) throw PreconditionError("structures must share the point set");
  const auto a = VeroneseSpace::build(small, k);
  const auto b = VeroneseSpace::build(large, k);
  for (const auto& l : a.structure().lines()) {
    if (!b.structure().find_line(l)) return false;
  }
  return true;
}

}  // namespace vero
