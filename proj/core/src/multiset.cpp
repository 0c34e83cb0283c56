#include "vero/multiset.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "vero/error.hpp"

namespace vero {

Multiset Multiset::from_entries(std::vector<Entry> entries) {
  std::map<int, long long> counts;
  for (const auto& e : entries) {
    if (e.point < 0 || e.multiplicity < 0) {
      throw PreconditionError("multiset entries must be nonnegative");
    }
    counts[e.point] += e.multiplicity;
  }
  Multiset m;
  for (const auto& [point, mult] : counts) {
    if (mult == 0) continue;
    m.entries_.push_back({point, static_cast<int>(mult)});
    m.degree_ += static_cast<int>(mult);
  }
  return m;
}

Multiset Multiset::from_expansion(std::span<const int> points) {
  std::vector<Entry> entries;
  entries.reserve(points.size());
  for (int p : points) entries.push_back({p, 1});
  return from_entries(std::move(entries));
}

int Multiset::multiplicity(int point) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), point,
                             [](const Entry& e, int p) { return e.point < p; });
  return (it != entries_.end() && it->point == point) ? it->multiplicity : 0;
}

std::vector<int> Multiset::support() const {
  std::vector<int> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.point);
  return out;
}

std::vector<int> Multiset::expansion() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (const auto& e : entries_) out.insert(out.end(), static_cast<std::size_t>(e.multiplicity), e.point);
  return out;
}

std::string Multiset::to_string() const {
  if (entries_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& e : entries_) {
    if (!first) os << " + ";
    first = false;
    if (e.multiplicity != 1) os << e.multiplicity << "*";
    os << e.point;
  }
  return os.str();
}

// Walks both run-length encodings as if comparing the expanded sequences.
std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
  std::size_t i = 0, j = 0;
  int left_a = a.entries_.empty() ? 0 : a.entries_[0].multiplicity;
  int left_b = b.entries_.empty() ? 0 : b.entries_[0].multiplicity;
  while (i < a.entries_.size() && j < b.entries_.size()) {
    const int pa = a.entries_[i].point;
    const int pb = b.entries_[j].point;
    if (pa != pb) return pa <=> pb;
    const int step = std::min(left_a, left_b);
    left_a -= step;
    left_b -= step;
    if (left_a == 0 && ++i < a.entries_.size()) left_a = a.entries_[i].multiplicity;
    if (left_b == 0 && ++j < b.entries_.size()) left_b = b.entries_[j].multiplicity;
  }
  const bool a_done = i >= a.entries_.size();
  const bool b_done = j >= b.entries_.size();
  if (a_done && b_done) return std::strong_ordering::equal;
  return a_done ? std::strong_ordering::less : std::strong_ordering::greater;
}

Multiset add(const Multiset& e, const Multiset& f) {
  std::vector<Multiset::Entry> merged(e.entries().begin(), e.entries().end());
  merged.insert(merged.end(), f.entries().begin(), f.entries().end());
  return Multiset::from_entries(std::move(merged));
}

Multiset scale_point(int r, int x) {
  if (r < 1) throw PreconditionError("scale_point: multiplier must be positive");
  if (x < 0) throw PreconditionError("scale_point: negative point index");
  return Multiset::from_entries({{x, r}});
}

Multiset scale(int r, const Multiset& f) {
  if (r < 1) throw PreconditionError("scale: multiplier must be positive");
  std::vector<Multiset::Entry> entries(f.entries().begin(), f.entries().end());
  for (auto& e : entries) e.multiplicity *= r;
  return Multiset::from_entries(std::move(entries));
}

namespace {

void enumerate_rec(int n, int k, int start, std::vector<int>& prefix, std::vector<Multiset>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(Multiset::from_expansion(prefix));
    return;
  }
  for (int x = start; x < n; ++x) {
    prefix.push_back(x);
    enumerate_rec(n, k, x, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Multiset> enumerate_multisets(int n, int k) {
  if (k < 0 || n < 0) throw PreconditionError("enumerate_multisets: negative argument");
  if (n == 0 && k > 0) throw PreconditionError("enumerate_multisets: empty universe");
  std::vector<Multiset> out;
  if (n > 0) out.reserve(static_cast<std::size_t>(binomial(static_cast<std::uint64_t>(n + k - 1), static_cast<std::uint64_t>(k))));
  std::vector<int> prefix;
  prefix.reserve(static_cast<std::size_t>(k));
  enumerate_rec(n, k, 0, prefix, out);
  return out;
}

std::vector<Multiset> enumerate_multisets_below(int n, int k) {
  std::vector<Multiset> out;
  for (int d = 0; d < k; ++d) {
    auto level = enumerate_multisets(n, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using Wide = unsigned __int128;
  Wide acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) throw CapacityError("binomial overflow");
  }
  return static_cast<std::uint64_t>(acc);
}

std::size_t MultisetHash::operator()(const Multiset& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const auto& e : m.entries()) {
    h = (h ^ static_cast<std::size_t>(e.point)) * 1099511628211ull;
    h = (h ^ static_cast<std::size_t>(e.multiplicity)) * 1099511628211ull;
  }
  return h;
}

nlohmann::json to_json(const Multiset& m) {
  auto j = nlohmann::json::array();
  for (const auto& e : m.entries()) j.push_back({e.point, e.multiplicity});
  return j;
}

Multiset multiset_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw PreconditionError("multiset JSON must be an array of [point, multiplicity] pairs");
  std::vector<Multiset::Entry> entries;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw PreconditionError("malformed multiset entry");
    entries.push_back({pair[0].get<int>(), pair[1].get<int>()});
  }
  return Multiset::from_entries(std::move(entries));
}

}  // namespace vero
