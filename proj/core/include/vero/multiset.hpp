#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace vero {

/// A finite multiset of point indices in canonical run-length form.
///
/// Entries are kept sorted by point index with strictly positive
/// multiplicities, so structural equality is multiset equality. Ordering is
/// lexicographic on the sorted expansion (e.g. 2*0 < 0+1 < 0+2 < 2*1), which
/// is the documented enumeration order used by every report.
class Multiset {
 public:
  struct Entry {
    int point = 0;
    int multiplicity = 0;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Multiset() = default;

  /// Accepts entries in any order; merges repeated points and drops zeros.
  static Multiset from_entries(std::vector<Entry> entries);
  /// Builds the multiset whose expansion is `points` (any order).
  static Multiset from_expansion(std::span<const int> points);

  std::span<const Entry> entries() const { return entries_; }
  int degree() const { return degree_; }
  bool empty() const { return entries_.empty(); }
  int multiplicity(int point) const;
  std::vector<int> support() const;
  /// Sorted expansion: each point repeated by its multiplicity.
  std::vector<int> expansion() const;

  std::string to_string() const;

  friend bool operator==(const Multiset&, const Multiset&) = default;
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b);

 private:
  std::vector<Entry> entries_;
  int degree_ = 0;
};

/// Pointwise sum of multiplicity functions.
Multiset add(const Multiset& e, const Multiset& f);
inline Multiset operator+(const Multiset& e, const Multiset& f) { return add(e, f); }

/// r * x. Throws PreconditionError when r < 1.
Multiset scale_point(int r, int x);

/// r * f (every multiplicity multiplied by r). Throws PreconditionError when r < 1.
Multiset scale(int r, const Multiset& f);

/// All degree-k multisets over {0..n-1} in lexicographic order.
/// Throws PreconditionError for n = 0 with k > 0.
std::vector<Multiset> enumerate_multisets(int n, int k);

/// All multisets over {0..n-1} of degree strictly below k, ordered by degree
/// and then lexicographically.
std::vector<Multiset> enumerate_multisets_below(int n, int k);

/// Exact binomial coefficient; throws CapacityError on 64-bit overflow.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

struct MultisetHash {
  std::size_t operator()(const Multiset& m) const noexcept;
};

/// [[point, multiplicity], ...]
nlohmann::json to_json(const Multiset& m);
Multiset multiset_from_json(const nlohmann::json& j);

}  // namespace vero
