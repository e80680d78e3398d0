#ifndef MSEKR_MULTISET_HPP
#define MSEKR_MULTISET_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace msekr {

class KSet;

/// A multiset over the ground set [m], stored as a dense multiplicity vector.
///
/// counts()[i] is the multiplicity of element i + 1. Two multisets compare in
/// lexicographic order of their sorted element lists; for equal cardinality
/// this is the reverse lexicographic order of the multiplicity vectors, so
/// {1,1,...,1} is the smallest k-multiset.
class Multiset {
 public:
  Multiset() = default;
  /// Empty multiset over [ground_size].
  explicit Multiset(int ground_size);
  /// Throws contract_error on a negative multiplicity.
  explicit Multiset(std::vector<int> counts);

  /// Build from a list of elements in [1, ground_size]; order is irrelevant.
  static Multiset from_elements(int ground_size, std::span<const int> elements);
  static Multiset from_elements(int ground_size,
                                std::initializer_list<int> elements);
  /// The all-ones multiset [m].
  static Multiset full(int ground_size);

  int ground_size() const noexcept { return static_cast<int>(counts_.size()); }
  int cardinality() const noexcept { return cardinality_; }
  std::span<const int> counts() const noexcept { return counts_; }

  /// Multiplicity of element (1-based). Throws std::out_of_range.
  int multiplicity(int element) const;
  /// Elements in non-decreasing order, each repeated by its multiplicity.
  std::vector<int> elements() const;
  /// Number of distinct elements.
  int support_size() const noexcept;
  bool contains_element(int element) const;
  /// True iff every multiplicity of `sub` is at most the one here.
  bool contains(const Multiset& sub) const;
  bool empty() const noexcept { return cardinality_ == 0; }

  /// Copy with the multiplicity of one element replaced.
  Multiset with_multiplicity(int element, int multiplicity) const;

  friend bool operator==(const Multiset& a, const Multiset& b) noexcept {
    return a.counts_ == b.counts_;
  }
  friend std::strong_ordering operator<=>(const Multiset& a,
                                          const Multiset& b) noexcept;

 private:
  std::vector<int> counts_;
  int cardinality_ = 0;
};

/// A subset of [n], members strictly increasing.
class KSet {
 public:
  KSet() = default;
  /// Sorts and validates; throws contract_error on repeats or out-of-range.
  KSet(int ground_size, std::vector<int> members);
  KSet(int ground_size, std::initializer_list<int> members);

  int ground_size() const noexcept { return ground_size_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  std::span<const int> members() const noexcept { return members_; }
  bool contains(int element) const;

  /// Indicator multiset over [n].
  Multiset to_multiset() const;
  /// Inverse of to_multiset; throws contract_error if any multiplicity > 1.
  static KSet from_multiset(const Multiset& indicator);

  friend bool operator==(const KSet&, const KSet&) = default;
  friend std::strong_ordering operator<=>(const KSet& a,
                                          const KSet& b) noexcept;

 private:
  int ground_size_ = 0;
  std::vector<int> members_;
};

/// Element-wise minimum of multiplicities. Throws contract_error when the
/// ground sizes differ.
Multiset intersect(const Multiset& a, const Multiset& b);
/// cardinality(intersect(a, b)) without materializing the result.
int intersection_size(const Multiset& a, const Multiset& b);
/// |support(a) ∩ support(b)|.
int support_overlap(const Multiset& a, const Multiset& b);

KSet support(const Multiset& a);
KSet set_intersection(const KSet& a, const KSet& b);

/// Multiset union by summing multiplicities.
Multiset sum(const Multiset& a, const Multiset& b);

std::string to_string(const Multiset& a);
std::string to_string(const KSet& s);
std::ostream& operator<<(std::ostream& os, const Multiset& a);
std::ostream& operator<<(std::ostream& os, const KSet& s);

}  // namespace msekr

#endif  // MSEKR_MULTISET_HPP
