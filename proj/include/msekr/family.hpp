#ifndef MSEKR_FAMILY_HPP
#define MSEKR_FAMILY_HPP

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "msekr/multiset.hpp"

namespace msekr {

enum class FamilyKind { set, multiset };

std::string_view to_string(FamilyKind kind);

/// A duplicate-free collection of k-multisets (or k-sets) over a shared
/// ground set, kept sorted in enumeration order.
///
/// Set families store their members as 0/1 multiplicity vectors over [n], so
/// every predicate in this library applies to both kinds unchanged.
class Family {
 public:
  Family() = default;
  /// Sorts the members. Throws contract_error on a duplicate, a member of the
  /// wrong cardinality or ground size, or a multiplicity > 1 in a set family.
  Family(int ground_size, int k, FamilyKind kind, std::vector<Multiset> members);

  static Family of_sets(int n, int k, std::span<const KSet> sets);

  int ground_size() const noexcept { return ground_size_; }
  int k() const noexcept { return k_; }
  FamilyKind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }

  std::span<const Multiset> members() const noexcept { return members_; }
  const Multiset& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  bool contains(const Multiset& a) const;
  /// Members as sets; throws contract_error for a multiset family.
  std::vector<KSet> sets() const;

  friend bool operator==(const Family&, const Family&) = default;

 private:
  int ground_size_ = 0;
  int k_ = 0;
  FamilyKind kind_ = FamilyKind::multiset;
  std::vector<Multiset> members_;
};

/// Every pair of distinct members meets in at least t elements, counted with
/// multiplicity. Throws contract_error for t < 1.
bool is_t_intersecting(const Family& family, int t);

/// Every pair of distinct members has supports sharing at least t elements.
bool is_support_t_intersecting(const Family& family, int t);

/// Element-wise minimum over all members. Throws contract_error when empty.
Multiset common_intersection(const Family& family);

/// No s + 1 members are pairwise disjoint. Exhaustive search over chains of
/// pairwise-disjoint members.
bool has_property_P_s1(const Family& family, int s);

}  // namespace msekr

#endif  // MSEKR_FAMILY_HPP
