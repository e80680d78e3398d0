#ifndef MSEKR_BIJECTION_HPP
#define MSEKR_BIJECTION_HPP

#include "msekr/counting.hpp"
#include "msekr/family.hpp"
#include "msekr/multiset.hpp"

namespace msekr {

/// Support-preserving bijection between the k-subsets of [n] and the
/// k-multisets of [m], n = m + k - 1.
///
/// A k-set B with S = B ∩ [m], |S| = j, has an overflow part B ∩ [m+1, n]
/// that is a (k - j)-subset of a (k - 1)-element window. Its lexicographic
/// rank r among those subsets selects the r-th k-multiset (in enumeration
/// order) whose support is exactly S. Both directions are computed from
/// ranks; nothing is tabulated.
class SupportBijection {
 public:
  /// Throws contract_error unless m >= 1 and k >= 1.
  SupportBijection(int m, int k);

  int m() const noexcept { return m_; }
  int k() const noexcept { return k_; }
  int n() const noexcept { return m_ + k_ - 1; }

  /// support(forward(B)) == B ∩ [m]. Throws contract_error when B is not a
  /// k-subset of [n].
  Multiset forward(const KSet& b) const;
  /// Throws contract_error when a is not a k-multiset of [m].
  KSet inverse(const Multiset& a) const;

  /// Number of k-subsets B of [n] with B ∩ [m] equal to a fixed j-set, which
  /// is also the number of k-multisets with that support: C(k-1, k-j).
  /// Throws contract_error unless 1 <= j <= min(k, m).
  Count class_size(int j) const;

  /// Image of a set family over [n]; the inverse maps a multiset family back.
  Family forward(const Family& sets) const;
  Family inverse(const Family& multisets) const;

 private:
  int m_;
  int k_;
};

}  // namespace msekr

#endif  // MSEKR_BIJECTION_HPP
