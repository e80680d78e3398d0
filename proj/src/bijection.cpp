#include "msekr/bijection.hpp"

#include <algorithm>

#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"

namespace msekr {

SupportBijection::SupportBijection(int m, int k) : m_(m), k_(k) {
  if (m < 1 || k < 1) {
    throw contract_error("bijection needs m >= 1 and k >= 1");
  }
}

Multiset SupportBijection::forward(const KSet& b) const {
  if (b.ground_size() != n() || b.size() != k_) {
    throw contract_error("forward expects a " + std::to_string(k_) +
                         "-subset of [" + std::to_string(n()) + "], got " +
                         to_string(b));
  }
  std::vector<int> low;
  std::vector<int> overflow;
  for (int e : b.members()) {
    if (e <= m_) {
      low.push_back(e);
    } else {
      overflow.push_back(e - m_);
    }
  }
  int j = static_cast<int>(low.size());
  std::uint64_t r = rank(KSet(k_ - 1, std::move(overflow)));
  // Extra copies beyond one of each support element: a (k - j)-multiset
  // over the j support positions.
  Multiset extra = unrank_multiset(j, k_ - j, r);
  std::vector<int> counts(static_cast<std::size_t>(m_), 0);
  for (int p = 0; p < j; ++p) {
    counts[static_cast<std::size_t>(low[static_cast<std::size_t>(p)] - 1)] =
        1 + extra.counts()[static_cast<std::size_t>(p)];
  }
  return Multiset(std::move(counts));
}

KSet SupportBijection::inverse(const Multiset& a) const {
  if (a.ground_size() != m_ || a.cardinality() != k_) {
    throw contract_error("inverse expects a " + std::to_string(k_) +
                         "-multiset of [" + std::to_string(m_) + "], got " +
                         to_string(a));
  }
  std::vector<int> members;
  std::vector<int> extra;
  for (int i = 0; i < m_; ++i) {
    int c = a.counts()[static_cast<std::size_t>(i)];
    if (c > 0) {
      members.push_back(i + 1);
      extra.push_back(c - 1);
    }
  }
  int j = static_cast<int>(members.size());
  std::uint64_t r = rank(Multiset(std::move(extra)));
  KSet overflow = unrank_kset(k_ - 1, k_ - j, r);
  for (int e : overflow.members()) {
    members.push_back(e + m_);
  }
  return KSet(n(), std::move(members));
}

Count SupportBijection::class_size(int j) const {
  if (j < 1 || j > std::min(k_, m_)) {
    throw contract_error("support class size needs 1 <= j <= min(k, m)");
  }
  return binomial(k_ - 1, k_ - j);
}

Family SupportBijection::forward(const Family& sets) const {
  if (sets.kind() != FamilyKind::set || sets.ground_size() != n() ||
      sets.k() != k_) {
    throw contract_error("forward expects a family of " + std::to_string(k_) +
                         "-subsets of [" + std::to_string(n()) + "]");
  }
  std::vector<Multiset> out;
  out.reserve(sets.size());
  for (const Multiset& b : sets) {
    out.push_back(forward(KSet::from_multiset(b)));
  }
  return Family(m_, k_, FamilyKind::multiset, std::move(out));
}

Family SupportBijection::inverse(const Family& multisets) const {
  if (multisets.kind() != FamilyKind::multiset ||
      multisets.ground_size() != m_ || multisets.k() != k_) {
    throw contract_error("inverse expects a family of " + std::to_string(k_) +
                         "-multisets of [" + std::to_string(m_) + "]");
  }
  std::vector<Multiset> out;
  out.reserve(multisets.size());
  for (const Multiset& a : multisets) {
    out.push_back(inverse(a).to_multiset());
  }
  return Family(n(), k_, FamilyKind::set, std::move(out));
}

}  // namespace msekr
