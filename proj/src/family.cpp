#include "msekr/family.hpp"

#include <algorithm>

#include "msekr/errors.hpp"

namespace msekr {

std::string_view to_string(FamilyKind kind) {
  return kind == FamilyKind::set ? "set" : "multiset";
}

Family::Family(int ground_size, int k, FamilyKind kind,
               std::vector<Multiset> members)
    : ground_size_(ground_size), k_(k), kind_(kind), members_(std::move(members)) {
  if (ground_size_ < 1) {
    throw contract_error("family ground size must be positive");
  }
  if (k_ < 0) {
    throw contract_error("family cardinality must be non-negative");
  }
  for (const Multiset& a : members_) {
    if (a.ground_size() != ground_size_) {
      throw contract_error("member " + to_string(a) + " has ground size " +
                           std::to_string(a.ground_size()) + ", expected " +
                           std::to_string(ground_size_));
    }
    if (a.cardinality() != k_) {
      throw contract_error("member " + to_string(a) + " has cardinality " +
                           std::to_string(a.cardinality()) + ", expected " +
                           std::to_string(k_));
    }
    if (kind_ == FamilyKind::set &&
        std::any_of(a.counts().begin(), a.counts().end(),
                    [](int c) { return c > 1; })) {
      throw contract_error("set family member " + to_string(a) +
                           " has a repeated element");
    }
  }
  std::sort(members_.begin(), members_.end());
  auto dup = std::adjacent_find(members_.begin(), members_.end());
  if (dup != members_.end()) {
    throw contract_error("duplicate member " + to_string(*dup));
  }
}

Family Family::of_sets(int n, int k, std::span<const KSet> sets) {
  std::vector<Multiset> members;
  members.reserve(sets.size());
  for (const KSet& s : sets) {
    if (s.ground_size() != n) {
      throw contract_error("set " + to_string(s) + " is not over [" +
                           std::to_string(n) + "]");
    }
    members.push_back(s.to_multiset());
  }
  return Family(n, k, FamilyKind::set, std::move(members));
}

bool Family::contains(const Multiset& a) const {
  return std::binary_search(members_.begin(), members_.end(), a);
}

std::vector<KSet> Family::sets() const {
  if (kind_ != FamilyKind::set) {
    throw contract_error("not a set family");
  }
  std::vector<KSet> out;
  out.reserve(members_.size());
  for (const Multiset& a : members_) {
    out.push_back(KSet::from_multiset(a));
  }
  return out;
}

bool is_t_intersecting(const Family& family, int t) {
  if (t < 1) {
    throw contract_error("t must be at least 1");
  }
  auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (intersection_size(members[i], members[j]) < t) {
        return false;
      }
    }
  }
  return true;
}

bool is_support_t_intersecting(const Family& family, int t) {
  if (t < 1) {
    throw contract_error("t must be at least 1");
  }
  auto members = family.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (support_overlap(members[i], members[j]) < t) {
        return false;
      }
    }
  }
  return true;
}

Multiset common_intersection(const Family& family) {
  if (family.empty()) {
    throw contract_error("common intersection of an empty family");
  }
  Multiset core = family[0];
  for (const Multiset& a : family) {
    core = intersect(core, a);
  }
  return core;
}

namespace {

// Depth-first search for `need` more members, each disjoint from everything
// already chosen, drawn from candidates[from..].
bool disjoint_chain(const std::vector<std::vector<bool>>& disjoint,
                    std::vector<std::size_t>& chain, std::size_t from,
                    int need) {
  if (need == 0) {
    return true;
  }
  std::size_t n = disjoint.size();
  for (std::size_t v = from; v < n; ++v) {
    bool ok = std::all_of(chain.begin(), chain.end(),
                          [&](std::size_t u) { return disjoint[u][v]; });
    if (!ok) {
      continue;
    }
    chain.push_back(v);
    if (disjoint_chain(disjoint, chain, v + 1, need - 1)) {
      return true;
    }
    chain.pop_back();
  }
  return false;
}

}  // namespace

bool has_property_P_s1(const Family& family, int s) {
  if (s < 1) {
    throw contract_error("s must be at least 1");
  }
  std::size_t n = family.size();
  std::vector<std::vector<bool>> disjoint(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool d = intersection_size(family[i], family[j]) == 0;
      disjoint[i][j] = d;
      disjoint[j][i] = d;
    }
  }
  std::vector<std::size_t> chain;
  return !disjoint_chain(disjoint, chain, 0, s + 1);
}

}  // namespace msekr
