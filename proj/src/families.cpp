#include "msekr/families.hpp"

#include <algorithm>
#include <numeric>

#include "msekr/enumerate.hpp"
#include "msekr/errors.hpp"

namespace msekr {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw contract_error(what);
  }
}

template <typename Pred>
Family filter_multisets(int m, int k, Pred&& keep) {
  std::vector<Multiset> out;
  for (Multiset& a : enumerate_k_multisets(m, k)) {
    if (keep(a)) {
      out.push_back(std::move(a));
    }
  }
  return Family(m, k, FamilyKind::multiset, std::move(out));
}

template <typename Pred>
Family filter_sets(int n, int k, Pred&& keep) {
  std::vector<Multiset> out;
  for (const KSet& s : enumerate_k_subsets(n, k)) {
    Multiset a = s.to_multiset();
    if (keep(a)) {
      out.push_back(std::move(a));
    }
  }
  return Family(n, k, FamilyKind::set, std::move(out));
}

// Number of distinct elements of [lo, hi] present in a.
int support_in_range(const Multiset& a, int lo, int hi) {
  int total = 0;
  for (int e = lo; e <= hi; ++e) {
    total += a.counts()[static_cast<std::size_t>(e - 1)] > 0 ? 1 : 0;
  }
  return total;
}

bool contains_range(const Multiset& a, int lo, int hi) {
  return support_in_range(a, lo, hi) == hi - lo + 1;
}

Multiset range_without(int ground, int hi, int skip) {
  std::vector<int> counts(static_cast<std::size_t>(ground), 0);
  for (int e = 1; e <= hi; ++e) {
    if (e != skip) {
      counts[static_cast<std::size_t>(e - 1)] = 1;
    }
  }
  return Multiset(std::move(counts));
}

void check_frankl(int ground, int k, int t, int r) {
  require(t >= 1, "Frankl family needs t >= 1");
  require(r >= 0, "Frankl family needs r >= 0");
  require(t + r <= k, "Frankl family needs t + r <= k");
  require(t + 2 * r <= ground,
          "Frankl family needs t + 2r <= ground size (" +
              std::to_string(t + 2 * r) + " > " + std::to_string(ground) + ")");
}

Family with_extra(const Family& base, std::vector<Multiset> extra) {
  std::vector<Multiset> all(base.begin(), base.end());
  for (Multiset& a : extra) {
    all.push_back(std::move(a));
  }
  return Family(base.ground_size(), base.k(), base.kind(), std::move(all));
}

}  // namespace

Family star(int m, int k, int x) {
  require(k >= 1, "star needs k >= 1");
  require(x >= 1 && x <= m, "star element outside [1,m]");
  Multiset point = Multiset::from_elements(m, {x});
  std::vector<Multiset> out;
  for (const Multiset& rest : enumerate_k_multisets(m, k - 1)) {
    out.push_back(sum(rest, point));
  }
  return Family(m, k, FamilyKind::multiset, std::move(out));
}

Family star_set(int n, int k, int x) {
  require(k >= 1 && k <= n, "star_set needs 1 <= k <= n");
  require(x >= 1 && x <= n, "star element outside [1,n]");
  return filter_sets(n, k, [x](const Multiset& a) {
    return a.counts()[static_cast<std::size_t>(x - 1)] > 0;
  });
}

Family fixed_multiset(int m, int k, const Multiset& core) {
  require(core.ground_size() == m, "fixed multiset is not over [m]");
  require(core.cardinality() <= k, "fixed multiset larger than k");
  std::vector<Multiset> out;
  for (const Multiset& rest :
       enumerate_k_multisets(m, k - core.cardinality())) {
    out.push_back(sum(rest, core));
  }
  return Family(m, k, FamilyKind::multiset, std::move(out));
}

Family frankl_set(int n, int k, int t, int r) {
  check_frankl(n, k, t, r);
  require(k <= n, "frankl_set needs k <= n");
  return filter_sets(n, k, [&](const Multiset& a) {
    return support_in_range(a, 1, t + 2 * r) >= t + r;
  });
}

Family frankl_multiset(int m, int k, int t, int r) {
  check_frankl(m, k, t, r);
  return filter_multisets(m, k, [&](const Multiset& a) {
    return support_in_range(a, 1, t + 2 * r) >= t + r;
  });
}

Family hm_multiset(int m, int k) {
  require(k >= 2, "hm_multiset needs k >= 2");
  require(m >= k + 1, "hm_multiset needs m >= k + 1");
  Family base = filter_multisets(m, k, [&](const Multiset& a) {
    return a.counts()[0] > 0 && support_in_range(a, 2, k + 1) > 0;
  });
  return with_extra(base, {range_without(m, k + 1, 1)});
}

Family hm_set(int n, int k) {
  require(k >= 2, "hm_set needs k >= 2");
  require(n >= k + 1, "hm_set needs n >= k + 1");
  Family base = filter_sets(n, k, [&](const Multiset& a) {
    return a.counts()[0] > 0 && support_in_range(a, 2, k + 1) > 0;
  });
  return with_extra(base, {range_without(n, k + 1, 1)});
}

Family hm_t_multiset(int m, int k, int t) {
  require(1 < t && t < k, "hm_t_multiset needs 1 < t < k");
  require(m >= k + 1, "hm_t_multiset needs m >= k + 1");
  Family base = filter_multisets(m, k, [&](const Multiset& a) {
    return contains_range(a, 1, t) && support_in_range(a, t + 1, k + 1) > 0;
  });
  std::vector<Multiset> extra;
  for (int i = 1; i <= t; ++i) {
    extra.push_back(range_without(m, k + 1, i));
  }
  return with_extra(base, std::move(extra));
}

Family hm_t_set(int n, int k, int t) {
  require(1 < t && t < k, "hm_t_set needs 1 < t < k");
  require(n >= k + 1, "hm_t_set needs n >= k + 1");
  Family base = filter_sets(n, k, [&](const Multiset& a) {
    return contains_range(a, 1, t) && support_in_range(a, t + 1, k + 1) > 0;
  });
  std::vector<Multiset> extra;
  for (int i = 1; i <= t; ++i) {
    extra.push_back(range_without(n, k + 1, i));
  }
  return with_extra(base, std::move(extra));
}

Family hit_s(int m, int k, const KSet& hit) {
  require(hit.ground_size() == m, "hitting set is not a subset of [m]");
  return filter_multisets(m, k, [&](const Multiset& a) {
    return std::any_of(hit.members().begin(), hit.members().end(), [&](int e) {
      return a.counts()[static_cast<std::size_t>(e - 1)] > 0;
    });
  });
}

Family hajnal_rothschild_set(int n, int k, int t, int s) {
  require(t >= 1 && s >= 1, "hajnal_rothschild needs t, s >= 1");
  require(s * t <= n, "hajnal_rothschild needs st <= n");
  require(t <= k && k <= n, "hajnal_rothschild needs t <= k <= n");
  return filter_sets(n, k, [&](const Multiset& a) {
    for (int block = 0; block < s; ++block) {
      if (contains_range(a, block * t + 1, block * t + t)) {
        return true;
      }
    }
    return false;
  });
}

Count star_size(int m, int k) { return multichoose(m, k - 1); }

Count fixed_multiset_size(int m, int k, int core_cardinality) {
  return multichoose(m, k - core_cardinality);
}

Count frankl_set_size(int n, int k, int t, int r) {
  check_frankl(n, k, t, r);
  int x = t + 2 * r;
  Count total = 0;
  for (int j = t + r; j <= x; ++j) {
    total = checked_add(total, checked_mul(binomial(x, j), binomial(n - x, k - j)));
  }
  return total;
}

Count frankl_multiset_size(int m, int k, int t, int r) {
  check_frankl(m, k, t, r);
  // Split on the exact set J = support ∩ [t+2r], |J| = j: the remaining k - j
  // copies are free over J plus the m - t - 2r elements outside the window.
  int x = t + 2 * r;
  Count total = 0;
  for (int j = t + r; j <= std::min(x, k); ++j) {
    total = checked_add(
        total, checked_mul(binomial(x, j), multichoose(j + m - x, k - j)));
  }
  return total;
}

Count hm_multiset_size(int m, int k) {
  require(k >= 2 && m >= k + 1, "hm_multiset needs k >= 2 and m >= k + 1");
  return checked_add(
      checked_sub(binomial(m + k - 2, k - 1), binomial(m - 2, k - 1)), 1);
}

Count hm_set_size(int n, int k) {
  require(k >= 2 && n >= k + 1, "hm_set needs k >= 2 and n >= k + 1");
  return checked_add(
      checked_sub(binomial(n - 1, k - 1), binomial(n - k - 1, k - 1)), 1);
}

Count hit_s_size(int m, int k, int s) {
  require(s >= 0 && s <= m, "hitting set size outside [0,m]");
  return checked_sub(multichoose(m, k), multichoose(m - s, k));
}

Count hajnal_rothschild_size(int n, int k, int t, int s) {
  require(t >= 1 && s >= 1, "hajnal_rothschild needs t, s >= 1");
  require(s * t <= n && t <= k, "hajnal_rothschild needs st <= n and t <= k");
  SignedCount total = 0;
  for (int j = 1; j <= s; ++j) {
    Count term = checked_mul(binomial(s, j), binomial(n - j * t, k - j * t));
    if (j % 2 == 1) {
      total += static_cast<SignedCount>(term);
    } else {
      total -= static_cast<SignedCount>(term);
    }
  }
  if (total < 0) {
    throw internal_invariant_error("negative inclusion-exclusion count");
  }
  return static_cast<Count>(total);
}

Count ak_size(int n, int k, int t) {
  require(1 <= t && t <= k && k <= n, "ak_size needs 1 <= t <= k <= n");
  if (n <= 2 * k - t) {
    return binomial(n, k);
  }
  Count best = 0;
  for (int r = 0; r <= k - t && t + 2 * r <= n; ++r) {
    best = std::max(best, frankl_set_size(n, k, t, r));
  }
  return best;
}

Family extend_to_maximal(const Family& family) {
  require(family.kind() == FamilyKind::multiset,
          "extend_to_maximal expects a multiset family");
  require(family.ground_size() >= family.k() + 1,
          "extend_to_maximal needs m >= k + 1");
  require(is_t_intersecting(family, 1), "family is not intersecting");
  std::vector<Multiset> members(family.begin(), family.end());
  for (Multiset& a : enumerate_k_multisets(family.ground_size(), family.k())) {
    if (family.contains(a)) {
      continue;
    }
    bool ok = std::all_of(members.begin(), members.end(), [&](const Multiset& b) {
      return intersection_size(a, b) > 0;
    });
    if (ok) {
      members.push_back(std::move(a));
    }
  }
  return Family(family.ground_size(), family.k(), family.kind(),
                std::move(members));
}

namespace {

void check_permutation(std::span<const int> perm, int ground) {
  require(static_cast<int>(perm.size()) == ground,
          "permutation length differs from ground size");
  std::vector<bool> seen(static_cast<std::size_t>(ground), false);
  for (int p : perm) {
    require(p >= 1 && p <= ground && !seen[static_cast<std::size_t>(p - 1)],
            "not a permutation of [" + std::to_string(ground) + "]");
    seen[static_cast<std::size_t>(p - 1)] = true;
  }
}

Multiset relabel(const Multiset& a, std::span<const int> perm) {
  std::vector<int> counts(a.counts().size(), 0);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    counts[static_cast<std::size_t>(perm[i] - 1)] = a.counts()[i];
  }
  return Multiset(std::move(counts));
}

std::uint64_t member_rank(const Multiset& a, FamilyKind kind) {
  return kind == FamilyKind::set ? rank(KSet::from_multiset(a)) : rank(a);
}

}  // namespace

Family apply_permutation(const Family& family, std::span<const int> perm) {
  check_permutation(perm, family.ground_size());
  std::vector<Multiset> out;
  out.reserve(family.size());
  for (const Multiset& a : family) {
    out.push_back(relabel(a, perm));
  }
  return Family(family.ground_size(), family.k(), family.kind(),
                std::move(out));
}

Family canonical_form(const Family& family) {
  int ground = family.ground_size();
  if (ground > kMaxCanonicalGround) {
    throw scale_exceeded("canonical form limited to ground size " +
                         std::to_string(kMaxCanonicalGround) + ", got " +
                         std::to_string(ground));
  }
  std::vector<int> perm(static_cast<std::size_t>(ground));
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> ranks(family.size());
  do {
    for (std::size_t i = 0; i < family.size(); ++i) {
      ranks[i] = member_rank(relabel(family[i], perm), family.kind());
    }
    std::sort(ranks.begin(), ranks.end());
    if (best.empty() || ranks < best) {
      best = ranks;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<Multiset> members;
  members.reserve(best.size());
  for (std::uint64_t r : best) {
    members.push_back(family.kind() == FamilyKind::set
                          ? unrank_kset(ground, family.k(), r).to_multiset()
                          : unrank_multiset(ground, family.k(), r));
  }
  return Family(ground, family.k(), family.kind(), std::move(members));
}

bool is_isomorphic(const Family& a, const Family& b) {
  if (a.ground_size() != b.ground_size() || a.k() != b.k() ||
      a.kind() != b.kind() || a.size() != b.size()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

std::vector<std::string_view> family_names() {
  return {"star",          "star_set",      "fixed_multiset", "frankl_set",
          "frankl_multiset", "hm_set",      "hm_multiset",    "hm_t_set",
          "hm_t_multiset", "hit_s",         "hajnal_rothschild"};
}

Family build_family(const FamilySpec& spec) {
  const std::string& name = spec.name;
  if (name == "star") {
    return star(spec.m, spec.k, spec.x);
  }
  if (name == "star_set") {
    return star_set(spec.m, spec.k, spec.x);
  }
  if (name == "fixed_multiset") {
    return fixed_multiset(spec.m, spec.k,
                          Multiset::from_elements(spec.m, spec.anchor));
  }
  if (name == "frankl_set") {
    return frankl_set(spec.m, spec.k, spec.t, spec.r);
  }
  if (name == "frankl_multiset") {
    return frankl_multiset(spec.m, spec.k, spec.t, spec.r);
  }
  if (name == "hm_set") {
    return hm_set(spec.m, spec.k);
  }
  if (name == "hm_multiset") {
    return hm_multiset(spec.m, spec.k);
  }
  if (name == "hm_t_set") {
    return hm_t_set(spec.m, spec.k, spec.t);
  }
  if (name == "hm_t_multiset") {
    return hm_t_multiset(spec.m, spec.k, spec.t);
  }
  if (name == "hit_s") {
    return hit_s(spec.m, spec.k, KSet(spec.m, spec.anchor));
  }
  if (name == "hajnal_rothschild") {
    return hajnal_rothschild_set(spec.m, spec.k, spec.t, spec.s);
  }
  throw contract_error("unknown family '" + name + "'");
}

std::optional<Count> closed_form_size(const FamilySpec& spec) {
  const std::string& name = spec.name;
  if (name == "star") {
    return star_size(spec.m, spec.k);
  }
  if (name == "star_set") {
    return binomial(spec.m - 1, spec.k - 1);
  }
  if (name == "fixed_multiset") {
    return fixed_multiset_size(spec.m, spec.k,
                               static_cast<int>(spec.anchor.size()));
  }
  if (name == "frankl_set") {
    return frankl_set_size(spec.m, spec.k, spec.t, spec.r);
  }
  if (name == "frankl_multiset") {
    return frankl_multiset_size(spec.m, spec.k, spec.t, spec.r);
  }
  if (name == "hm_set") {
    return hm_set_size(spec.m, spec.k);
  }
  if (name == "hm_multiset") {
    return hm_multiset_size(spec.m, spec.k);
  }
  if (name == "hm_t_set" || name == "hm_t_multiset") {
    return std::nullopt;
  }
  if (name == "hit_s") {
    return hit_s_size(spec.m, spec.k, static_cast<int>(spec.anchor.size()));
  }
  if (name == "hajnal_rothschild") {
    return hajnal_rothschild_size(spec.m, spec.k, spec.t, spec.s);
  }
  throw contract_error("unknown family '" + name + "'");
}

}  // namespace msekr
