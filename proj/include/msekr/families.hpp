#ifndef MSEKR_FAMILIES_HPP
#define MSEKR_FAMILIES_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "msekr/counting.hpp"
#include "msekr/family.hpp"
#include "msekr/multiset.hpp"

namespace msekr {

// Extremal family constructors. Multiset constructors take the ground size m,
// set constructors take n. Parameter violations throw contract_error.

/// All k-multisets of [m] containing x.
Family star(int m, int k, int x);
/// All k-subsets of [n] containing x.
Family star_set(int n, int k, int x);

/// All k-multisets of [m] containing the multiset `core`.
Family fixed_multiset(int m, int k, const Multiset& core);

/// All k-subsets of [n] meeting [t + 2r] in at least t + r elements.
Family frankl_set(int n, int k, int t, int r);
/// All k-multisets of [m] whose support meets [t + 2r] in at least t + r
/// elements. Requires t + 2r <= m.
Family frankl_multiset(int m, int k, int t, int r);

/// {A : 1 ∈ A, A ∩ [2, k+1] ≠ ∅} ∪ {[2, k+1]}. Requires k >= 2, m >= k + 1.
Family hm_multiset(int m, int k);
Family hm_set(int n, int k);

/// {A : [t] ⊆ A, A ∩ [t+1, k+1] ≠ ∅} ∪ {[k+1] \ {i} : i ∈ [t]}.
/// Requires 1 < t < k and m >= k + 1.
Family hm_t_multiset(int m, int k, int t);
Family hm_t_set(int n, int k, int t);

/// All k-multisets whose support meets `hit` (a subset of [m]).
Family hit_s(int m, int k, const KSet& hit);
/// All k-subsets of [n] containing one of the s disjoint t-sets
/// [1,t], [t+1,2t], ..., [(s-1)t+1, st].
Family hajnal_rothschild_set(int n, int k, int t, int s);

// Closed-form sizes.
Count star_size(int m, int k);
Count fixed_multiset_size(int m, int k, int core_cardinality);
Count frankl_set_size(int n, int k, int t, int r);
Count frankl_multiset_size(int m, int k, int t, int r);
Count hm_multiset_size(int m, int k);
Count hm_set_size(int n, int k);
Count hit_s_size(int m, int k, int s);
/// Inclusion-exclusion count of k-sets fixed by s disjoint t-subsets:
/// sum_{j=1}^{s} (-1)^{j+1} C(s, j) C(n - jt, k - jt). Requires st <= n, t <= k.
Count hajnal_rothschild_size(int n, int k, int t, int s);

/// Largest t-intersecting family of k-subsets of [n]: C(n, k) when every pair
/// of k-sets already t-intersects, otherwise the best Frankl family.
Count ak_size(int n, int k, int t);

/// Greedily adds every k-multiset (in enumeration order) that keeps the
/// family intersecting. Throws contract_error when the input is not
/// intersecting or m < k + 1.
Family extend_to_maximal(const Family& family);

/// Relabels element i as perm[i - 1]. Throws contract_error unless perm is a
/// permutation of [ground_size].
Family apply_permutation(const Family& family, std::span<const int> perm);

/// Lexicographically smallest sorted member-rank list over all relabelings of
/// the ground set, returned as a family. Throws scale_exceeded when the
/// ground set has more than 9 elements.
Family canonical_form(const Family& family);
bool is_isomorphic(const Family& a, const Family& b);

inline constexpr int kMaxCanonicalGround = 9;

/// Named constructor plus its parameters, as used by the CLI.
struct FamilySpec {
  std::string name;
  int m = 0;  ///< ground size (n for set families)
  int k = 0;
  int t = 1;
  int r = 0;
  int s = 1;
  int x = 1;                ///< star element
  std::vector<int> anchor;  ///< fixed_multiset core or hit_s set (elements)
};

std::vector<std::string_view> family_names();
Family build_family(const FamilySpec& spec);
/// Empty for families without a closed form (hm_t_*).
std::optional<Count> closed_form_size(const FamilySpec& spec);

}  // namespace msekr

#endif  // MSEKR_FAMILIES_HPP
