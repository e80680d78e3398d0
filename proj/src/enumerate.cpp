#include "msekr/enumerate.hpp"

#include <stdexcept>

#include "msekr/counting.hpp"
#include "msekr/errors.hpp"

namespace msekr {

namespace {

// Lexicographic rank of a strictly increasing combination of [n].
std::uint64_t combination_rank(int n, std::span<const int> combo) {
  int k = static_cast<int>(combo.size());
  Count r = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < combo[static_cast<std::size_t>(i)]; ++v) {
      r = checked_add(r, binomial(n - v, k - i - 1));
    }
    prev = combo[static_cast<std::size_t>(i)];
  }
  return to_u64(r);
}

std::vector<int> combination_unrank(int n, int k, std::uint64_t r) {
  Count total = binomial(n, k);
  if (static_cast<Count>(r) >= total) {
    throw std::out_of_range("rank " + std::to_string(r) + " outside [0," +
                            to_string(total) + ")");
  }
  std::vector<int> combo;
  combo.reserve(static_cast<std::size_t>(k));
  Count rest = r;
  int v = 1;
  for (int i = 0; i < k; ++i) {
    for (;; ++v) {
      Count block = binomial(n - v, k - i - 1);
      if (rest < block) {
        break;
      }
      rest -= block;
    }
    combo.push_back(v);
    ++v;
  }
  return combo;
}

}  // namespace

std::vector<Multiset> enumerate_k_multisets(int m, int k) {
  if (m < 1 || k < 0) {
    throw contract_error("enumerate_k_multisets needs m >= 1 and k >= 0");
  }
  std::vector<Multiset> out;
  out.reserve(static_cast<std::size_t>(to_u64(multichoose(m, k))));
  std::vector<int> elems(static_cast<std::size_t>(k), 1);
  for (;;) {
    out.push_back(Multiset::from_elements(m, elems));
    int i = k - 1;
    while (i >= 0 && elems[static_cast<std::size_t>(i)] == m) {
      --i;
    }
    if (i < 0) {
      break;
    }
    int next = elems[static_cast<std::size_t>(i)] + 1;
    for (int j = i; j < k; ++j) {
      elems[static_cast<std::size_t>(j)] = next;
    }
  }
  return out;
}

std::vector<KSet> enumerate_k_subsets(int n, int k) {
  if (n < 0 || k < 0) {
    throw contract_error("enumerate_k_subsets needs n, k >= 0");
  }
  std::vector<KSet> out;
  if (k > n) {
    return out;
  }
  out.reserve(static_cast<std::size_t>(to_u64(binomial(n, k))));
  std::vector<int> combo(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    combo[static_cast<std::size_t>(i)] = i + 1;
  }
  for (;;) {
    out.emplace_back(n, combo);
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i + 1) {
      --i;
    }
    if (i < 0) {
      break;
    }
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      combo[static_cast<std::size_t>(j)] =
          combo[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

Family multiset_universe(int m, int k) {
  return Family(m, k, FamilyKind::multiset, enumerate_k_multisets(m, k));
}

Family set_universe(int n, int k) {
  auto sets = enumerate_k_subsets(n, k);
  return Family::of_sets(n, k, sets);
}

std::uint64_t rank(const Multiset& a) {
  // Stars and bars: a_1 <= ... <= a_k maps to the strictly increasing
  // a_i + i - 1 in [m + k - 1], which preserves lexicographic order.
  std::vector<int> shifted = a.elements();
  for (std::size_t i = 0; i < shifted.size(); ++i) {
    shifted[i] += static_cast<int>(i);
  }
  return combination_rank(a.ground_size() + a.cardinality() - 1, shifted);
}

std::uint64_t rank(const KSet& s) {
  return combination_rank(s.ground_size(), s.members());
}

Multiset unrank_multiset(int m, int k, std::uint64_t r) {
  if (m < 1 || k < 0) {
    throw contract_error("unrank_multiset needs m >= 1 and k >= 0");
  }
  std::vector<int> combo = combination_unrank(m + k - 1, k, r);
  for (std::size_t i = 0; i < combo.size(); ++i) {
    combo[i] -= static_cast<int>(i);
  }
  return Multiset::from_elements(m, combo);
}

KSet unrank_kset(int n, int k, std::uint64_t r) {
  if (n < 0 || k < 0) {
    throw contract_error("unrank_kset needs n, k >= 0");
  }
  return KSet(n, combination_unrank(n, k, r));
}

}  // namespace msekr
