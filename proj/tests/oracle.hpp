#ifndef MSEKR_TESTS_ORACLE_HPP
#define MSEKR_TESTS_ORACLE_HPP

// Independent reference implementations used to check the library. Nothing
// here calls into msekr beyond plain data types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using Elems = std::vector<int>;

// Pascal triangle, 64-bit, rows up to n.
inline std::vector<std::vector<std::uint64_t>> pascal(int n) {
  std::vector<std::vector<std::uint64_t>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

inline std::uint64_t choose(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  static const auto table = pascal(66);
  return table[n][k];
}

// Sorted element lists, produced recursively in lex order.
inline void multisets_rec(int m, int k, int lo, Elems& cur,
                          std::vector<Elems>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = lo; x <= m; ++x) {
    cur.push_back(x);
    multisets_rec(m, k, x, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Elems> multisets(int m, int k) {
  std::vector<Elems> out;
  Elems cur;
  multisets_rec(m, k, 1, cur, out);
  return out;
}

inline void subsets_rec(int n, int k, int lo, Elems& cur,
                        std::vector<Elems>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int x = lo; x <= n; ++x) {
    cur.push_back(x);
    subsets_rec(n, k, x + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<Elems> subsets(int n, int k) {
  std::vector<Elems> out;
  Elems cur;
  subsets_rec(n, k, 1, cur, out);
  return out;
}

// Merge of two sorted lists keeping common elements with multiplicity.
inline Elems meet(const Elems& a, const Elems& b) {
  Elems out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out.push_back(a[i]);
      ++i;
      ++j;
    }
  }
  return out;
}

inline Elems distinct(Elems a) {
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

inline int support_meet(const Elems& a, const Elems& b) {
  return static_cast<int>(meet(distinct(a), distinct(b)).size());
}

// Brute-force maximum independent set on at most 40 vertices. adj[v] is the
// neighbour mask of v.
inline int mis(const std::vector<std::uint64_t>& adj) {
  int best = 0;
  std::function<void(std::uint64_t, int)> go = [&](std::uint64_t cand,
                                                    int size) {
    if (size + std::popcount(cand) <= best) return;
    if (cand == 0) {
      best = size;
      return;
    }
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    go(cand & ~bit & ~adj[v], size + 1);
    go(cand & ~bit, size);
  };
  std::uint64_t all =
      adj.size() == 64 ? ~std::uint64_t{0}
                       : (std::uint64_t{1} << adj.size()) - 1;
  go(all, 0);
  return best;
}

template <class Conflict>
std::vector<std::uint64_t> build_adj(const std::vector<Elems>& verts,
                                     Conflict conflict) {
  std::vector<std::uint64_t> adj(verts.size(), 0);
  for (std::size_t u = 0; u < verts.size(); ++u)
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (u != v && conflict(verts[u], verts[v]))
        adj[u] |= std::uint64_t{1} << v;
  return adj;
}

// Largest subset with no s+1 pairwise-conflicting members, by subset scan.
// Only for tiny vertex counts (<= 22).
template <class Conflict>
int max_clique_free_bruteforce(const std::vector<Elems>& verts, int s,
                               Conflict conflict) {
  auto adj = build_adj(verts, conflict);
  int n = static_cast<int>(verts.size());
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size <= best) continue;
    // largest clique inside mask
    int clique = 0;
    std::function<void(std::uint64_t, int)> grow = [&](std::uint64_t cand,
                                                       int c) {
      clique = std::max(clique, c);
      while (cand != 0 && clique <= s) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        grow(cand & adj[v], c + 1);
      }
    };
    grow(mask, 0);
    if (clique <= s) best = size;
  }
  return best;
}

}  // namespace oracle

#endif  // MSEKR_TESTS_ORACLE_HPP
