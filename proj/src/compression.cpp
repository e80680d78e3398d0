#include "msekr/compression.hpp"

#include <set>

#include "msekr/errors.hpp"

namespace msekr {

Kernel::Kernel(Multiset t) : t_(std::move(t)) {
  for (int c : t_.counts()) {
    if (c < 1) {
      throw contract_error("kernel " + to_string(t_) +
                           " does not contain every element of [m]");
    }
  }
}

Kernel Kernel::trivial(int m, int t) {
  if (t < 1) {
    throw contract_error("kernel multiplicity must be at least 1");
  }
  return Kernel(Multiset(std::vector<int>(static_cast<std::size_t>(m), t)));
}

std::vector<int> Kernel::repeated() const {
  std::vector<int> out;
  for (int e = 1; e <= t_.ground_size(); ++e) {
    if (t_.multiplicity(e) >= 2) {
      out.push_back(e);
    }
  }
  return out;
}

Kernel Kernel::without_copy(int element) const {
  int c = t_.multiplicity(element);
  if (c < 2) {
    throw contract_error("element " + std::to_string(element) +
                         " is not repeated in the kernel");
  }
  return Kernel(t_.with_multiplicity(element, c - 1));
}

void validate(const ShiftParams& p, int m) {
  if (p.i == p.j) {
    throw contract_error("shift needs i != j");
  }
  if (p.s < 2) {
    throw contract_error("shift threshold s must be at least 2");
  }
  if (p.i < 1 || p.i > m || p.j < 1 || p.j > m) {
    throw contract_error("shift elements outside [1,m]");
  }
}

bool is_t_kernel(const Family& family, const Multiset& kernel, int t) {
  if (kernel.ground_size() != family.ground_size()) {
    throw contract_error("kernel and family over different ground sets");
  }
  auto members = family.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      if (intersection_size(intersect(members[a], members[b]), kernel) < t) {
        return false;
      }
    }
  }
  return true;
}

Multiset shift_multiset(const Multiset& a, const ShiftParams& p) {
  validate(p, a.ground_size());
  int copies = a.multiplicity(p.i);
  if (copies < p.s || a.multiplicity(p.j) > 0) {
    return a;
  }
  return a.with_multiplicity(p.i, p.s - 1)
      .with_multiplicity(p.j, copies - p.s + 1);
}

Family shift_family(const Family& family, const ShiftParams& p,
                    const ShiftTrace& trace, int pass) {
  validate(p, family.ground_size());
  // A shifted image always contains j, so it never shifts again; images are
  // distinct because the shift is invertible on members it changes.
  std::set<Multiset> current(family.begin(), family.end());
  for (const Multiset& a : family) {
    Multiset b = shift_multiset(a, p);
    if (b == a || current.contains(b)) {
      continue;
    }
    current.erase(a);
    current.insert(b);
    if (trace) {
      trace(ShiftEvent{pass, p, a, b});
    }
  }
  return Family(family.ground_size(), family.k(), family.kind(),
                std::vector<Multiset>(current.begin(), current.end()));
}

std::pair<Family, Kernel> down_compress_pass(const Family& family,
                                             const Kernel& kernel, int i,
                                             int t, const ShiftTrace& trace,
                                             int pass, bool allow_small_m) {
  int m = family.ground_size();
  int k = family.k();
  if (t < 1 || t > k) {
    throw contract_error("down-compression needs 1 <= t <= k");
  }
  if (m < 2 * k - t && !allow_small_m) {
    throw contract_error("down-compression needs m >= 2k - t (m=" +
                         std::to_string(m) + ", k=" + std::to_string(k) +
                         ", t=" + std::to_string(t) + ")");
  }
  if (kernel.multiset().ground_size() != m) {
    throw contract_error("kernel is not over [m]");
  }
  if (i < 1 || i > m || kernel.multiplicity(i) < 2) {
    throw contract_error("element " + std::to_string(i) +
                         " is not repeated in the kernel");
  }
  if (!is_t_intersecting(family, t)) {
    throw contract_error("family is not " + std::to_string(t) +
                         "-intersecting");
  }
  if (!is_t_kernel(family, kernel.multiset(), t)) {
    throw contract_error("kernel " + to_string(kernel.multiset()) +
                         " is not a t-kernel of the family");
  }

  int s = kernel.multiplicity(i);
  Family out = family;
  for (int j = 1; j <= m; ++j) {
    if (j == i) {
      continue;  // i is present in every member it could shift
    }
    out = shift_family(out, ShiftParams{i, s, j}, trace, pass);
  }
  Kernel next = kernel.without_copy(i);

  if (out.size() != family.size()) {
    throw internal_invariant_error("down-compression changed the family size");
  }
  if (!is_t_intersecting(out, t)) {
    throw internal_invariant_error("down-compression broke t-intersection");
  }
  if (!is_t_kernel(out, next.multiset(), t)) {
    throw internal_invariant_error("reduced kernel " +
                                   to_string(next.multiset()) +
                                   " is not a t-kernel after compression");
  }
  return {std::move(out), std::move(next)};
}

Family down_compress_full(const Family& family, int t,
                          const ShiftTrace& trace, bool allow_small_m) {
  int m = family.ground_size();
  int k = family.k();
  if (t < 1 || t > k) {
    throw contract_error("down-compression needs 1 <= t <= k");
  }
  if (m < 2 * k - t && !allow_small_m) {
    throw contract_error("down-compression needs m >= 2k - t");
  }
  if (!is_t_intersecting(family, t)) {
    throw contract_error("family is not " + std::to_string(t) +
                         "-intersecting");
  }
  Family current = family;
  Kernel kernel = Kernel::trivial(m, t);
  int pass = 0;
  for (auto rep = kernel.repeated(); !rep.empty(); rep = kernel.repeated()) {
    std::tie(current, kernel) =
        down_compress_pass(current, kernel, rep.front(), t, trace, ++pass,
                           allow_small_m);
  }
  if (pass != (t - 1) * m) {
    throw internal_invariant_error("unexpected number of compression passes");
  }
  if (!is_support_t_intersecting(current, t)) {
    throw internal_invariant_error(
        "fully compressed family is not support-t-intersecting");
  }
  return current;
}

}  // namespace msekr
