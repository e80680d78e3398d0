#ifndef MSEKR_COMPRESSION_HPP
#define MSEKR_COMPRESSION_HPP

#include <functional>
#include <utility>

#include "msekr/family.hpp"
#include "msekr/multiset.hpp"

namespace msekr {

/// A t-kernel candidate that contains every element of [m] at least once.
class Kernel {
 public:
  /// Throws contract_error if some element has multiplicity 0.
  explicit Kernel(Multiset t);

  /// t copies of every element of [m]; a t-kernel of any t-intersecting
  /// family.
  static Kernel trivial(int m, int t);

  const Multiset& multiset() const noexcept { return t_; }
  int multiplicity(int element) const { return t_.multiplicity(element); }
  /// Elements with multiplicity at least 2, ascending.
  std::vector<int> repeated() const;
  /// Copy with one copy of `element` removed. The element must be repeated.
  Kernel without_copy(int element) const;

  friend bool operator==(const Kernel&, const Kernel&) = default;

 private:
  Multiset t_;
};

/// Parameters of one shift: move all but s - 1 copies of i onto j.
struct ShiftParams {
  int i;
  int s;
  int j;
};

/// Throws contract_error unless i != j, s >= 2, and both elements lie in [m].
void validate(const ShiftParams& p, int m);

/// |F1 ∩ F2 ∩ T| >= t for every pair of distinct members.
bool is_t_kernel(const Family& family, const Multiset& kernel, int t);

/// Keeps s - 1 copies of i and moves the rest to j. Unchanged when i has
/// fewer than s copies or j is already present.
Multiset shift_multiset(const Multiset& a, const ShiftParams& p);

/// One record per member actually moved by a shift.
struct ShiftEvent {
  int pass;
  ShiftParams params;
  Multiset before;
  Multiset after;
};
using ShiftTrace = std::function<void(const ShiftEvent&)>;

/// Shifts each member whose image is not already in the family. Members are
/// visited in canonical order against the current state; the size never
/// changes.
Family shift_family(const Family& family, const ShiftParams& p,
                    const ShiftTrace& trace = {}, int pass = 0);

/// Shifts with (i, s, j) for j = 1..m, s = multiplicity of i in the kernel,
/// and returns the compressed family with one copy of i dropped from the
/// kernel.
///
/// Requires m >= 2k - t, a t-intersecting family, a valid t-kernel and i
/// repeated in it (contract_error otherwise). The size, t-intersection and
/// kernel validity of the result are checked; a failure throws
/// internal_invariant_error. `allow_small_m` lifts the m >= 2k - t
/// requirement; the result checks still apply, so a failure there then means
/// the operation does not work for that family rather than a bug.
std::pair<Family, Kernel> down_compress_pass(const Family& family,
                                             const Kernel& kernel, int i,
                                             int t, const ShiftTrace& trace = {},
                                             int pass = 0,
                                             bool allow_small_m = false);

/// Runs passes from the trivial kernel, always on the smallest repeated
/// element, until [m] itself is a kernel: (t - 1) * m passes. The result is
/// support-t-intersecting and has the input's size.
Family down_compress_full(const Family& family, int t,
                          const ShiftTrace& trace = {},
                          bool allow_small_m = false);

}  // namespace msekr

#endif  // MSEKR_COMPRESSION_HPP
