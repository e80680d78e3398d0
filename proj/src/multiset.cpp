#include "msekr/multiset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "msekr/errors.hpp"

namespace msekr {

namespace {

void require_same_ground(const Multiset& a, const Multiset& b) {
  if (a.ground_size() != b.ground_size()) {
    throw contract_error("multisets over different ground sets (" +
                         std::to_string(a.ground_size()) + " vs " +
                         std::to_string(b.ground_size()) + ")");
  }
}

}  // namespace

Multiset::Multiset(int ground_size) {
  if (ground_size < 0) {
    throw contract_error("negative ground size");
  }
  counts_.assign(static_cast<std::size_t>(ground_size), 0);
}

Multiset::Multiset(std::vector<int> counts) : counts_(std::move(counts)) {
  for (int c : counts_) {
    if (c < 0) {
      throw contract_error("negative multiplicity");
    }
    cardinality_ += c;
  }
}

Multiset Multiset::from_elements(int ground_size,
                                 std::span<const int> elements) {
  std::vector<int> counts(static_cast<std::size_t>(std::max(ground_size, 0)),
                          0);
  for (int e : elements) {
    if (e < 1 || e > ground_size) {
      throw std::out_of_range("element " + std::to_string(e) +
                              " outside [1," + std::to_string(ground_size) +
                              "]");
    }
    ++counts[static_cast<std::size_t>(e - 1)];
  }
  return Multiset(std::move(counts));
}

Multiset Multiset::from_elements(int ground_size,
                                 std::initializer_list<int> elements) {
  return from_elements(ground_size,
                       std::span<const int>(elements.begin(), elements.size()));
}

Multiset Multiset::full(int ground_size) {
  return Multiset(std::vector<int>(static_cast<std::size_t>(ground_size), 1));
}

int Multiset::multiplicity(int element) const {
  if (element < 1 || element > ground_size()) {
    throw std::out_of_range("element " + std::to_string(element) +
                            " outside [1," + std::to_string(ground_size()) +
                            "]");
  }
  return counts_[static_cast<std::size_t>(element - 1)];
}

std::vector<int> Multiset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(cardinality_));
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out.insert(out.end(), static_cast<std::size_t>(counts_[i]),
               static_cast<int>(i) + 1);
  }
  return out;
}

int Multiset::support_size() const noexcept {
  return static_cast<int>(
      std::count_if(counts_.begin(), counts_.end(), [](int c) { return c > 0; }));
}

bool Multiset::contains_element(int element) const {
  return multiplicity(element) > 0;
}

bool Multiset::contains(const Multiset& sub) const {
  require_same_ground(*this, sub);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (sub.counts_[i] > counts_[i]) {
      return false;
    }
  }
  return true;
}

Multiset Multiset::with_multiplicity(int element, int multiplicity) const {
  if (element < 1 || element > ground_size()) {
    throw std::out_of_range("element " + std::to_string(element) +
                            " outside ground set");
  }
  std::vector<int> counts = counts_;
  counts[static_cast<std::size_t>(element - 1)] = multiplicity;
  return Multiset(std::move(counts));
}

std::strong_ordering operator<=>(const Multiset& a,
                                 const Multiset& b) noexcept {
  // Lexicographic on sorted element lists: walk both multiplicity vectors
  // together; the first element where they differ decides, the larger count
  // meaning the smaller element list.
  std::size_t n = std::min(a.counts_.size(), b.counts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.counts_[i] != b.counts_[i]) {
      // Fewer copies of i + 1 means a later, larger element comes next,
      // unless the shorter list simply ends there.
      bool a_more = a.counts_[i] > b.counts_[i];
      const Multiset& fewer = a_more ? b : a;
      int rest = 0;
      for (std::size_t j = i + 1; j < fewer.counts_.size(); ++j) {
        rest += fewer.counts_[j];
      }
      bool fewer_is_prefix = rest == 0;
      bool a_less = fewer_is_prefix ? !a_more : a_more;
      return a_less ? std::strong_ordering::less
                    : std::strong_ordering::greater;
    }
  }
  return a.counts_.size() <=> b.counts_.size();
}

KSet::KSet(int ground_size, std::vector<int> members)
    : ground_size_(ground_size), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    int e = members_[i];
    if (e < 1 || e > ground_size_) {
      throw contract_error("set member " + std::to_string(e) + " outside [1," +
                           std::to_string(ground_size_) + "]");
    }
    if (i > 0 && members_[i - 1] == e) {
      throw contract_error("repeated set member " + std::to_string(e));
    }
  }
}

KSet::KSet(int ground_size, std::initializer_list<int> members)
    : KSet(ground_size, std::vector<int>(members)) {}

bool KSet::contains(int element) const {
  return std::binary_search(members_.begin(), members_.end(), element);
}

Multiset KSet::to_multiset() const {
  std::vector<int> counts(static_cast<std::size_t>(ground_size_), 0);
  for (int e : members_) {
    counts[static_cast<std::size_t>(e - 1)] = 1;
  }
  return Multiset(std::move(counts));
}

KSet KSet::from_multiset(const Multiset& indicator) {
  std::vector<int> members;
  auto counts = indicator.counts();
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 1) {
      throw contract_error("multiset " + to_string(indicator) +
                           " is not a set");
    }
    if (counts[i] == 1) {
      members.push_back(static_cast<int>(i) + 1);
    }
  }
  return KSet(indicator.ground_size(), std::move(members));
}

std::strong_ordering operator<=>(const KSet& a, const KSet& b) noexcept {
  auto c = std::lexicographical_compare_three_way(
      a.members_.begin(), a.members_.end(), b.members_.begin(),
      b.members_.end());
  if (c != 0) {
    return c;
  }
  return a.ground_size_ <=> b.ground_size_;
}

Multiset intersect(const Multiset& a, const Multiset& b) {
  require_same_ground(a, b);
  std::vector<int> counts(a.counts().size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    counts[i] = std::min(a.counts()[i], b.counts()[i]);
  }
  return Multiset(std::move(counts));
}

int intersection_size(const Multiset& a, const Multiset& b) {
  require_same_ground(a, b);
  int total = 0;
  for (std::size_t i = 0; i < a.counts().size(); ++i) {
    total += std::min(a.counts()[i], b.counts()[i]);
  }
  return total;
}

int support_overlap(const Multiset& a, const Multiset& b) {
  require_same_ground(a, b);
  int total = 0;
  for (std::size_t i = 0; i < a.counts().size(); ++i) {
    total += (a.counts()[i] > 0 && b.counts()[i] > 0) ? 1 : 0;
  }
  return total;
}

KSet support(const Multiset& a) {
  std::vector<int> members;
  for (std::size_t i = 0; i < a.counts().size(); ++i) {
    if (a.counts()[i] > 0) {
      members.push_back(static_cast<int>(i) + 1);
    }
  }
  return KSet(a.ground_size(), std::move(members));
}

KSet set_intersection(const KSet& a, const KSet& b) {
  if (a.ground_size() != b.ground_size()) {
    throw contract_error("sets over different ground sets");
  }
  std::vector<int> out;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return KSet(a.ground_size(), std::move(out));
}

Multiset sum(const Multiset& a, const Multiset& b) {
  require_same_ground(a, b);
  std::vector<int> counts(a.counts().size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    counts[i] = a.counts()[i] + b.counts()[i];
  }
  return Multiset(std::move(counts));
}

std::string to_string(const Multiset& a) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int e : a.elements()) {
    if (!first) {
      os << ',';
    }
    os << e;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string to_string(const KSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.members().size(); ++i) {
    if (i > 0) {
      os << ',';
    }
    os << s.members()[i];
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Multiset& a) {
  return os << to_string(a);
}

std::ostream& operator<<(std::ostream& os, const KSet& s) {
  return os << to_string(s);
}

}  // namespace msekr
