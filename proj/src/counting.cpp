#include "msekr/counting.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace msekr {

namespace {

Count gcd(Count a, Count b) {
  while (b != 0) {
    Count r = a % b;
    a = b;
    b = r;
  }
  return a;
}

}  // namespace

Count checked_add(Count a, Count b) {
  Count out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("counting overflow in addition");
  }
  return out;
}

Count checked_mul(Count a, Count b) {
  Count out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("counting overflow in multiplication");
  }
  return out;
}

Count checked_sub(Count a, Count b) {
  if (b > a) {
    throw std::overflow_error("counting underflow in subtraction");
  }
  return a - b;
}

Count binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) {
    return 0;
  }
  k = std::min(k, n - k);
  // result * (n - k + i) / i is always integral; divide out the common factor
  // first so the intermediate never exceeds the final value by more than i.
  Count result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    Count num = static_cast<Count>(n - k + i);
    Count den = static_cast<Count>(i);
    Count g = gcd(result, den);
    result /= g;
    den /= g;
    num /= den;
    result = checked_mul(result, num);
  }
  return result;
}

Count multichoose(std::int64_t m, std::int64_t k) {
  if (k < 0 || m < 0) {
    return 0;
  }
  if (k == 0) {
    return 1;
  }
  return binomial(m + k - 1, k);
}

std::uint64_t to_u64(Count value) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("count " + to_string(value) +
                              " does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

std::string to_string(Count value) {
  if (value == 0) {
    return "0";
  }
  std::string digits;
  while (value != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string to_string(SignedCount value) {
  if (value < 0) {
    return "-" + to_string(static_cast<Count>(-value));
  }
  return to_string(static_cast<Count>(value));
}

}  // namespace msekr
