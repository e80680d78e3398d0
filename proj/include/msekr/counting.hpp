#ifndef MSEKR_COUNTING_HPP
#define MSEKR_COUNTING_HPP

#include <cstdint>
#include <string>

namespace msekr {

// Counting values such as multichoose(50, 50) exceed 64 bits, so exact
// counts are carried in 128-bit integers with checked arithmetic.
__extension__ typedef unsigned __int128 Count;
__extension__ typedef __int128 SignedCount;

/// Exact binomial coefficient C(n, k). Zero when k < 0, n < 0 or k > n.
/// Throws std::overflow_error if the value does not fit in Count.
Count binomial(std::int64_t n, std::int64_t k);

/// Number of k-multisets over an m-element ground set, C(m + k - 1, k).
Count multichoose(std::int64_t m, std::int64_t k);

Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);
/// a - b; throws std::overflow_error when b > a.
Count checked_sub(Count a, Count b);

/// Narrow to 64 bits, throwing std::overflow_error when the value is too big.
std::uint64_t to_u64(Count value);

std::string to_string(Count value);
std::string to_string(SignedCount value);

}  // namespace msekr

#endif  // MSEKR_COUNTING_HPP
