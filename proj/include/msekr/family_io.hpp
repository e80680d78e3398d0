#ifndef MSEKR_FAMILY_IO_HPP
#define MSEKR_FAMILY_IO_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "msekr/family.hpp"

namespace msekr {

// Text format:
//
//   m=<int> k=<int> kind=<set|multiset>
//   <k space-separated elements>        one member per line
//
// Blank lines and lines starting with '#' are ignored. Multiset members are
// written in non-decreasing order, set members strictly increasing.

/// Throws parse_error (with a 1-based line number) on malformed input,
/// out-of-order or out-of-range elements, wrong arity, or duplicate members.
Family parse_family(std::istream& in);
Family parse_family(std::string_view text);
Family read_family_file(const std::string& path);

void write_family(std::ostream& out, const Family& family);
std::string format_family(const Family& family);
void write_family_file(const std::string& path, const Family& family);

}  // namespace msekr

#endif  // MSEKR_FAMILY_IO_HPP
