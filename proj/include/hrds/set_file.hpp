#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hrds/hermitian.hpp"

namespace hrds {

/// Text format, one record per line:
///
///   HRDS 1
///   p=<int> e=<int> n=<int> k=<int>
///   mod=<c0>,<c1>,...,<c_2e>        (modulus of F_{q^2}, constant term first)
///   <n^2 wire indices, row-major, single spaces>   (one line per matrix)
std::string serialize_set(const RankSet& u);
void write_set(std::ostream& os, const RankSet& u);

/// Throws ParseError on a malformed header, an element index >= q^2, a non-hermitian
/// or repeated matrix, or a wrong entry count.
RankSet parse_set(std::string_view text);
/// As parse_set; throws UsageError if the file cannot be read.
RankSet parse_set_file(const std::string& path);

}  // namespace hrds
