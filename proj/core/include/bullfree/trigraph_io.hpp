#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "bullfree/trigraph.hpp"

namespace bullfree {

// Plain-text trigraph format:
//
//   # comment
//   n 5
//   0 1 +1        strong edge
//   1 2 0         switchable pair
//   w 3 7         weight of vertex 3
//
// Unlisted pairs are strong antiedges and unlisted weights are 1.

Trigraph parse_trigraph(std::string_view text);
Trigraph read_trigraph(std::istream& in);
Trigraph read_trigraph_file(const std::filesystem::path& path);

/// Writes only the non-default pairs (ascending u, then v) and weights != 1.
void write_trigraph(std::ostream& out, const Trigraph& t);
std::string format_trigraph(const Trigraph& t);
void write_trigraph_file(const std::filesystem::path& path, const Trigraph& t);

}  // namespace bullfree
