#pragma once

#include <iosfwd>
#include <string>

#include "magma/bit_matrix.hpp"
#include "magma/core.hpp"

namespace magma {

// Text format:
//   # comment lines anywhere before the entries
//   n=<int>
//   identity=<int>          (optional)
//   codomain=<int list>     (optional)
//   n lines of n space-separated integers in [0, n)
// Out-of-range or malformed input raises ParseError with 1-based line/column.
MagmaTable parse_table(std::istream& in, const std::string& filename = "<input>");
MagmaTable parse_table_string(const std::string& text, const std::string& filename = "<input>");
MagmaTable load_table(const std::string& path);

std::string format_table(const MagmaTable& table, const std::string& comment = "");

// Same layout with 0/1 entries and no identity/codomain lines.
BitMatrix parse_bit_matrix(std::istream& in, const std::string& filename = "<input>");
BitMatrix parse_bit_matrix_string(const std::string& text, const std::string& filename = "<input>");
BitMatrix load_bit_matrix(const std::string& path);

std::string format_bit_matrix(const BitMatrix& m, const std::string& comment = "");

}  // namespace magma
