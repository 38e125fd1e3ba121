#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scforge/lifting.hpp"

namespace scforge {

// Standard alist text for a sparse binary matrix:
//   line 1: N M (columns, rows)
//   line 2: max column degree, max row degree
//   line 3: per-column degrees; line 4: per-row degrees
//   then one line per column and one per row of 1-indexed neighbors,
//   zero-padded to the maximum degree.
std::string alist_string(const LiftedCode& code);
void export_alist(const LiftedCode& code, const std::string& path);

// Parsed alist: per-column sorted row lists (0-indexed).
struct AlistMatrix {
    std::int64_t rows = 0, cols = 0;
    std::vector<std::vector<std::int32_t>> col_rows;
};
AlistMatrix import_alist(const std::string& path);

// Atomic text write (temp file + rename).
void write_file_atomic(const std::string& path, const std::string& contents);

} // namespace scforge
