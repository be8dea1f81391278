#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "gruss/scalar.hpp"

namespace gruss {

// Column-oriented view of a delimiter-separated file: one function per
// column, one sample point per row.
struct Dataset {
  std::vector<std::string> column_names;  // empty when the file has no header
  std::vector<std::vector<Scalar>> columns;
  std::size_t rows() const { return columns.empty() ? 0 : columns.front().size(); }
};

// Accepts "1.5", "2e-3", "1+2i", "1 - 2i", "i", "-2i". NaN and infinity are
// rejected; real mode rejects any nonzero imaginary part.
Scalar parse_scalar(std::string_view cell, Field field);

// Cells split on commas when the line has any, otherwise on whitespace.
// A non-numeric first row is taken as the header. With complex_pairs the
// columns are read as (re, im) pairs of real cells.
Dataset ingest_stream(std::istream& in, Field field, bool complex_pairs = false);
Dataset ingest(const std::filesystem::path& path, Field field,
               bool complex_pairs = false);

}  // namespace gruss
