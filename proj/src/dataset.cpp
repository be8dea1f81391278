#include "gruss/dataset.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "gruss/errors.hpp"

namespace gruss {

namespace {

bool parse_double(std::string_view token, double& out) {
  if (!token.empty() && token.front() == '+') {
    token.remove_prefix(1);
    if (!token.empty() && (token.front() == '+' || token.front() == '-')) return false;
  }
  if (token.empty()) return false;
  const char* begin = token.data();
  const char* end = begin + token.size();
  const auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end;
}

std::string strip(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  if (line.find(',') != std::string::npos) {
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(strip(std::string_view(line).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  } else {
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) cells.push_back(tok);
  }
  return cells;
}

}  // namespace

Scalar parse_scalar(std::string_view cell, Field field) {
  std::string t;
  t.reserve(cell.size());
  for (char c : cell)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw InputError("empty cell");

  double re = 0.0;
  double im = 0.0;
  if (t.back() == 'i' || t.back() == 'I') {
    // split at the sign of the imaginary part: not the leading sign and not
    // an exponent sign
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size() - 1; k > 0; --k) {
      const char c = t[k];
      if ((c == '+' || c == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    const std::string_view whole(t);
    std::string_view imag_tok;
    if (split == std::string::npos) {
      imag_tok = whole.substr(0, t.size() - 1);
    } else {
      if (!parse_double(whole.substr(0, split), re))
        throw InputError("bad numeric cell '" + std::string(cell) + "'");
      imag_tok = whole.substr(split, t.size() - 1 - split);
    }
    if (imag_tok.empty() || imag_tok == "+")
      im = 1.0;
    else if (imag_tok == "-")
      im = -1.0;
    else if (!parse_double(imag_tok, im))
      throw InputError("bad numeric cell '" + std::string(cell) + "'");
  } else {
    if (!parse_double(t, re))
      throw InputError("bad numeric cell '" + std::string(cell) + "'");
  }

  if (!std::isfinite(re) || !std::isfinite(im))
    throw InputError("non-finite value '" + std::string(cell) + "'");
  if (field == Field::real && im != 0.0)
    throw InputError("complex value '" + std::string(cell) + "' in real mode");
  return Scalar(re, im);
}

Dataset ingest_stream(std::istream& in, Field field, bool complex_pairs) {
  if (complex_pairs && field != Field::complex)
    throw InputError("paired columns require complex mode");
  const Field cell_field = complex_pairs ? Field::real : field;

  Dataset ds;
  std::vector<std::vector<Scalar>> cols;
  std::string line;
  std::size_t lineno = 0;
  bool saw_data = false;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string trimmed = strip(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const std::vector<std::string> cells = split_cells(trimmed);
    if (!saw_data) {
      // only the very first content row may be a header
      std::vector<Scalar> row;
      row.reserve(cells.size());
      bool numeric = true;
      std::size_t bad_col = 0;
      std::string bad_msg;
      for (std::size_t j = 0; j < cells.size(); ++j) {
        try {
          row.push_back(parse_scalar(cells[j], cell_field));
        } catch (const InputError& err) {
          numeric = false;
          bad_col = j + 1;
          bad_msg = err.what();
          break;
        }
      }
      if (!numeric) {
        if (!header_allowed) throw InputError(bad_msg, lineno, bad_col);
        ds.column_names = cells;
        header_allowed = false;
        continue;
      }
      saw_data = true;
      cols.resize(row.size());
      for (std::size_t j = 0; j < row.size(); ++j) cols[j].push_back(row[j]);
      continue;
    }
    if (cells.size() != cols.size())
      throw InputError("row has " + std::to_string(cells.size()) +
                           " cells, expected " + std::to_string(cols.size()),
                       lineno, 1);
    for (std::size_t j = 0; j < cells.size(); ++j) {
      try {
        cols[j].push_back(parse_scalar(cells[j], cell_field));
      } catch (const InputError& err) {
        throw InputError(err.what(), lineno, j + 1);
      }
    }
  }
  if (cols.empty()) throw InputError("no data rows");
  if (!ds.column_names.empty() && ds.column_names.size() != cols.size())
    throw InputError("header names " + std::to_string(ds.column_names.size()) +
                     " columns, data has " + std::to_string(cols.size()));

  if (complex_pairs) {
    if (cols.size() % 2 != 0)
      throw InputError("paired columns need an even column count");
    std::vector<std::vector<Scalar>> paired(cols.size() / 2);
    for (std::size_t k = 0; k < paired.size(); ++k) {
      paired[k].reserve(cols[2 * k].size());
      for (std::size_t r = 0; r < cols[2 * k].size(); ++r)
        paired[k].emplace_back(cols[2 * k][r].real(), cols[2 * k + 1][r].real());
    }
    cols = std::move(paired);
    if (!ds.column_names.empty()) {
      std::vector<std::string> names(cols.size());
      for (std::size_t k = 0; k < cols.size(); ++k) names[k] = ds.column_names[2 * k];
      ds.column_names = std::move(names);
    }
  }

  ds.columns = std::move(cols);
  return ds;
}

Dataset ingest(const std::filesystem::path& path, Field field, bool complex_pairs) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path.string() + "'");
  return ingest_stream(in, field, complex_pairs);
}

}  // namespace gruss
