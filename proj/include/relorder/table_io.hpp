#pragma once

// Cayley-table text format:
//
//   # comment lines start with '#'
//   n
//   n rows of n whitespace-separated encodings in [0, n-1]
//
// Row i, column j holds element_i * element_j; element 0 is the identity.

#include "relorder/errors.hpp"
#include "relorder/group.hpp"
#include "relorder/groups.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace relorder {

inline constexpr std::uint64_t kMaxTableOrder = 4096;

inline CayleyTableGroup read_cayley_table(std::istream& in, std::string name = "table", std::uint64_t seed = 0) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      ++line_no;
      const auto first = out.find_first_not_of(" \t\r");
      if (first == std::string::npos || out[first] == '#') continue;
      return true;
    }
    return false;
  };
  auto parse_ints = [&](const std::string& text) {
    std::vector<Element> values;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
      if (tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 18)
        throw TableError(TableErrorKind::Syntax, "expected a non-negative integer, got '" + tok + "'", line_no);
      values.push_back(std::stoull(tok));
    }
    return values;
  };

  if (!next_content_line(line)) throw TableError(TableErrorKind::Syntax, "missing order line", line_no);
  const auto header = parse_ints(line);
  if (header.size() != 1 || header[0] == 0)
    throw TableError(TableErrorKind::Syntax, "first line must be a single positive integer", line_no);
  const std::uint64_t n = header[0];
  if (n > kMaxTableOrder) throw TableError(TableErrorKind::Syntax, "order exceeds 4096", line_no);

  std::vector<std::vector<Element>> table;
  table.reserve(n);
  while (table.size() < n) {
    if (!next_content_line(line))
      throw TableError(TableErrorKind::NotSquare,
                       "expected " + std::to_string(n) + " rows, found " + std::to_string(table.size()), line_no);
    auto row = parse_ints(line);
    if (row.size() != n)
      throw TableError(TableErrorKind::NotSquare,
                       "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n), line_no);
    for (Element e : row)
      if (e >= n) throw TableError(TableErrorKind::EntryOutOfRange, "entry " + std::to_string(e), line_no);
    table.push_back(std::move(row));
  }
  if (next_content_line(line)) throw TableError(TableErrorKind::NotSquare, "extra rows after the table", line_no);
  return from_cayley_table(table, std::move(name), seed);
}

inline CayleyTableGroup load_cayley_table(const std::string& path, std::uint64_t seed = 0) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  auto slash = path.find_last_of('/');
  return read_cayley_table(in, path.substr(slash == std::string::npos ? 0 : slash + 1), seed);
}

template <FiniteGroup G>
void write_cayley_table(std::ostream& out, const G& g) {
  const auto n = g.order();
  out << "# " << g.name() << "\n" << n << "\n";
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) out << (b ? " " : "") << g.multiply(a, b);
    out << "\n";
  }
}

}  // namespace relorder
