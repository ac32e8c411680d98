#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace relorder {

/// A computation would exceed a documented size cap.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An element encoding outside [0, n).
class InvalidElement : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

enum class TableErrorKind {
  Syntax,
  NotSquare,
  EntryOutOfRange,
  NotLatin,
  MissingIdentity,
  MissingInverse,
  NotAssociative,
};

inline const char* to_string(TableErrorKind k) {
  switch (k) {
    case TableErrorKind::Syntax: return "syntax error";
    case TableErrorKind::NotSquare: return "table is not square";
    case TableErrorKind::EntryOutOfRange: return "entry out of range";
    case TableErrorKind::NotLatin: return "not a Latin square";
    case TableErrorKind::MissingIdentity: return "element 0 is not the identity";
    case TableErrorKind::MissingInverse: return "element without inverse";
    case TableErrorKind::NotAssociative: return "operation is not associative";
  }
  return "unknown";
}

/// Rejected Cayley table. line() is the 1-based source line, 0 when the
/// failure is not tied to a line.
class TableError : public std::runtime_error {
public:
  TableError(TableErrorKind kind, const std::string& detail, std::size_t line = 0)
      : std::runtime_error(format(kind, detail, line)), kind_(kind), line_(line) {}

  TableErrorKind kind() const { return kind_; }
  std::size_t line() const { return line_; }

private:
  static std::string format(TableErrorKind kind, const std::string& detail, std::size_t line) {
    std::string s = to_string(kind);
    if (line != 0) s = "line " + std::to_string(line) + ": " + s;
    if (!detail.empty()) s += ": " + detail;
    return s;
  }

  TableErrorKind kind_;
  std::size_t line_;
};

}  // namespace relorder
