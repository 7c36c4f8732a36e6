#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "diskcyc/shift_operator.hpp"
#include "diskcyc/sparse_vector.hpp"

namespace diskcyc::cli {

/// Parse failure with the offending position. Lines and columns are
/// 1-based; column 0 means the whole line.
class FileParseError : public std::runtime_error {
 public:
  FileParseError(std::string origin, int line, int column, const std::string& message);

  const std::string& origin() const { return origin_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::string origin_;
  int line_ = 0;
  int column_ = 0;
};

/**
 * Weight file grammar (line-oriented, "#" starts a comment):
 *
 *   kind: bilateral-forward | bilateral-backward |
 *         unilateral-backward | unilateral-forward | scalar
 *   lambda: <re> [<im>]            (scalar only)
 *   neg-tail: <re> [<im>]          (below-table weight; optional for
 *                                   unilateral kinds, defaults to pos-tail)
 *   pos-tail: <re> [<im>]
 *   table: <index>:<re>[,<im>] ... (whitespace-separated, optional)
 */
ShiftOperator parse_weight_text(std::string_view text, const std::string& origin);
ShiftOperator parse_weight_file(const std::string& path);

/// Inverse of parse_weight_text: reparsing the output yields a bit-equal
/// operator. Only single shifts and scalars are representable.
std::string serialize_weight_file(const ShiftOperator& op);

/// Vector file grammar: one "<index>: <re> [<im>]" entry per line.
SparseVector parse_vector_text(std::string_view text, const std::string& origin);
SparseVector parse_vector_file(const std::string& path);

std::string serialize_vector_file(const SparseVector& v);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

const char* kind_name(ShiftOperator::Kind kind);

}  // namespace diskcyc::cli
