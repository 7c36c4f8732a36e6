#include "diskcyc/cli/weight_file.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace diskcyc::cli {

namespace {

struct Token {
  std::string text;
  int column = 0;  // 1-based position in the line
};

/// Strips "#" comments and splits on whitespace, keeping columns.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t end = line.find('#');
  if (end == std::string_view::npos) end = line.size();
  std::size_t i = 0;
  while (i < end) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < end && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(Token{std::string(line.substr(start, i - start)),
                           static_cast<int>(start) + 1});
  }
  return tokens;
}

double parse_number(const std::string& text, const std::string& origin, int line,
                    int column) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0') {
    throw FileParseError(origin, line, column, "expected a number, got '" + text + "'");
  }
  return value;
}

long parse_index(const std::string& text, const std::string& origin, int line,
                 int column) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const long value = std::strtol(begin, &end, 10);
  if (end == begin || *end != '\0') {
    throw FileParseError(origin, line, column, "expected an integer index, got '" + text + "'");
  }
  return value;
}

/// "<re>" or "<re> <im>" from the remaining tokens of a line.
Complex parse_complex_value(const std::vector<Token>& tokens, std::size_t first,
                            const std::string& origin, int line) {
  if (tokens.size() <= first) {
    throw FileParseError(origin, line, 0, "missing value after '" + tokens[first - 1].text + "'");
  }
  if (tokens.size() > first + 2) {
    throw FileParseError(origin, line, tokens[first + 2].column, "unexpected trailing token");
  }
  const double re = parse_number(tokens[first].text, origin, line, tokens[first].column);
  double im = 0.0;
  if (tokens.size() == first + 2) {
    im = parse_number(tokens[first + 1].text, origin, line, tokens[first + 1].column);
  }
  return Complex{re, im};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) {
    throw FileParseError(path, 0, 0, "cannot open file");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

FileParseError::FileParseError(std::string origin, int line, int column,
                               const std::string& message)
    : std::runtime_error(origin + ":" + std::to_string(line) + ":" +
                         std::to_string(column) + ": " + message),
      origin_(std::move(origin)),
      line_(line),
      column_(column) {}

const char* kind_name(ShiftOperator::Kind kind) {
  switch (kind) {
    case ShiftOperator::Kind::BilateralForward:
      return "bilateral-forward";
    case ShiftOperator::Kind::BilateralBackward:
      return "bilateral-backward";
    case ShiftOperator::Kind::UnilateralForward:
      return "unilateral-forward";
    case ShiftOperator::Kind::UnilateralBackward:
      return "unilateral-backward";
    case ShiftOperator::Kind::Scalar:
      return "scalar";
    case ShiftOperator::Kind::DirectSum:
      return "direct-sum";
  }
  return "?";
}

ShiftOperator parse_weight_text(std::string_view text, const std::string& origin) {
  std::optional<ShiftOperator::Kind> kind;
  std::optional<Complex> lambda;
  std::optional<Complex> neg_tail;
  std::optional<Complex> pos_tail;
  WeightSequence::Table table;
  int kind_line = 0;
  int table_line = 0;

  std::istringstream stream{std::string(text)};
  std::string raw_line;
  int line_number = 0;
  while (std::getline(stream, raw_line)) {
    ++line_number;
    const auto tokens = tokenize(raw_line);
    if (tokens.empty()) continue;
    const std::string& key = tokens[0].text;

    if (key == "kind:") {
      if (tokens.size() != 2) {
        throw FileParseError(origin, line_number, 0, "kind takes exactly one value");
      }
      const std::string& name = tokens[1].text;
      if (name == "bilateral-forward") {
        kind = ShiftOperator::Kind::BilateralForward;
      } else if (name == "bilateral-backward") {
        kind = ShiftOperator::Kind::BilateralBackward;
      } else if (name == "unilateral-backward") {
        kind = ShiftOperator::Kind::UnilateralBackward;
      } else if (name == "unilateral-forward") {
        kind = ShiftOperator::Kind::UnilateralForward;
      } else if (name == "scalar") {
        kind = ShiftOperator::Kind::Scalar;
      } else {
        throw FileParseError(origin, line_number, tokens[1].column,
                             "unknown kind '" + name + "'");
      }
      kind_line = line_number;
    } else if (key == "lambda:") {
      lambda = parse_complex_value(tokens, 1, origin, line_number);
    } else if (key == "neg-tail:") {
      neg_tail = parse_complex_value(tokens, 1, origin, line_number);
      if (*neg_tail == Complex{0.0, 0.0}) {
        throw FileParseError(origin, line_number, tokens[1].column,
                             "neg-tail weight must be nonzero");
      }
    } else if (key == "pos-tail:") {
      pos_tail = parse_complex_value(tokens, 1, origin, line_number);
      if (*pos_tail == Complex{0.0, 0.0}) {
        throw FileParseError(origin, line_number, tokens[1].column,
                             "pos-tail weight must be nonzero");
      }
    } else if (key == "table:") {
      table_line = line_number;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& entry = tokens[i].text;
        const std::size_t colon = entry.find(':');
        if (colon == std::string::npos) {
          throw FileParseError(origin, line_number, tokens[i].column,
                               "table entry needs '<index>:<re>[,<im>]'");
        }
        const long index =
            parse_index(entry.substr(0, colon), origin, line_number, tokens[i].column);
        const std::string value_text = entry.substr(colon + 1);
        const std::size_t comma = value_text.find(',');
        double re = 0.0;
        double im = 0.0;
        if (comma == std::string::npos) {
          re = parse_number(value_text, origin, line_number, tokens[i].column);
        } else {
          re = parse_number(value_text.substr(0, comma), origin, line_number,
                            tokens[i].column);
          im = parse_number(value_text.substr(comma + 1), origin, line_number,
                            tokens[i].column);
        }
        const Complex value{re, im};
        if (value == Complex{0.0, 0.0}) {
          throw FileParseError(origin, line_number, tokens[i].column,
                               "zero weight at index " + std::to_string(index));
        }
        if (!table.emplace(index, value).second) {
          throw FileParseError(origin, line_number, tokens[i].column,
                               "duplicate table index " + std::to_string(index));
        }
      }
    } else {
      throw FileParseError(origin, line_number, tokens[0].column,
                           "unknown directive '" + key + "'");
    }
  }

  if (!kind) throw FileParseError(origin, line_number, 0, "missing 'kind:' line");

  if (kind == ShiftOperator::Kind::Scalar) {
    if (!lambda) throw FileParseError(origin, kind_line, 0, "scalar operator needs 'lambda:'");
    if (neg_tail || pos_tail || !table.empty()) {
      throw FileParseError(origin, kind_line, 0,
                           "scalar operator takes no tail or table lines");
    }
    return ShiftOperator::scalar(*lambda);
  }

  if (lambda) {
    throw FileParseError(origin, kind_line, 0, "'lambda:' is only valid for scalar kind");
  }
  if (!pos_tail) throw FileParseError(origin, kind_line, 0, "missing 'pos-tail:' line");
  const bool unilateral = kind == ShiftOperator::Kind::UnilateralForward ||
                          kind == ShiftOperator::Kind::UnilateralBackward;
  if (!neg_tail) {
    if (!unilateral) throw FileParseError(origin, kind_line, 0, "missing 'neg-tail:' line");
    neg_tail = *pos_tail;
  }

  const Sidedness side = unilateral ? Sidedness::OneSidedNonNegative : Sidedness::TwoSided;
  try {
    WeightSequence weights{*neg_tail, *pos_tail, std::move(table), side};
    switch (*kind) {
      case ShiftOperator::Kind::BilateralForward:
        return ShiftOperator::bilateral_forward(std::move(weights));
      case ShiftOperator::Kind::BilateralBackward:
        return ShiftOperator::bilateral_backward(std::move(weights));
      case ShiftOperator::Kind::UnilateralForward:
        return ShiftOperator::unilateral_forward(std::move(weights));
      default:
        return ShiftOperator::unilateral_backward(std::move(weights));
    }
  } catch (const std::invalid_argument& err) {
    throw FileParseError(origin, table_line ? table_line : kind_line, 0, err.what());
  }
}

ShiftOperator parse_weight_file(const std::string& path) {
  return parse_weight_text(read_file(path), path);
}

std::string format_double(double value) {
  // Shortest representation that round-trips; keeps serialized operators
  // bit-equal after reparsing.
  char buffer[64];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, value);
    if (std::strtod(buffer, nullptr) == value) return buffer;
  }
  return buffer;
}

namespace {

std::string format_complex(Complex value) {
  std::string out = format_double(value.real());
  if (value.imag() != 0.0) {
    out += ' ';
    out += format_double(value.imag());
  }
  return out;
}

}  // namespace

std::string serialize_weight_file(const ShiftOperator& op) {
  if (op.kind() == ShiftOperator::Kind::DirectSum) {
    throw std::invalid_argument("direct sums have no weight-file form");
  }
  std::string out = "kind: ";
  out += kind_name(op.kind());
  out += '\n';
  if (op.kind() == ShiftOperator::Kind::Scalar) {
    out += "lambda: " + format_complex(op.lambda()) + '\n';
    return out;
  }
  const WeightSequence& ws = op.weights();
  out += "neg-tail: " + format_complex(ws.neg_tail()) + '\n';
  out += "pos-tail: " + format_complex(ws.pos_tail()) + '\n';
  if (!ws.table().empty()) {
    out += "table:";
    for (const auto& [index, value] : ws.table()) {
      out += ' ' + std::to_string(index) + ':' + format_double(value.real());
      if (value.imag() != 0.0) out += ',' + format_double(value.imag());
    }
    out += '\n';
  }
  return out;
}

SparseVector parse_vector_text(std::string_view text, const std::string& origin) {
  SparseVector v;
  std::istringstream stream{std::string(text)};
  std::string raw_line;
  int line_number = 0;
  while (std::getline(stream, raw_line)) {
    ++line_number;
    const auto tokens = tokenize(raw_line);
    if (tokens.empty()) continue;
    std::string index_text = tokens[0].text;
    if (index_text.empty() || index_text.back() != ':') {
      throw FileParseError(origin, line_number, tokens[0].column,
                           "vector entry needs '<index>: <re> [<im>]'");
    }
    index_text.pop_back();
    const long index = parse_index(index_text, origin, line_number, tokens[0].column);
    const Complex value = parse_complex_value(tokens, 1, origin, line_number);
    v.set(index, v.at(index) + value);
  }
  return v;
}

SparseVector parse_vector_file(const std::string& path) {
  return parse_vector_text(read_file(path), path);
}

std::string serialize_vector_file(const SparseVector& v) {
  std::string out;
  for (const auto& [index, value] : v.entries()) {
    out += std::to_string(index) + ": " + format_complex(value) + '\n';
  }
  return out;
}

}  // namespace diskcyc::cli
