#pragma once

// Readers for form and polynomial expressions and for .kv input documents.

#include <kfin/binary_forms.hpp>
#include <kfin/error.hpp>
#include <kfin/multigraded.hpp>

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace kfin::cli {

/// Syntax error at a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// form := term (('+'|'-') term)*, where a term is an optional rational
/// coefficient, an optional '*', and a product of s and t powers. All terms
/// must share one total degree.
BinaryForm parse_form(std::string_view text, std::size_t line = 1);

/// Sums, products, integer powers and parentheses over rationals and t.
/// Division is allowed by nonzero constants only.
Poly parse_poly_t(std::string_view text, std::size_t line = 1);

/// "(1,0)", "1,0" or "1 0".
Weight parse_weight(std::string_view text, std::size_t line = 1);

/// "a,b" as the point (a:b).
PointP1 parse_point(std::string_view text);

/// A rational, or "inf" for the point at infinity.
Tau parse_tau(std::string_view text);

struct CurveDocument {
  std::size_t ambient_degree = 0;
  std::vector<BinaryForm> basis;
};

struct MultigradedDocument {
  std::size_t rank = 0;
  std::vector<Generator> generators;
};

using InputDocument = std::variant<CurveDocument, MultigradedDocument>;

/// A header line "curve <a>" or "multigraded <m>" followed by one form, or
/// one "poly ; weight" line, per generator. '#' comments run to end of line.
InputDocument parse_document(std::string_view text);

InputDocument read_document(const std::filesystem::path& path);

}  // namespace kfin::cli
