#pragma once

#include "fitshift/group_ring.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fitshift {

/// Resolves a bound name to an element, or nullopt if unknown.
using ElementLookup = std::function<std::optional<RingElement>(const std::string&)>;

/// Recursive-descent parser for ring expressions.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' exponent)?
///   exponent:= integer | m<i>
///   primary := integer | name | N '(' [int (',' int)*] ')' | '(' expr ')'
///
/// Names: d<i> (delta_i), t<i> (T_i), tau<i> / tau_<i> (delta_i - 1),
/// m<i> (the integer m_i), plus whatever the lookup resolves.  Indices are
/// 1-based.  The parser also exposes its cursor so callers can build list
/// and matrix syntax on top of it.
class ExprParser {
 public:
  ExprParser(std::string_view src, RingPtr ring, ElementLookup lookup = {}, std::size_t line = 1,
             std::size_t column_offset = 0);

  RingElement parse_expr();

  void skip_space();
  bool at_end();
  /// Next non-space character, or '\0' at the end.
  char peek();
  bool accept(char c);
  void expect(char c);
  /// Identifier at the cursor without consuming it (empty if none).
  std::string peek_identifier();
  std::string read_identifier();
  long long read_integer();
  std::size_t position() const { return pos_; }
  void set_position(std::size_t p) { pos_ = p; }
  std::string_view rest() const { return src_.substr(pos_); }

  [[noreturn]] void fail(const std::string& what) const;

 private:
  RingElement parse_term();
  RingElement parse_unary();
  RingElement parse_power();
  RingElement parse_primary();
  u64 parse_exponent();
  std::size_t parse_index(const std::string& ident, std::size_t prefix, std::size_t limit, const char* what) const;

  std::string_view src_;
  RingPtr ring_;
  ElementLookup lookup_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t col_offset_;
};

/// Parses a complete expression; trailing input is an error.
RingElement parse_element(std::string_view src, const RingPtr& ring, const ElementLookup& lookup = {});

/// Text in the tau/T basis, terms ordered by total degree, centered
/// coefficients.  parse_element(format_element(x)) == x.
std::string format_element(const RingElement& x);

}  // namespace fitshift
