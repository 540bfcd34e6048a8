#pragma once

#include "qgrass/dehom.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace qgrass {

enum class RingKind { qm, grass, t };

RingKind parse_ring_kind(std::string_view name);
std::string to_string(RingKind kind);

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Where an expression is evaluated. For qm the shape is (m,n); for grass and
/// t it is the grassmannian (k,n).
struct ParseContext {
  RingKind ring = RingKind::qm;
  int m = 2;
  int n = 2;
  RelationConstants relations{};
};

using ExprValue = std::variant<NCPoly, LocalizedElement, TElement>;

/// Grammar, loosest first:
///   sum     := product (('+' | '-') product)*
///   product := unary (('*' | '/')? unary)*      juxtaposition multiplies
///   unary   := ('+' | '-') unary | power
///   power   := atom ('^' ['-'] integer)?
///   atom    := integer | 'q' | 'x[' i ',' j ']' | '[' a ',' b ... ']' | 'u' | 'y' | '(' sum ')'
/// A Pluecker letter may be written compactly as "[13]" when n <= 9. Division
/// and negative powers need a unit divisor: a scalar, or a scalar times a
/// power of u (grass) or y (t).
ExprValue parse_expr(std::string_view text, const ParseContext& ctx);

std::string render(const ExprValue& v);

}  // namespace qgrass
