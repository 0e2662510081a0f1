#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sygus/value.hpp"

namespace sygus {

struct SourceSpan {
  std::size_t line = 0;   // 1-based; 0 = unknown
  std::size_t column = 0;
  std::string to_text() const;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, SourceSpan where);
  SourceSpan span;
};

// One node of the surface syntax: an atom or a parenthesized list.
struct SExpr {
  enum class Kind { Symbol, Numeral, StringLit, BitVecLit, List };

  Kind kind = Kind::List;
  std::string text;            // symbol spelling / raw string value
  BigInt numeral;              // Numeral
  unsigned bv_width = 0;       // BitVecLit
  BigInt bv_bits;              // BitVecLit
  std::vector<SExpr> items;    // List
  SourceSpan span;

  bool is_symbol(const char* s) const { return kind == Kind::Symbol && text == s; }
  bool is_list() const { return kind == Kind::List; }
  std::string head() const;    // first item's symbol text, or "" if none
};

// Reads a whole file of s-expressions.  Handles ; comments, "" string
// doubling, |quoted| symbols, #b/#x literals, and unsigned numerals.
// Negative numbers like -5 lex as symbols, as in SMT-LIB.
std::vector<SExpr> read_sexprs(const std::string& text);

std::string sexpr_to_text(const SExpr& e);

} // namespace sygus
