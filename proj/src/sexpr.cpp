#include "sygus/sexpr.hpp"

#include <cctype>
#include <cstring>

namespace sygus {

std::string SourceSpan::to_text() const {
  if (line == 0) return "<unknown>";
  return std::to_string(line) + ":" + std::to_string(column);
}

ParseError::ParseError(const std::string& message, SourceSpan where)
    : std::runtime_error(where.to_text() + ": " + message), span(where) {}

std::string SExpr::head() const {
  if (kind == Kind::List && !items.empty() && items[0].kind == Kind::Symbol)
    return items[0].text;
  return "";
}

namespace {

bool is_simple_symbol_char(char c) {
  if (std::isalnum(static_cast<unsigned char>(c))) return true;
  return std::strchr("~!@$%^&*_-+=<>.?/", c) != nullptr;
}

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) {}

  SourceSpan here() const { return SourceSpan{line_, col_}; }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  char take() {
    char c = text_[pos_++];
    if (c == '\n') {
      line_++;
      col_ = 1;
    } else {
      col_++;
    }
    return c;
  }

  void skip_trivia() {
    while (!eof()) {
      char c = peek();
      if (c == ';') {
        while (!eof() && peek() != '\n') take();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        take();
      } else {
        return;
      }
    }
  }

private:
  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

SExpr read_one(Lexer& lex);

SExpr read_atom(Lexer& lex) {
  SExpr e;
  e.span = lex.here();
  char c = lex.peek();

  if (c == '"') {
    lex.take();
    e.kind = SExpr::Kind::StringLit;
    for (;;) {
      if (lex.eof()) throw ParseError("unterminated string literal", e.span);
      char d = lex.take();
      if (d == '"') {
        if (!lex.eof() && lex.peek() == '"') {
          lex.take();
          e.text += '"';
          continue;
        }
        break;
      }
      if (d < 0x20 || d > 0x7e)
        throw ParseError("string literals are restricted to printable ASCII", e.span);
      e.text += d;
    }
    return e;
  }

  if (c == '|') {
    lex.take();
    e.kind = SExpr::Kind::Symbol;
    for (;;) {
      if (lex.eof()) throw ParseError("unterminated quoted symbol", e.span);
      char d = lex.take();
      if (d == '|') break;
      if (d == '\\') throw ParseError("backslash not allowed in quoted symbol", e.span);
      if (d == '#')
        throw ParseError("'#' is reserved and not allowed in quoted symbols", e.span);
      e.text += d;
    }
    return e;
  }

  if (c == '#') {
    lex.take();
    if (lex.eof()) throw ParseError("dangling '#'", e.span);
    char radix = lex.take();
    std::string digits;
    if (radix == 'b') {
      while (!lex.eof() && (lex.peek() == '0' || lex.peek() == '1')) digits += lex.take();
      if (digits.empty()) throw ParseError("#b literal needs binary digits", e.span);
      e.kind = SExpr::Kind::BitVecLit;
      e.bv_width = static_cast<unsigned>(digits.size());
      for (char d : digits) e.bv_bits = (e.bv_bits << 1) | (d == '1' ? 1 : 0);
      e.text = "#b" + digits;
      return e;
    }
    if (radix == 'x') {
      while (!lex.eof() && std::isxdigit(static_cast<unsigned char>(lex.peek())))
        digits += lex.take();
      if (digits.empty()) throw ParseError("#x literal needs hex digits", e.span);
      e.kind = SExpr::Kind::BitVecLit;
      e.bv_width = static_cast<unsigned>(digits.size() * 4);
      for (char d : digits) {
        int nibble = std::isdigit(static_cast<unsigned char>(d))
                         ? d - '0'
                         : std::tolower(static_cast<unsigned char>(d)) - 'a' + 10;
        e.bv_bits = (e.bv_bits << 4) | nibble;
      }
      e.text = "#x" + digits;
      return e;
    }
    throw ParseError("unknown literal radix '#" + std::string(1, radix) + "'", e.span);
  }

  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string digits;
    while (!lex.eof() && std::isdigit(static_cast<unsigned char>(lex.peek())))
      digits += lex.take();
    if (!lex.eof() && is_simple_symbol_char(lex.peek()))
      throw ParseError("malformed numeral", e.span);
    e.kind = SExpr::Kind::Numeral;
    e.numeral = BigInt(digits);
    e.text = digits;
    return e;
  }

  if (is_simple_symbol_char(c)) {
    e.kind = SExpr::Kind::Symbol;
    while (!lex.eof() && is_simple_symbol_char(lex.peek())) e.text += lex.take();
    return e;
  }

  throw ParseError("unexpected character '" + std::string(1, c) + "'", e.span);
}

SExpr read_one(Lexer& lex) {
  lex.skip_trivia();
  if (lex.eof()) throw ParseError("unexpected end of input", lex.here());
  if (lex.peek() == '(') {
    SExpr list;
    list.kind = SExpr::Kind::List;
    list.span = lex.here();
    lex.take();
    for (;;) {
      lex.skip_trivia();
      if (lex.eof()) throw ParseError("unbalanced '(' (missing ')')", list.span);
      if (lex.peek() == ')') {
        lex.take();
        return list;
      }
      list.items.push_back(read_one(lex));
    }
  }
  if (lex.peek() == ')') throw ParseError("unbalanced ')'", lex.here());
  return read_atom(lex);
}

} // namespace

std::vector<SExpr> read_sexprs(const std::string& text) {
  Lexer lex(text);
  std::vector<SExpr> out;
  for (;;) {
    lex.skip_trivia();
    if (lex.eof()) return out;
    out.push_back(read_one(lex));
  }
}

std::string sexpr_to_text(const SExpr& e) {
  switch (e.kind) {
    case SExpr::Kind::Symbol:
    case SExpr::Kind::Numeral:
    case SExpr::Kind::BitVecLit:
      return e.text;
    case SExpr::Kind::StringLit:
      return quote_string_literal(e.text);
    case SExpr::Kind::List: {
      std::string out = "(";
      for (std::size_t i = 0; i < e.items.size(); i++) {
        if (i) out += ' ';
        out += sexpr_to_text(e.items[i]);
      }
      out += ')';
      return out;
    }
  }
  return "";
}

} // namespace sygus
