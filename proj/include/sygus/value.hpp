#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <variant>

#include "sygus/sort.hpp"

namespace sygus {

using BigInt = boost::multiprecision::cpp_int;

// A ground value of one of the four supported sorts.  Bit-vector values
// keep their width and a non-negative magnitude < 2^width.
class Value {
public:
  Value() : data_(false) {}

  static Value of_bool(bool b) { return Value(b); }
  static Value of_int(BigInt i) { return Value(std::move(i)); }
  static Value of_bitvec(unsigned width, BigInt bits);
  static Value of_string(std::string s) { return Value(std::move(s)); }

  Sort sort() const;

  bool as_bool() const { return std::get<bool>(data_); }
  const BigInt& as_int() const { return std::get<BigInt>(data_); }
  const BigInt& as_bits() const { return std::get<Bv>(data_).bits; }
  unsigned bv_width() const { return std::get<Bv>(data_).width; }
  const std::string& as_string() const { return std::get<std::string>(data_); }

  bool operator==(const Value& other) const { return data_ == other.data_; }
  bool operator<(const Value& other) const { return data_ < other.data_; }

  // Literal syntax: true / 5 / (- 5) / #b0101 / "ab""cd".
  std::string to_text() const;

  std::size_t hash() const;

private:
  struct Bv {
    unsigned width;
    BigInt bits;
    bool operator==(const Bv&) const = default;
    bool operator<(const Bv& o) const {
      return width != o.width ? width < o.width : bits < o.bits;
    }
  };

  explicit Value(bool b) : data_(b) {}
  explicit Value(BigInt i) : data_(std::move(i)) {}
  explicit Value(Bv bv) : data_(std::move(bv)) {}
  explicit Value(std::string s) : data_(std::move(s)) {}

  std::variant<bool, BigInt, Bv, std::string> data_;
};

// Quote a string literal: wrap in double quotes, doubling embedded quotes.
std::string quote_string_literal(const std::string& raw);

} // namespace sygus
