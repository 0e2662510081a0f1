#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace sygus {

enum class SortKind { Bool, Int, BitVec, String };

// A SyGuS/SMT-LIB sort.  BitVec carries its width; the rest are atomic.
class Sort {
public:
  Sort() = default;

  static Sort boolean() { return Sort(SortKind::Bool, 0); }
  static Sort integer() { return Sort(SortKind::Int, 0); }
  static Sort bitvec(unsigned width) { return Sort(SortKind::BitVec, width); }
  static Sort string() { return Sort(SortKind::String, 0); }

  SortKind kind() const { return kind_; }
  unsigned width() const { return width_; }

  bool is_bool() const { return kind_ == SortKind::Bool; }
  bool is_int() const { return kind_ == SortKind::Int; }
  bool is_bitvec() const { return kind_ == SortKind::BitVec; }
  bool is_string() const { return kind_ == SortKind::String; }

  bool operator==(const Sort&) const = default;

  // SyGuS v1 spelling: Bool, Int, String, (BitVec 8).
  std::string to_sygus() const;
  // SMT-LIB2 spelling: same but (_ BitVec 8).
  std::string to_smt2() const;

private:
  Sort(SortKind kind, unsigned width) : kind_(kind), width_(width) {}

  SortKind kind_ = SortKind::Bool;
  unsigned width_ = 0;
};

} // namespace sygus

template <> struct std::hash<sygus::Sort> {
  std::size_t operator()(const sygus::Sort& s) const noexcept {
    return std::hash<unsigned>()(static_cast<unsigned>(s.kind()) * 131u + s.width());
  }
};
