#pragma once

// Minimal cursor for the hand-written grammars (symbols, forms, fields).

#include <string>
#include <string_view>

#include "pfister/arith.hpp"
#include "pfister/error.hpp"

namespace pfister::text {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  void skip_ws();
  bool at_end();
  std::size_t pos() const { return pos_; }
  char peek();
  // Consumes literal if present (after whitespace).
  bool accept(std::string_view literal);
  void expect(std::string_view literal);
  // Signed integer or fraction "a/b".
  Rational rational();
  BigInt integer();
  void expect_end();
  [[noreturn]] void fail(const std::string& what) const;

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace pfister::text
