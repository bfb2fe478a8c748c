#include "pfister/text.hpp"

#include <cctype>

namespace pfister::text {

void Cursor::skip_ws() {
  while (pos_ < s_.size() &&
         std::isspace(static_cast<unsigned char>(s_[pos_]))) {
    ++pos_;
  }
}

bool Cursor::at_end() {
  skip_ws();
  return pos_ >= s_.size();
}

char Cursor::peek() {
  skip_ws();
  return pos_ < s_.size() ? s_[pos_] : '\0';
}

bool Cursor::accept(std::string_view literal) {
  skip_ws();
  if (s_.substr(pos_, literal.size()) == literal) {
    pos_ += literal.size();
    return true;
  }
  return false;
}

void Cursor::expect(std::string_view literal) {
  if (!accept(literal)) fail("expected '" + std::string(literal) + "'");
}

BigInt Cursor::integer() {
  skip_ws();
  bool negative = false;
  if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
    negative = s_[pos_] == '-';
    ++pos_;
    skip_ws();
  }
  const std::size_t start = pos_;
  while (pos_ < s_.size() &&
         std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
    ++pos_;
  }
  if (start == pos_) fail("expected an integer");
  BigInt v(std::string(s_.substr(start, pos_ - start)));
  return negative ? BigInt(-v) : v;
}

Rational Cursor::rational() {
  BigInt num = integer();
  skip_ws();
  if (pos_ < s_.size() && s_[pos_] == '/') {
    ++pos_;
    const std::size_t at = pos_;
    BigInt den = integer();
    if (den == 0) throw ParseError("zero denominator", at);
    return Rational(num, den);
  }
  return Rational(num);
}

void Cursor::expect_end() {
  if (!at_end()) fail("unexpected trailing input");
}

void Cursor::fail(const std::string& what) const {
  throw ParseError(what, pos_);
}

}  // namespace pfister::text
