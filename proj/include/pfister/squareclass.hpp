#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pfister/arith.hpp"

namespace pfister {

// An element of Q*/(Q*)^2, stored as a sign and the sorted set of primes of
// odd multiplicity. The default value is the class of 1.
class SquareClass {
 public:
  SquareClass() = default;

  // Square-free part of num/den; throws DomainError on zero.
  static SquareClass reduce(const BigInt& num, const BigInt& den = 1);
  static SquareClass reduce(const Rational& q);
  static SquareClass from_int(std::int64_t v) { return reduce(BigInt(v)); }
  // primes must be distinct primes (any order).
  static SquareClass from_primes(int sign, std::vector<std::uint64_t> primes);

  int sign() const { return sign_; }
  const std::vector<std::uint64_t>& primes() const { return primes_; }
  const BigInt& value() const { return value_; }
  bool is_one() const { return sign_ > 0 && primes_.empty(); }
  bool is_negative() const { return sign_ < 0; }
  bool divisible_by(std::uint64_t p) const;

  // The class of value / p^v(value) modulo m, as a residue in [0, m).
  std::uint64_t unit_part_mod(std::uint64_t p, std::uint64_t m) const;
  std::uint64_t mod(std::uint64_t m) const;

  SquareClass operator*(const SquareClass& other) const;
  SquareClass operator-() const;

  std::string str() const { return to_string(value_); }

  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const SquareClass& a,
                                          const SquareClass& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  int sign_ = 1;
  std::vector<std::uint64_t> primes_;
  BigInt value_ = 1;
};

inline SquareClass squarefree_reduce(const BigInt& num, const BigInt& den = 1) {
  return SquareClass::reduce(num, den);
}

// A place of Q.
class Place {
 public:
  enum class Kind { kReal, kTwo, kOdd };

  static Place real() { return Place(Kind::kReal, 0); }
  static Place two() { return Place(Kind::kTwo, 2); }
  // Throws DomainError unless p is an odd prime.
  static Place odd(std::uint64_t p);
  // "inf" | "2" | odd prime.
  static Place parse(std::string_view text);

  Kind kind() const { return kind_; }
  std::uint64_t prime() const { return prime_; }
  std::string str() const;

  friend bool operator==(const Place&, const Place&) = default;
  friend auto operator<=>(const Place& a, const Place& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.prime_ <=> b.prime_;
  }

 private:
  Place(Kind kind, std::uint64_t p) : kind_(kind), prime_(p) {}
  Kind kind_;
  std::uint64_t prime_;
};

// Legendre symbol (a|p); throws DomainError unless p is an odd prime.
int legendre(const SquareClass& a, std::uint64_t p);

// Hilbert symbol (a,b)_v in {+1,-1}.
int hilbert_symbol(const SquareClass& a, const SquareClass& b, const Place& v);

// Square-class test in the completion Q_v.
bool is_local_square(const SquareClass& a, const Place& v);

// {inf, 2} together with the odd primes dividing some entry, sorted.
std::vector<Place> relevant_places(std::span<const SquareClass> classes);

}  // namespace pfister
