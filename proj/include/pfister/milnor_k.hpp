#pragma once

// Mod-2 Milnor K-theory of Q: pure symbols, formal sums, the multiplication
// by a fixed symbol, a complete zero test and tame residues at odd primes.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfister/squareclass.hpp"

namespace pfister {

// A pure symbol {a_1, ..., a_n} whose entries are all different from the class
// of 1. Symbols with an entry equal to 1 are zero and never constructed.
class Symbol {
 public:
  // The empty symbol, i.e. the unit of K_0.
  Symbol() = default;

  static std::optional<Symbol> make(std::vector<SquareClass> entries);
  // Square-free reduces each entry; throws DomainError on a zero entry.
  static std::optional<Symbol> from_rationals(std::span<const Rational> entries);
  static std::optional<Symbol> from_ints(std::initializer_list<std::int64_t> v);

  std::size_t degree() const { return entries_.size(); }
  const std::vector<SquareClass>& entries() const { return entries_; }
  // Concatenation.
  Symbol operator*(const Symbol& other) const;
  std::string str() const;

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol& a, const Symbol& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<SquareClass> entries_;
};

// An element of K^M_n(Q)/2 held as a canonical formal sum of pure symbols:
// terms sorted, no repeats (pairs cancel).
class KElement {
 public:
  static KElement zero(int degree);
  // The unit of K_0(Q)/2 = Z/2.
  static KElement one();
  static KElement from_symbol(const Symbol& s);
  static KElement from_symbol(const std::optional<Symbol>& s, int degree);
  static KElement from_terms(int degree, std::vector<Symbol> terms);

  int degree() const { return degree_; }
  const std::vector<Symbol>& terms() const { return terms_; }
  bool is_formally_zero() const { return terms_.empty(); }
  // "{2,3}+{5,-1}", "0" for the empty sum, "{}" for the unit of K_0.
  std::string str() const;

  friend bool operator==(const KElement&, const KElement&) = default;

 private:
  int degree_ = 0;
  std::vector<Symbol> terms_;
};

KElement symbol_element(std::span<const Rational> entries);

KElement k_add(const KElement& x, const KElement& y);
KElement k_multiply(const KElement& x, const KElement& y);
KElement multiply_by_symbol(const KElement& x, const Symbol& alpha);

// Complete zero test for K^M_n(Q)/2: parity in degree 0, the product class
// in degree 1, Hilbert symbols at every relevant place in degree 2 and the
// real-place count of all-negative symbols in degree >= 3.
bool k_is_zero(const KElement& x);

// {b} * alpha == 0.
bool kernel_member(const SquareClass& b, const Symbol& alpha);

// Class in K_n(F_p)/2. For n >= 2 the group vanishes and forced_zero records
// that the bit was collapsed rather than computed.
struct FiniteFieldKClass {
  std::uint64_t p = 0;
  int degree = 0;
  int bit = 0;
  bool forced_zero = false;

  std::string str() const;
  friend bool operator==(const FiniteFieldKClass&,
                         const FiniteFieldKClass&) = default;
};

// Tame residue at an odd prime p for degree 1..3. Throws UnsupportedError for
// p = 2 and DomainError for other degrees or non-prime p.
FiniteFieldKClass residue_at_p(const KElement& x, std::uint64_t p);

// Grammar: expr := product ('+' product)*, product := atom ('*' atom)*,
// atom := '{' [entry (',' entry)*] '}' | '(' expr ')' | '0'. Entries are
// nonzero integers or fractions.
KElement parse_kelement(std::string_view text);
// A single symbol written as "{a,b,...}" or "(a,b,...)". Nullopt when an entry
// reduces to 1.
std::optional<Symbol> parse_symbol(std::string_view text);

}  // namespace pfister
