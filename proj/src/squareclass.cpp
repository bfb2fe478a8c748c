#include "pfister/squareclass.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "pfister/error.hpp"

namespace pfister {

namespace {

// (u - 1)/2 mod 2 for odd u given modulo 8.
int eps(std::uint64_t u8) { return (u8 % 4 == 3) ? 1 : 0; }
// (u^2 - 1)/8 mod 2 for odd u given modulo 8.
int omega(std::uint64_t u8) { return (u8 == 3 || u8 == 5) ? 1 : 0; }

}  // namespace

SquareClass SquareClass::reduce(const BigInt& num, const BigInt& den) {
  if (num == 0 || den == 0) {
    throw DomainError("square class of zero is undefined");
  }
  const int sign = ((num < 0) != (den < 0)) ? -1 : 1;
  std::vector<std::uint64_t> primes;
  auto absorb = [&](const BigInt& v) {
    for (const auto& [p, e] : factor(v)) {
      if (e % 2 == 0) continue;
      if (p >= BigInt(std::numeric_limits<std::uint64_t>::max())) {
        throw FactorBoundError("prime factor " + to_string(p) +
                               " does not fit the square-class representation");
      }
      primes.push_back(p.convert_to<std::uint64_t>());
    }
  };
  absorb(num);
  absorb(den);
  std::sort(primes.begin(), primes.end());
  // A prime dividing both numerator and denominator an odd number of times
  // cancels.
  std::vector<std::uint64_t> odd;
  for (std::size_t i = 0; i < primes.size();) {
    std::size_t j = i;
    while (j < primes.size() && primes[j] == primes[i]) ++j;
    if ((j - i) % 2 == 1) odd.push_back(primes[i]);
    i = j;
  }
  return from_primes(sign, std::move(odd));
}

SquareClass SquareClass::reduce(const Rational& q) {
  return reduce(numerator(q), denominator(q));
}

SquareClass SquareClass::from_primes(int sign,
                                     std::vector<std::uint64_t> primes) {
  SquareClass c;
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw DomainError("square class primes must be distinct");
  }
  c.sign_ = sign < 0 ? -1 : 1;
  c.primes_ = std::move(primes);
  c.value_ = c.sign_;
  for (std::uint64_t p : c.primes_) c.value_ *= p;
  return c;
}

bool SquareClass::divisible_by(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

std::uint64_t SquareClass::unit_part_mod(std::uint64_t p,
                                         std::uint64_t m) const {
  std::uint64_t r = 1 % m;
  for (std::uint64_t q : primes_) {
    if (q == p) continue;
    r = mulmod(r, q % m, m);
  }
  if (sign_ < 0) r = (m - r) % m;
  return r;
}

std::uint64_t SquareClass::mod(std::uint64_t m) const {
  return unit_part_mod(0, m);
}

SquareClass SquareClass::operator*(const SquareClass& other) const {
  std::vector<std::uint64_t> primes;
  std::set_symmetric_difference(primes_.begin(), primes_.end(),
                                other.primes_.begin(), other.primes_.end(),
                                std::back_inserter(primes));
  return from_primes(sign_ * other.sign_, std::move(primes));
}

SquareClass SquareClass::operator-() const {
  return from_primes(-sign_, primes_);
}

Place Place::odd(std::uint64_t p) {
  if (p == 2 || !is_prime_u64(p)) {
    throw DomainError(std::to_string(p) + " is not an odd prime");
  }
  return Place(Kind::kOdd, p);
}

Place Place::parse(std::string_view text) {
  if (text == "inf" || text == "oo" || text == "R" || text == "real") {
    return real();
  }
  std::uint64_t p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("expected a place (inf, 2 or an odd prime)", 0);
  }
  if (p == 2) return two();
  return odd(p);
}

std::string Place::str() const {
  switch (kind_) {
    case Kind::kReal:
      return "inf";
    case Kind::kTwo:
      return "2";
    case Kind::kOdd:
      return std::to_string(prime_);
  }
  return "?";
}

int legendre(const SquareClass& a, std::uint64_t p) {
  if (p == 2 || !is_prime_u64(p)) {
    throw DomainError(std::to_string(p) + " is not an odd prime");
  }
  if (a.divisible_by(p)) return 0;
  return legendre_u64(a.unit_part_mod(0, p), p);
}

int hilbert_symbol(const SquareClass& a, const SquareClass& b,
                   const Place& v) {
  switch (v.kind()) {
    case Place::Kind::kReal:
      return (a.is_negative() && b.is_negative()) ? -1 : 1;
    case Place::Kind::kOdd: {
      const std::uint64_t p = v.prime();
      const bool alpha = a.divisible_by(p);
      const bool beta = b.divisible_by(p);
      int r = 1;
      if (alpha && beta && p % 4 == 3) r = -r;
      if (beta) r *= legendre_u64(a.unit_part_mod(p, p), p);
      if (alpha) r *= legendre_u64(b.unit_part_mod(p, p), p);
      return r;
    }
    case Place::Kind::kTwo: {
      const int alpha = a.divisible_by(2) ? 1 : 0;
      const int beta = b.divisible_by(2) ? 1 : 0;
      const std::uint64_t u = a.unit_part_mod(2, 8);
      const std::uint64_t w = b.unit_part_mod(2, 8);
      const int e = eps(u) * eps(w) + alpha * omega(w) + beta * omega(u);
      return (e % 2 == 0) ? 1 : -1;
    }
  }
  return 1;
}

bool is_local_square(const SquareClass& a, const Place& v) {
  switch (v.kind()) {
    case Place::Kind::kReal:
      return !a.is_negative();
    case Place::Kind::kOdd:
      return !a.divisible_by(v.prime()) &&
             legendre_u64(a.unit_part_mod(0, v.prime()), v.prime()) == 1;
    case Place::Kind::kTwo:
      return !a.divisible_by(2) && a.unit_part_mod(0, 8) == 1;
  }
  return false;
}

std::vector<Place> relevant_places(std::span<const SquareClass> classes) {
  if (classes.empty()) {
    throw DomainError("relevant_places needs at least one square class");
  }
  std::set<std::uint64_t> odd;
  for (const auto& c : classes) {
    for (std::uint64_t p : c.primes()) {
      if (p != 2) odd.insert(p);
    }
  }
  std::vector<Place> out{Place::real(), Place::two()};
  for (std::uint64_t p : odd) out.push_back(Place::odd(p));
  return out;
}

}  // namespace pfister
