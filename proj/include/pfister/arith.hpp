#pragma once

// Exact integer and rational arithmetic plus the small number-theory kernel
// (primality, modular square roots, factorization) used everywhere else.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pfister {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& v);
// "a" for integers, "a/b" otherwise.
std::string to_string(const Rational& v);

// Floor square root of a nonnegative integer.
BigInt isqrt(const BigInt& v);
bool is_perfect_square(const BigInt& v, BigInt* root = nullptr);
// Rational square test; on success *root is the nonnegative root.
bool is_rational_square(const Rational& v, Rational* root = nullptr);

BigInt gcd(const BigInt& a, const BigInt& b);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);
// Miller-Rabin with a fixed base set; deterministic below 3.3e24.
bool is_probable_prime(const BigInt& n);

// Euler criterion for arbitrary residue a and odd prime p: +1, -1 or 0.
int legendre_u64(std::uint64_t a, std::uint64_t p);
// Square root of a quadratic residue a modulo the odd prime p (Tonelli-Shanks).
std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

// Reduces v modulo m into [0, m).
std::uint64_t mod_u64(const BigInt& v, std::uint64_t m);

// Trial-division bound used by factor(). Values whose cofactor after trial
// division is composite are split with Pollard-Brent; cofactors above
// max_factor_bits() are refused with FactorBoundError.
std::uint64_t trial_division_bound();
void set_trial_division_bound(std::uint64_t bound);
unsigned max_factor_bits();

// Prime -> multiplicity for |n|, n != 0.
std::map<BigInt, unsigned> factor(const BigInt& n);

// Primes up to limit (inclusive).
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace pfister
