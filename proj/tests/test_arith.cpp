#include <gtest/gtest.h>

#include "pfister/arith.hpp"
#include "pfister/error.hpp"

using namespace pfister;

TEST(Arith, IsqrtAndSquares) {
  EXPECT_EQ(isqrt(BigInt(0)), 0);
  EXPECT_EQ(isqrt(BigInt(99)), 9);
  EXPECT_EQ(isqrt(BigInt(100)), 10);
  BigInt big = BigInt(1) << 200;
  BigInt r;
  EXPECT_TRUE(is_perfect_square(big, &r));
  EXPECT_EQ(r, BigInt(1) << 100);
  EXPECT_FALSE(is_perfect_square(big + 1));
  EXPECT_FALSE(is_perfect_square(BigInt(-4)));
  Rational q;
  EXPECT_TRUE(is_rational_square(Rational(4, 9), &q));
  EXPECT_EQ(q, Rational(2, 3));
  EXPECT_FALSE(is_rational_square(Rational(2, 9)));
}

TEST(Arith, Primality) {
  EXPECT_FALSE(is_prime_u64(0));
  EXPECT_FALSE(is_prime_u64(1));
  EXPECT_TRUE(is_prime_u64(2));
  EXPECT_TRUE(is_prime_u64(1000003));
  EXPECT_FALSE(is_prime_u64(561));  // Carmichael
  EXPECT_TRUE(is_prime_u64(18446744073709551557ULL));
  EXPECT_TRUE(is_probable_prime(BigInt("170141183460469231731687303715884105727")));
  EXPECT_FALSE(is_probable_prime(BigInt("170141183460469231731687303715884105729")));
}

TEST(Arith, SqrtModPrime) {
  for (std::uint64_t p : {3ULL, 5ULL, 13ULL, 17ULL, 1000003ULL, 998244353ULL}) {
    for (std::uint64_t a = 1; a < std::min<std::uint64_t>(p, 60); ++a) {
      if (legendre_u64(a, p) != 1) continue;
      const std::uint64_t r = sqrt_mod_prime(a, p);
      EXPECT_EQ(mulmod(r, r, p), a % p) << a << " mod " << p;
    }
  }
}

TEST(Arith, FactorSmallAndLarge) {
  auto f = factor(BigInt(360));
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f[2], 3u);
  EXPECT_EQ(f[3], 2u);
  EXPECT_EQ(f[5], 1u);
  // Two primes beyond the trial bound.
  const BigInt p("1000000007"), q("998244353");
  auto g = factor(p * q * q);
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[p], 1u);
  EXPECT_EQ(g[q], 2u);
  EXPECT_THROW(factor(BigInt(0)), DomainError);
}

TEST(Arith, FactorRoundTripsRandomProducts) {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int i = 0; i < 40; ++i) {
    BigInt n = 1;
    for (int k = 0; k < 4; ++k) n *= BigInt(next() % 100000 + 2);
    BigInt back = 1;
    for (const auto& [p, e] : factor(n)) {
      EXPECT_TRUE(is_probable_prime(p));
      for (unsigned j = 0; j < e; ++j) back *= p;
    }
    EXPECT_EQ(back, n);
  }
}

TEST(Arith, FactorRefusesHugeHardCofactor) {
  // Product of two ~100-bit primes: beyond the supported size.
  const BigInt p("1267650600228229401496703205653");
  const BigInt q("1267650600228229401496703205707");
  if (is_probable_prime(p) && is_probable_prime(q)) {
    EXPECT_THROW(factor(p * q), FactorBoundError);
  }
}

TEST(Arith, ToString) {
  EXPECT_EQ(to_string(Rational(3, 1)), "3");
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
}
