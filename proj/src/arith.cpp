#include "pfister/arith.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <mutex>

#include "pfister/error.hpp"

namespace pfister {

namespace {

std::atomic<std::uint64_t> g_trial_bound{1u << 20};

constexpr unsigned kMaxFactorBits = 160;
constexpr std::uint64_t kRhoIterationCap = 1u << 22;

struct SieveCache {
  std::mutex mu;
  std::uint64_t limit = 0;
  std::shared_ptr<const std::vector<std::uint64_t>> primes;
};

std::shared_ptr<const std::vector<std::uint64_t>> trial_primes(
    std::uint64_t limit) {
  static SieveCache cache;
  std::lock_guard<std::mutex> lock(cache.mu);
  if (!cache.primes || cache.limit != limit) {
    cache.primes =
        std::make_shared<const std::vector<std::uint64_t>>(primes_up_to(limit));
    cache.limit = limit;
  }
  return cache.primes;
}

unsigned msb_or_zero(const BigInt& v) {
  return v == 0 ? 0 : static_cast<unsigned>(boost::multiprecision::msb(v));
}

bool fits_u64(const BigInt& v) {
  return v >= 0 && msb_or_zero(v) < 64;
}

std::uint64_t to_u64(const BigInt& v) { return v.convert_to<std::uint64_t>(); }

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Pollard-Brent on a composite 64-bit odd n. Returns a nontrivial factor or 0.
std::uint64_t rho_u64(std::uint64_t n) {
  for (std::uint64_t c = 1; c < 64; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    std::uint64_t r = 1;
    std::uint64_t iterations = 0;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    constexpr std::uint64_t kBatch = 128;
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += kBatch;
        iterations += kBatch;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1 && iterations < kRhoIterationCap);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
    if (iterations >= kRhoIterationCap) return 0;
  }
  return 0;
}

BigInt rho_big(const BigInt& n) {
  for (unsigned c = 1; c < 32; ++c) {
    BigInt x = 2, y = 2, d = 1;
    std::uint64_t iterations = 0;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    while (d == 1 && iterations < kRhoIterationCap) {
      x = f(x);
      y = f(f(y));
      d = gcd(x > y ? BigInt(x - y) : BigInt(y - x), n);
      ++iterations;
    }
    if (d != 1 && d != n) return d;
    if (iterations >= kRhoIterationCap) return 0;
  }
  return 0;
}

void split_cofactor(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    ++out[n];
    return;
  }
  if (msb_or_zero(n) >= kMaxFactorBits) {
    throw FactorBoundError("cofactor " + to_string(n) +
                           " exceeds the factorization size limit");
  }
  BigInt d = fits_u64(n) ? BigInt(rho_u64(to_u64(n))) : rho_big(n);
  if (d == 0) {
    throw FactorBoundError("could not split cofactor " + to_string(n));
  }
  split_cofactor(d, out);
  split_cofactor(n / d, out);
}

}  // namespace

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& v) {
  const BigInt num = numerator(v);
  const BigInt den = denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw DomainError("isqrt of a negative integer");
  return boost::multiprecision::sqrt(v);
}

bool is_perfect_square(const BigInt& v, BigInt* root) {
  if (v < 0) return false;
  BigInt r = isqrt(v);
  if (r * r != v) return false;
  if (root) *root = r;
  return true;
}

bool is_rational_square(const Rational& v, Rational* root) {
  BigInt rn, rd;
  if (!is_perfect_square(numerator(v), &rn)) return false;
  if (!is_perfect_square(denominator(v), &rd)) return false;
  if (root) *root = Rational(rn, rd);
  return true;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2,  3,  5,  7,  11, 13,
                                             17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_probable_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  static constexpr unsigned kBases[] = {2,  3,  5,  7,  11, 13, 17,
                                        19, 23, 29, 31, 37, 41};
  for (unsigned p : kBases) {
    if (n % p == 0) return n == p;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : kBases) {
    BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = (x * x) % n;
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int legendre_u64(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  return powmod(a, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::uint64_t sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (legendre_u64(a, p) != 1) {
    throw InternalError("sqrt_mod_prime: non-residue");
  }
  if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
  std::uint64_t q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  std::uint64_t z = 2;
  while (legendre_u64(z, p) != -1) ++z;
  std::uint64_t m = s;
  std::uint64_t c = powmod(z, q, p);
  std::uint64_t t = powmod(a, q, p);
  std::uint64_t r = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return r;
}

std::uint64_t mod_u64(const BigInt& v, std::uint64_t m) {
  BigInt r = v % m;
  if (r < 0) r += m;
  return to_u64(r);
}

std::uint64_t trial_division_bound() { return g_trial_bound.load(); }

void set_trial_division_bound(std::uint64_t bound) {
  if (bound < 3) throw DomainError("trial division bound must be at least 3");
  g_trial_bound.store(bound);
}

unsigned max_factor_bits() { return kMaxFactorBits; }

std::map<BigInt, unsigned> factor(const BigInt& n) {
  if (n == 0) throw DomainError("cannot factor zero");
  BigInt rest = abs(n);
  std::map<BigInt, unsigned> out;
  const std::uint64_t bound = trial_division_bound();
  auto primes = trial_primes(bound);
  std::size_t idx = 0;
  for (; idx < primes->size() && !fits_u64(rest); ++idx) {
    const std::uint64_t p = (*primes)[idx];
    if (BigInt(p) * p > rest) break;
    if (rest % p != 0) continue;
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out[p] += e;
  }
  if (fits_u64(rest)) {
    std::uint64_t r = to_u64(rest);
    for (; idx < primes->size(); ++idx) {
      const std::uint64_t p = (*primes)[idx];
      if (static_cast<unsigned __int128>(p) * p > r) break;
      if (r % p != 0) continue;
      unsigned e = 0;
      while (r % p == 0) {
        r /= p;
        ++e;
      }
      out[p] += e;
    }
    rest = r;
  }
  if (rest == 1) return out;
  if (rest < BigInt(bound) * bound) {
    ++out[rest];
    return out;
  }
  split_cofactor(rest, out);
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace pfister
