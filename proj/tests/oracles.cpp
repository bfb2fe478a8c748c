#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace oracle {

namespace {

std::int64_t mod(std::int64_t v, std::int64_t m) {
  std::int64_t r = v % m;
  return r < 0 ? r + m : r;
}

int valuation(std::int64_t v, std::int64_t p, int cap) {
  if (v == 0) return cap;
  int e = 0;
  while (v % p == 0 && e < cap) {
    v /= p;
    ++e;
  }
  return e;
}

}  // namespace

std::int64_t squarefree(std::int64_t v) {
  if (v == 0) throw std::invalid_argument("zero");
  std::int64_t sign = v < 0 ? -1 : 1;
  std::int64_t n = std::llabs(v);
  std::int64_t out = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) out *= p;
  }
  return sign * out * n;
}

int hilbert_hensel(std::int64_t a, std::int64_t b, std::int64_t p) {
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  // Any primitive p-adic solution has a unit coordinate whose partial
  // derivative has valuation e <= 1 (odd p) or <= 2 (p = 2), so solutions
  // modulo p^(2e+1) with that e lift.
  const int k = p == 2 ? 5 : 3;
  std::int64_t pk = 1;
  for (int i = 0; i < k; ++i) pk *= p;
  std::vector<std::vector<std::int64_t>> roots(static_cast<std::size_t>(pk));
  for (std::int64_t z = 0; z < pk; ++z) roots[z * z % pk].push_back(z);
  for (std::int64_t x = 0; x < pk; ++x) {
    for (std::int64_t y = 0; y < pk; ++y) {
      const std::int64_t t = mod(mod(a, pk) * (x * x % pk) % pk +
                                     mod(b, pk) * (y * y % pk) % pk,
                                 pk);
      for (std::int64_t z : roots[static_cast<std::size_t>(t)]) {
        if (x % p == 0 && y % p == 0 && z % p == 0) continue;
        const int ex = valuation(2 * a * x, p, k);
        const int ey = valuation(2 * b * y, p, k);
        const int ez = valuation(2 * z, p, k);
        for (int e : {ex, ey, ez}) {
          if (2 * e + 1 <= k) return 1;
        }
      }
    }
  }
  return -1;
}

int legendre_brute(std::int64_t a, std::int64_t p) {
  const std::int64_t r = mod(a, p);
  if (r == 0) return 0;
  for (std::int64_t x = 1; x < p; ++x) {
    if (x * x % p == r) return 1;
  }
  return -1;
}

pfister::Rational norm_by_determinant(const std::vector<pfister::BigInt>& f,
                                      const std::vector<pfister::Rational>& c) {
  using pfister::Rational;
  const std::size_t m = f.size() - 1;
  // Column j holds the coordinates of alpha * theta^j.
  std::vector<std::vector<Rational>> cols;
  std::vector<Rational> cur(c);
  cur.resize(m, Rational(0));
  for (std::size_t j = 0; j < m; ++j) {
    cols.push_back(cur);
    // Multiply by theta: shift and reduce with theta^m = -sum f_i theta^i.
    std::vector<Rational> next(m, Rational(0));
    const Rational top = cur[m - 1];
    for (std::size_t i = m - 1; i > 0; --i) next[i] = cur[i - 1];
    for (std::size_t i = 0; i < m; ++i) next[i] -= top * Rational(f[i]);
    cur = next;
  }
  // Leibniz expansion over permutations (m <= 4).
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  Rational det = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        if (perm[i] > perm[j]) ++inversions;
      }
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < m; ++i) term *= cols[perm[i]][i];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

bool small_isotropic_vector(const std::vector<std::int64_t>& c, int bound) {
  const std::size_t m = c.size();
  std::vector<std::int64_t> x(m, -bound);
  while (true) {
    bool nonzero = false;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (x[i]) nonzero = true;
      s += c[i] * x[i] * x[i];
    }
    if (nonzero && s == 0) return true;
    std::size_t i = 0;
    while (i < m && x[i] == bound) x[i++] = -bound;
    if (i == m) return false;
    ++x[i];
  }
}

bool four_squares(std::int64_t n) {
  if (n < 0) return false;
  for (std::int64_t a = 0; a * a <= n; ++a)
    for (std::int64_t b = a; a * a + b * b <= n; ++b)
      for (std::int64_t c = b; a * a + b * b + c * c <= n; ++c) {
        const std::int64_t r = n - a * a - b * b - c * c;
        std::int64_t d = 0;
        while (d * d < r) ++d;
        if (d * d == r) return true;
      }
  return false;
}

bool ternary_locally_isotropic(std::int64_t a, std::int64_t b, std::int64_t c,
                               std::int64_t p) {
  // <a,b,c> is similar to <1, ab, ac>, isotropic iff (-ab, -ac)_p = 1.
  return hilbert_hensel(squarefree(-a * b), squarefree(-a * c), p) == 1;
}

}  // namespace oracle
