#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library beyond BigInt/Rational arithmetic.

#include <cstdint>
#include <vector>

#include "pfister/arith.hpp"

namespace oracle {

// (a,b)_p by searching primitive solutions of z^2 = a x^2 + b y^2 modulo p^k
// that satisfy the Hensel lifting condition. a, b square-free, p <= 13.
int hilbert_hensel(std::int64_t a, std::int64_t b, std::int64_t p);

// (a|p) by listing the squares mod p.
int legendre_brute(std::int64_t a, std::int64_t p);

// Norm of sum c_i theta^i in Q[x]/(f) as the determinant of multiplication.
pfister::Rational norm_by_determinant(const std::vector<pfister::BigInt>& f,
                                      const std::vector<pfister::Rational>& c);

// Smallest-first search for a nonzero integer vector with sum c_i x_i^2 = 0
// and |x_i| <= bound.
bool small_isotropic_vector(const std::vector<std::int64_t>& c, int bound);

// n as a sum of four integer squares.
bool four_squares(std::int64_t n);

// Local isotropy of a ternary form <a,b,c> at p (p = 0 is the real place) via
// the Hensel oracle.
bool ternary_locally_isotropic(std::int64_t a, std::int64_t b, std::int64_t c,
                               std::int64_t p);

std::int64_t squarefree(std::int64_t v);

}  // namespace oracle
