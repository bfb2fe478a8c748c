#pragma once

// Small number fields Q[x]/(f), deg f in {2,3,4}: arithmetic, norms, real
// embeddings, transfers to Q and restriction of K-elements.

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfister/milnor_k.hpp"
#include "pfister/squareclass.hpp"

namespace pfister {

// Dense polynomial with rational coefficients, lowest degree first, no
// trailing zeros (the zero polynomial is empty).
using RatPoly = std::vector<Rational>;

namespace poly {
void trim(RatPoly& p);
int degree(const RatPoly& p);
RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
// a = q*b + r.
void divmod(const RatPoly& a, const RatPoly& b, RatPoly* q, RatPoly* r);
RatPoly mod(const RatPoly& a, const RatPoly& b);
RatPoly derivative(const RatPoly& p);
Rational eval(const RatPoly& p, const Rational& x);
Rational resultant(const RatPoly& a, const RatPoly& b);
// Number of distinct real roots in (lo, hi].
int count_roots(const RatPoly& p, const Rational& lo, const Rational& hi);
}  // namespace poly

class NumberField {
 public:
  // Monic integer polynomial, lowest degree first; degree 2..4 and
  // irreducible over Q, else DomainError.
  static std::shared_ptr<const NumberField> from_polynomial(
      std::vector<BigInt> coeffs);
  // Q(sqrt d) for a square class d != 1.
  static std::shared_ptr<const NumberField> quadratic(const SquareClass& d);
  // "Q(sqrt d)" or "Q[x]/(f)".
  static std::shared_ptr<const NumberField> parse(std::string_view text);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<BigInt>& min_poly() const { return min_poly_; }
  RatPoly min_poly_rational() const;
  int real_embedding_count() const { return static_cast<int>(roots_.size()); }
  // Isolating intervals (lo, hi] of the real roots, ascending.
  const std::vector<std::pair<Rational, Rational>>& real_root_intervals() const {
    return roots_;
  }
  bool is_quadratic() const { return degree() == 2; }
  // Square class d with E = Q(sqrt d); UnsupportedError unless quadratic.
  const SquareClass& quadratic_class() const;
  std::string str() const;

 private:
  NumberField() = default;
  std::vector<BigInt> min_poly_;
  std::vector<std::pair<Rational, Rational>> roots_;
  SquareClass disc_class_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

// Element of a NumberField in the power basis 1, theta, ..., theta^{m-1}.
class FieldElement {
 public:
  FieldElement(FieldPtr field, std::vector<Rational> coords);
  static FieldElement from_rational(FieldPtr field, const Rational& q);
  // Comma separated power-basis coordinates, e.g. "1,1" for 1 + theta.
  static FieldElement parse(FieldPtr field, std::string_view text);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return coords_; }
  bool is_zero() const;
  RatPoly as_poly() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement inverse() const;
  Rational norm() const;
  // Sign of the image under the k-th real embedding (roots ascending).
  int sign_at_embedding(int k) const;
  std::string str() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }

 private:
  FieldPtr field_;
  std::vector<Rational> coords_;
};

bool is_square_in(const NumberField& e, const SquareClass& b);

// {N(e)} in K_1(Q)/2.
KElement transfer_k1(const FieldElement& e);
// Projection formula: tr({e} * res(tail)) = {N(e)} * tail.
KElement transfer_symbol(const FieldElement& e, const KElement& tail);

// A K-element of Q viewed in K_*(E)/2.
class RestrictedElement {
 public:
  RestrictedElement(KElement x, FieldPtr field)
      : x_(std::move(x)), field_(std::move(field)) {}
  const KElement& element() const { return x_; }
  const FieldPtr& field() const { return field_; }
  // Degree 0 by parity, degree 1 for quadratic E, degree >= 3 through the
  // real embeddings. Degree 2 raises UnsupportedError.
  bool is_zero() const;

 private:
  KElement x_;
  FieldPtr field_;
};

RestrictedElement restrict_to(const KElement& x, FieldPtr field);

struct SimpleQuotient {
  FieldElement v1;
  FieldElement v2;
  // Coordinates of v1, v2 in the given spanning list.
  std::vector<Rational> v1_in_span;
  std::vector<Rational> v2_in_span;
};

// Writes x = v1 / v2 with v1, v2 in span(span_basis), which must be linearly
// independent with 2 * |span_basis| > [E:Q].
SimpleQuotient simple_quotient_solve(const FieldPtr& field,
                                  std::span<const FieldElement> span_basis,
                                  const FieldElement& x);

namespace linalg {
using Matrix = std::vector<std::vector<Rational>>;
// Basis of the right null space of a (rows x cols).
std::vector<std::vector<Rational>> null_space(Matrix a, std::size_t cols);
std::size_t rank(Matrix a);
Rational determinant(Matrix a);
}  // namespace linalg

}  // namespace pfister
