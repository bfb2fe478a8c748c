#pragma once

// Norm quadrics <<a_1,...,a_{n-1}>> + <-a_n>, their rational and quadratic
// points, specialization of K-elements at those points and the generic-point
// isotropy witness over the function field.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pfister/milnor_k.hpp"
#include "pfister/numfield.hpp"
#include "pfister/quadform.hpp"

namespace pfister {

class NormQuadric {
 public:
  // Throws DomainError for degree < 2.
  static NormQuadric build(const Symbol& alpha);

  const Symbol& alpha() const { return alpha_; }
  const DiagonalForm& form() const { return form_; }
  int projective_dimension() const {
    return static_cast<int>(form_.dim()) - 2;
  }

 private:
  Symbol alpha_;
  DiagonalForm form_;
};

// a + b sqrt(d).
struct QuadElement {
  Rational a;
  Rational b;
  friend bool operator==(const QuadElement&, const QuadElement&) = default;
};

struct QuadricPoint {
  // Residue field Q(sqrt d); d = 1 is a rational point.
  SquareClass d;
  std::vector<QuadElement> coords;

  int degree() const { return d.is_one() ? 1 : 2; }
  // "d; (x1, x2, ...)" with coordinates written a+b√d.
  std::string str() const;
};

// Exact substitution into f over Q(sqrt d).
bool lies_on(const DiagonalForm& f, const QuadricPoint& pt);

std::optional<QuadricPoint> rational_point(const NormQuadric& q);

// One point per coordinate pair (i, j), i < j, in lexicographic order.
std::vector<QuadricPoint> pair_points(const NormQuadric& q);
// Points obtained by fixing all but one coordinate to integers of max-norm
// `radius` with support at most two, and solving for the remaining one.
std::vector<QuadricPoint> section_points(const NormQuadric& q, int radius);
// Pair points followed by section points of radius 1..depth.
std::vector<QuadricPoint> quadratic_points(const NormQuadric& q, int depth);

// x restricted to the residue field of pt.
class Specialization {
 public:
  Specialization(KElement x, const QuadricPoint& pt);
  const SquareClass& residue_disc() const { return d_; }
  // Inherits the UnsupportedError of the degree-2 test over Q(sqrt d).
  bool is_zero() const;

 private:
  KElement x_;
  SquareClass d_;
};

Specialization specialize(const KElement& x, const QuadricPoint& pt);

// Sparse polynomial over Q: exponent vector -> coefficient.
using MPoly = std::map<std::vector<int>, Rational>;

struct FunctionFieldWitness {
  // Coordinate set to 1 and coordinate whose square is eliminated.
  int chart = 0;
  int eliminated = 0;
  int num_vars = 0;
  std::vector<SquareClass> pfister_coeffs;
  std::vector<SquareClass> quadric_coeffs;
  // One polynomial per Pfister slot.
  std::vector<MPoly> vector;
  // Dehomogenized quadric equation, relation == 0.
  MPoly relation;

  std::string str() const;
};

FunctionFieldWitness generic_isotropy_witness(const Symbol& alpha);
bool verify(const FunctionFieldWitness& w);

std::string mpoly_str(const MPoly& p);

}  // namespace pfister
