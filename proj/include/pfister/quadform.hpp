#pragma once

// Diagonal quadratic forms over Q: classifying invariants, Hasse-Minkowski
// isotropy with explicit witnesses, Witt decomposition, Pfister forms and the
// I-adic filtration.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pfister/milnor_k.hpp"
#include "pfister/squareclass.hpp"

namespace pfister {

class DiagonalForm {
 public:
  DiagonalForm() = default;
  explicit DiagonalForm(std::vector<SquareClass> coeffs)
      : coeffs_(std::move(coeffs)) {}
  static DiagonalForm from_ints(std::initializer_list<std::int64_t> coeffs);

  std::size_t dim() const { return coeffs_.size(); }
  const std::vector<SquareClass>& coeffs() const { return coeffs_; }
  const SquareClass& operator[](std::size_t i) const { return coeffs_[i]; }

  BigInt evaluate(std::span<const BigInt> v) const;
  Rational evaluate(std::span<const Rational> v) const;

  // "<1,-2,-3,6>".
  std::string str() const;

  friend bool operator==(const DiagonalForm&, const DiagonalForm&) = default;

 private:
  std::vector<SquareClass> coeffs_;
};

// Accepts "<a,b,...>", "⟨a,b,...⟩", "<<a,b,...>>" (Pfister), a scale prefix
// "t*" on any of these, and orthogonal sums joined by '+'.
DiagonalForm parse_form(std::string_view text);

DiagonalForm orthogonal_sum(const DiagonalForm& f, const DiagonalForm& g);
DiagonalForm scale(const SquareClass& t, const DiagonalForm& f);
DiagonalForm tensor(const DiagonalForm& f, const DiagonalForm& g);

// <<a_1,...,a_n>>: coefficient i is the product of -a_j over the bits j set
// in i.
DiagonalForm pfister(std::span<const SquareClass> entries);
DiagonalForm pfister(const Symbol& alpha);

// k copies of <1,-1>.
DiagonalForm hyperbolic_reference(std::size_t dim);

struct WittInvariants {
  int dim_parity = 0;
  SquareClass signed_disc;
  // Hasse invariant at every relevant place of the coefficients.
  std::map<Place, int> hasse;
  long signature = 0;

  int hasse_at(const Place& v) const;
  std::string str() const;
};

// (-1)^{m(m-1)/2} times the product of the coefficients.
SquareClass signed_discriminant(const DiagonalForm& f);
int hasse_invariant(const DiagonalForm& f, const Place& v);
long signature(const DiagonalForm& f);
WittInvariants invariants(const DiagonalForm& f);

bool is_locally_isotropic(const DiagonalForm& f, const Place& v);

struct Isotropy {
  bool isotropic = false;
  // Nonzero integral vector with f(witness) = 0 when isotropic.
  std::vector<BigInt> witness;
};
Isotropy is_isotropic(const DiagonalForm& f);
// Decision only, no witness.
bool decide_isotropic(const DiagonalForm& f);

struct WittDecomposition {
  int witt_index = 0;
  DiagonalForm kernel;
};
WittDecomposition witt_decompose(const DiagonalForm& f);

bool is_hyperbolic(const DiagonalForm& f);

struct Representation {
  bool represented = false;
  // f(witness) == b.value() exactly when represented.
  std::vector<Rational> witness;
};
Representation represents(const DiagonalForm& f, const SquareClass& b);

bool equivalent(const DiagonalForm& f, const DiagonalForm& g);

// Degree in the I-adic filtration. The zero Witt class has no finite degree
// and is reported as a separate state.
class IDegree {
 public:
  static IDegree hyperbolic() { return IDegree(); }
  static IDegree finite(int n) { return IDegree(n); }

  bool is_hyperbolic() const { return !value_.has_value(); }
  // Throws DomainError for the hyperbolic state.
  int value() const;
  // True when the class lies in I^n.
  bool at_least(int n) const { return !value_ || *value_ >= n; }
  std::string str() const;

  friend bool operator==(const IDegree&, const IDegree&) = default;

 private:
  IDegree() = default;
  explicit IDegree(int n) : value_(n) {}
  std::optional<int> value_;
};

bool in_I_power(const DiagonalForm& f, int n);
IDegree i_degree(const DiagonalForm& f);

// Image of a degree-n element in I^n/I^{n+1}: the sum of the Pfister forms of
// its terms. Only the class modulo I^{n+1} is meaningful.
struct PhiImage {
  int degree = 0;
  DiagonalForm form;
  bool is_zero_mod_next() const { return in_I_power(form, degree + 1); }
};
PhiImage phi(const KElement& x);

namespace detail {
// Nonzero integer solution of Z^2 = a X^2 + b Y^2 for square-free a, b, given
// that one exists. Returns {X, Y, Z}.
std::vector<BigInt> solve_legendre(const SquareClass& a, const SquareClass& b);
}  // namespace detail

}  // namespace pfister
