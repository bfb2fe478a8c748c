#include "pfister/numfield.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "pfister/error.hpp"
#include "pfister/text.hpp"

namespace pfister {

namespace poly {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly add(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  trim(out);
  return out;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

void divmod(const RatPoly& a, const RatPoly& b, RatPoly* q, RatPoly* r) {
  if (b.empty()) throw DomainError("polynomial division by zero");
  RatPoly rem = a;
  trim(rem);
  RatPoly quot;
  const int db = degree(b);
  if (degree(rem) >= db) quot.assign(rem.size() - b.size() + 1, Rational(0));
  while (!rem.empty() && degree(rem) >= db) {
    const int shift = degree(rem) - db;
    const Rational c = rem.back() / b.back();
    quot[shift] = c;
    for (int i = 0; i <= db; ++i) rem[shift + i] -= c * b[i];
    trim(rem);
  }
  trim(quot);
  if (q) *q = std::move(quot);
  if (r) *r = std::move(rem);
}

RatPoly mod(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  divmod(a, b, nullptr, &r);
  return r;
}

RatPoly derivative(const RatPoly& p) {
  RatPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * Rational(i));
  trim(out);
  return out;
}

Rational eval(const RatPoly& p, const Rational& x) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational resultant(const RatPoly& a_in, const RatPoly& b_in) {
  RatPoly a = a_in, b = b_in;
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  Rational scale = 1;
  while (true) {
    const int da = degree(a);
    const int db = degree(b);
    if (db == 0) {
      Rational p = 1;
      for (int i = 0; i < da; ++i) p *= b[0];
      return scale * p;
    }
    if (da == 0) {
      Rational p = 1;
      for (int i = 0; i < db; ++i) p *= a[0];
      return scale * p;
    }
    RatPoly r = mod(a, b);
    if (r.empty()) return 0;
    // Res(A,B) = (-1)^{ab} lc(B)^{a - deg R} Res(B,R).
    if ((da * db) % 2 == 1) scale = -scale;
    for (int i = 0; i < da - degree(r); ++i) scale *= b.back();
    a = std::move(b);
    b = std::move(r);
  }
}

namespace {

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain{p, derivative(p)};
  while (!chain.back().empty()) {
    RatPoly r = mod(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    if (r.empty()) break;
    chain.push_back(std::move(r));
  }
  if (chain.back().empty()) chain.pop_back();
  return chain;
}

int sign_changes(const std::vector<RatPoly>& chain, const Rational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const Rational v = eval(q, x);
    const int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int count_roots(const RatPoly& p, const Rational& lo, const Rational& hi) {
  RatPoly q = p;
  trim(q);
  if (q.size() <= 1) return 0;
  const auto chain = sturm_chain(q);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

}  // namespace poly

namespace {

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> out{1};
  for (const auto& [p, e] : factor(abs(n))) {
    const std::size_t base = out.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt eval_int(const std::vector<BigInt>& f, const BigInt& x) {
  BigInt acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool has_rational_root(const std::vector<BigInt>& f) {
  if (f[0] == 0) return true;
  for (const BigInt& d : divisors(f[0])) {
    if (eval_int(f, d) == 0 || eval_int(f, -d) == 0) return true;
  }
  return false;
}

// Monic quartic x^4 + s x^3 + p2 x^2 + p1 x + c as a product of two monic
// integer quadratics (x^2 + a x + b)(x^2 + (s-a) x + d), b d = c.
bool has_quadratic_factor(const std::vector<BigInt>& f) {
  const BigInt& c = f[0];
  const BigInt& p1 = f[1];
  const BigInt& p2 = f[2];
  const BigInt& s = f[3];
  for (const BigInt& dpos : divisors(c)) {
    for (const BigInt& b : {dpos, BigInt(-dpos)}) {
      const BigInt d = c / b;
      // a^2 - s a + (p2 - b - d) = 0.
      const BigInt disc = s * s - 4 * (p2 - b - d);
      BigInt root;
      if (disc < 0 || !is_perfect_square(disc, &root)) continue;
      for (const BigInt& num : {BigInt(s + root), BigInt(s - root)}) {
        if (num % 2 != 0) continue;
        const BigInt a = num / 2;
        if (a * d + (s - a) * b == p1) return true;
      }
    }
  }
  return false;
}

bool is_irreducible(const std::vector<BigInt>& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 2) {
    return !is_perfect_square(f[1] * f[1] - 4 * f[0]);
  }
  if (has_rational_root(f)) return false;
  if (n == 4 && has_quadratic_factor(f)) return false;
  return true;
}

RatPoly to_rat(const std::vector<BigInt>& f) {
  RatPoly out(f.begin(), f.end());
  return out;
}

void isolate(const RatPoly& f, const Rational& lo, const Rational& hi, int count,
             std::vector<std::pair<Rational, Rational>>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.emplace_back(lo, hi);
    return;
  }
  const Rational mid = (lo + hi) / 2;
  const int left = poly::count_roots(f, lo, mid);
  isolate(f, lo, mid, left, out);
  isolate(f, mid, hi, count - left, out);
}

// Parses an integer polynomial in one variable, e.g. "x^4 - 2*x + 3".
std::vector<BigInt> parse_int_poly(text::Cursor& cur, char var) {
  std::vector<BigInt> coeffs;
  bool first = true;
  while (true) {
    cur.skip_ws();
    int sign = 1;
    if (cur.accept("-")) {
      sign = -1;
    } else if (!cur.accept("+") && !first) {
      break;
    }
    first = false;
    cur.skip_ws();
    BigInt c = 1;
    bool have_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      c = cur.integer();
      have_coeff = true;
      cur.accept("*");
    }
    unsigned power = 0;
    if (cur.peek() == var) {
      cur.accept(std::string(1, var));
      power = 1;
      if (cur.accept("^")) {
        const std::size_t at = cur.pos();
        const BigInt e = cur.integer();
        if (e < 0 || e > 16) throw ParseError("exponent out of range", at);
        power = e.convert_to<unsigned>();
      }
    } else if (!have_coeff) {
      cur.fail("expected a term");
    }
    if (coeffs.size() <= power) coeffs.resize(power + 1, BigInt(0));
    coeffs[power] += sign * c;
  }
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

}  // namespace

std::shared_ptr<const NumberField> NumberField::from_polynomial(
    std::vector<BigInt> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 2 || n > 4) {
    throw DomainError("field degree must be 2, 3 or 4, got " +
                      std::to_string(std::max(n, 0)));
  }
  if (coeffs.back() != 1) throw DomainError("minimal polynomial must be monic");
  if (!is_irreducible(coeffs)) {
    throw DomainError("polynomial is reducible over Q");
  }
  auto field = std::shared_ptr<NumberField>(new NumberField());
  field->min_poly_ = std::move(coeffs);
  const RatPoly f = field->min_poly_rational();
  BigInt bound = 0;
  for (const auto& c : field->min_poly_) bound = std::max(bound, BigInt(abs(c)));
  const Rational b(bound + 1);
  isolate(f, -b, b, poly::count_roots(f, -b, b), field->roots_);
  if (n == 2) {
    const auto& m = field->min_poly_;
    field->disc_class_ = SquareClass::reduce(BigInt(m[1] * m[1] - 4 * m[0]));
  }
  return field;
}

std::shared_ptr<const NumberField> NumberField::quadratic(const SquareClass& d) {
  if (d.is_one()) throw DomainError("Q(sqrt 1) is not a quadratic field");
  return from_polynomial({BigInt(-d.value()), BigInt(0), BigInt(1)});
}

std::shared_ptr<const NumberField> NumberField::parse(std::string_view s) {
  text::Cursor cur(s);
  cur.expect("Q");
  if (cur.accept("(")) {
    if (!cur.accept("sqrt") && !cur.accept("√")) cur.fail("expected sqrt");
    const bool paren = cur.accept("(");
    const std::size_t at = cur.pos();
    const BigInt d = cur.integer();
    if (paren) cur.expect(")");
    cur.expect(")");
    cur.expect_end();
    if (d == 0) throw ParseError("sqrt of zero", at);
    const SquareClass c = SquareClass::reduce(d);
    if (c.is_one()) throw DomainError(to_string(d) + " is a rational square");
    return quadratic(c);
  }
  cur.expect("[");
  cur.skip_ws();
  const char var = cur.peek();
  if (!std::isalpha(static_cast<unsigned char>(var))) cur.fail("expected variable");
  cur.accept(std::string(1, var));
  cur.expect("]");
  cur.expect("/");
  cur.expect("(");
  auto coeffs = parse_int_poly(cur, var);
  cur.expect(")");
  cur.expect_end();
  return from_polynomial(std::move(coeffs));
}

RatPoly NumberField::min_poly_rational() const { return to_rat(min_poly_); }

const SquareClass& NumberField::quadratic_class() const {
  if (!is_quadratic()) {
    throw UnsupportedError("field " + str() + " is not quadratic");
  }
  return disc_class_;
}

std::string NumberField::str() const {
  if (is_quadratic() && min_poly_[1] == 0) {
    return "Q(sqrt " + disc_class_.str() + ")";
  }
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = min_poly_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const BigInt a = abs(c);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0 || a != 1) out += to_string(a);
    if (i > 0 && a != 1) out += "*";
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return "Q[x]/(" + out + ")";
}

FieldElement::FieldElement(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (!field_) throw DomainError("null field");
  const std::size_t m = static_cast<std::size_t>(field_->degree());
  if (coords_.size() > m) {
    RatPoly p = coords_;
    poly::trim(p);
    p = poly::mod(p, field_->min_poly_rational());
    coords_ = std::move(p);
  }
  coords_.resize(m, Rational(0));
}

FieldElement FieldElement::from_rational(FieldPtr field, const Rational& q) {
  return FieldElement(std::move(field), {q});
}

FieldElement FieldElement::parse(FieldPtr field, std::string_view s) {
  text::Cursor cur(s);
  const bool bracket = cur.accept("[") || cur.accept("(");
  std::vector<Rational> coords;
  do {
    coords.push_back(cur.rational());
  } while (cur.accept(","));
  if (bracket && !cur.accept("]")) cur.expect(")");
  cur.expect_end();
  if (coords.size() > static_cast<std::size_t>(field->degree())) {
    throw ParseError("too many coordinates for a degree " +
                         std::to_string(field->degree()) + " field",
                     0);
  }
  return FieldElement(std::move(field), std::move(coords));
}

bool FieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Rational& q) { return q == 0; });
}

RatPoly FieldElement::as_poly() const {
  RatPoly p = coords_;
  poly::trim(p);
  return p;
}

namespace {
void same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field() &&
      a.field()->min_poly() != b.field()->min_poly()) {
    throw DomainError("elements of different fields");
  }
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  same_field(*this, o);
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] + o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  same_field(*this, o);
  std::vector<Rational> c(coords_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = coords_[i] - o.coords_[i];
  return FieldElement(field_, std::move(c));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_field(*this, o);
  RatPoly p = poly::mod(poly::mul(as_poly(), o.as_poly()),
                        field_->min_poly_rational());
  return FieldElement(field_, std::move(p));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("zero has no inverse");
  // Extended Euclid: s*g + t*f = gcd, a nonzero constant since f is
  // irreducible.
  RatPoly r0 = field_->min_poly_rational(), r1 = as_poly();
  RatPoly s0, s1{Rational(1)};
  while (poly::degree(r1) > 0) {
    RatPoly q, r;
    poly::divmod(r0, r1, &q, &r);
    RatPoly s2 = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  const Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return FieldElement(field_, std::move(s1));
}

Rational FieldElement::norm() const {
  return poly::resultant(field_->min_poly_rational(), as_poly());
}

int FieldElement::sign_at_embedding(int k) const {
  const auto& roots = field_->real_root_intervals();
  if (k < 0 || k >= static_cast<int>(roots.size())) {
    throw DomainError("field has no real embedding " + std::to_string(k));
  }
  if (is_zero()) return 0;
  const RatPoly g = as_poly();
  if (g.size() == 1) return g[0] > 0 ? 1 : -1;
  const RatPoly f = field_->min_poly_rational();
  auto [lo, hi] = roots[static_cast<std::size_t>(k)];
  while (poly::count_roots(g, lo, hi) != 0) {
    const Rational mid = (lo + hi) / 2;
    if (poly::count_roots(f, lo, mid) == 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  // g has no root on (lo, hi], which contains the embedded generator.
  return poly::eval(g, hi) > 0 ? 1 : -1;
}

std::string FieldElement::str() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const Rational& c = coords_[i];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    if (i == 0 || a != 1) out += to_string(a);
    if (i > 0 && a != 1) out += "*";
    if (i >= 1) out += "t";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool is_square_in(const NumberField& e, const SquareClass& b) {
  if (b.is_one()) return true;
  if (e.degree() == 3) return false;
  if (!e.is_quadratic()) {
    throw UnsupportedError("square test needs a quadratic or cubic field");
  }
  return b == e.quadratic_class();
}

KElement transfer_k1(const FieldElement& e) {
  if (e.is_zero()) throw DomainError("transfer of zero");
  return KElement::from_symbol(Symbol::make({SquareClass::reduce(e.norm())}),
                               1);
}

KElement transfer_symbol(const FieldElement& e, const KElement& tail) {
  return k_multiply(transfer_k1(e), tail);
}

bool RestrictedElement::is_zero() const {
  const int n = x_.degree();
  if (n == 0) return x_.terms().size() % 2 == 0;
  // Odd degree: restriction is injective since cores o res is multiplication
  // by an odd number.
  if (field_->degree() % 2 == 1) return k_is_zero(x_);
  if (n >= 3) {
    // K_n(E)/2 is detected by the signs at the real embeddings, and the
    // entries are rational so their signs are plain.
    if (field_->real_embedding_count() == 0) return true;
    std::size_t negative = 0;
    for (const auto& t : x_.terms()) {
      if (std::all_of(t.entries().begin(), t.entries().end(),
                      [](const SquareClass& c) { return c.is_negative(); })) {
        ++negative;
      }
    }
    return negative % 2 == 0;
  }
  if (n == 2) {
    throw UnsupportedError("zero test in K_2(E)/2 is not supported");
  }
  if (!field_->is_quadratic()) {
    throw UnsupportedError("K_1 zero test needs a quadratic field");
  }
  SquareClass product;
  for (const auto& t : x_.terms()) product = product * t.entries()[0];
  return is_square_in(*field_, product);
}

RestrictedElement restrict_to(const KElement& x, FieldPtr field) {
  return RestrictedElement(x, std::move(field));
}

namespace linalg {

namespace {
// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}
}  // namespace

std::vector<std::vector<Rational>> null_space(Matrix a, std::size_t cols) {
  const auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(Matrix a) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  return rref(a, cols).size();
}

Rational determinant(Matrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

}  // namespace linalg

SimpleQuotient simple_quotient_solve(const FieldPtr& field,
                                  std::span<const FieldElement> span_basis,
                                  const FieldElement& x) {
  const std::size_t m = static_cast<std::size_t>(field->degree());
  const std::size_t k = span_basis.size();
  if (2 * k <= m) {
    throw DomainError("need 2*dim V > [E:Q], got dim V = " + std::to_string(k) +
                      " for degree " + std::to_string(m));
  }
  linalg::Matrix vm;
  for (const auto& v : span_basis) vm.push_back(v.coords());
  if (linalg::rank(vm) != k) {
    throw DomainError("spanning elements are linearly dependent");
  }
  // Columns: coords(v_i) for c_i, then -coords(x v_i) for c'_i.
  linalg::Matrix a(m, std::vector<Rational>(2 * k));
  for (std::size_t i = 0; i < k; ++i) {
    const FieldElement xv = x * span_basis[i];
    for (std::size_t r = 0; r < m; ++r) {
      a[r][i] = span_basis[i].coords()[r];
      a[r][k + i] = -xv.coords()[r];
    }
  }
  auto ns = linalg::null_space(a, 2 * k);
  if (ns.empty()) throw InternalError("simple_quotient_solve: empty null space");
  std::vector<Rational> sol = ns.front();
  std::size_t lead = k;
  while (lead < 2 * k && sol[lead] == 0) ++lead;
  if (lead == 2 * k) throw InternalError("simple_quotient_solve: zero denominator");
  const Rational norm = sol[lead];
  for (auto& q : sol) q /= norm;

  SimpleQuotient out{FieldElement::from_rational(field, 0),
                     FieldElement::from_rational(field, 0),
                     {sol.begin(), sol.begin() + static_cast<long>(k)},
                     {sol.begin() + static_cast<long>(k), sol.end()}};
  for (std::size_t i = 0; i < k; ++i) {
    out.v1 = out.v1 + FieldElement::from_rational(field, sol[i]) * span_basis[i];
    out.v2 =
        out.v2 + FieldElement::from_rational(field, sol[k + i]) * span_basis[i];
  }
  if (!(out.v1 == x * out.v2)) {
    throw InternalError("simple_quotient_solve: verification failed");
  }
  return out;
}

}  // namespace pfister
