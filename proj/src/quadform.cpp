#include "pfister/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

#include "pfister/error.hpp"
#include "pfister/text.hpp"

namespace pfister {

namespace {

using Int128 = __int128;

std::vector<Place> places_of(const DiagonalForm& f) {
  std::vector<SquareClass> all = f.coeffs();
  all.emplace_back();
  return relevant_places(all);
}

SquareClass product_class(const DiagonalForm& f) {
  SquareClass d;
  for (const auto& c : f.coeffs()) d = d * c;
  return d;
}

bool fits_small(const SquareClass& c) {
  return abs(c.value()) < (BigInt(1) << 40);
}

bool is_square_i128(Int128 v, Int128* root) {
  if (v < 0) return false;
  auto r = static_cast<Int128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return false;
  *root = r;
  return true;
}

// Vectors with entries in [0, r] and maximum exactly r, lexicographic.
void for_each_shell(std::size_t len, long r,
                    const std::function<bool(const std::vector<long>&)>& fn) {
  std::vector<long> v(len, 0);
  while (true) {
    if (*std::max_element(v.begin(), v.end()) == r) {
      if (fn(v)) return;
    }
    std::size_t i = len;
    while (i > 0) {
      --i;
      if (v[i] < r) {
        ++v[i];
        std::fill(v.begin() + static_cast<long>(i) + 1, v.end(), 0);
        break;
      }
      if (i == 0) return;
    }
    if (len == 0) return;
  }
}

// Small isotropic vector by exhaustive search: the first m-1 coordinates run
// over shells of radius <= bound and the last one is solved for.
std::optional<std::vector<BigInt>> box_search(const DiagonalForm& f,
                                              long bound) {
  const std::size_t m = f.dim();
  if (m < 2) return std::nullopt;
  for (const auto& c : f.coeffs()) {
    if (!fits_small(c)) return std::nullopt;
  }
  std::vector<Int128> c(m);
  for (std::size_t i = 0; i < m; ++i) {
    c[i] = static_cast<Int128>(f[i].value().convert_to<long long>());
  }
  std::optional<std::vector<BigInt>> found;
  for (long r = 1; r <= bound && !found; ++r) {
    for_each_shell(m - 1, r, [&](const std::vector<long>& v) {
      Int128 s = 0;
      for (std::size_t i = 0; i + 1 < m; ++i) s += c[i] * v[i] * v[i];
      Int128 root = 0;
      const Int128 last = c[m - 1];
      if (s == 0) {
        root = 0;
      } else if ((-s) % last != 0 || !is_square_i128(-s / last, &root)) {
        return false;
      }
      std::vector<BigInt> w;
      for (long x : v) w.emplace_back(x);
      w.emplace_back(static_cast<long long>(root));
      found = std::move(w);
      return true;
    });
  }
  return found;
}

std::vector<BigInt> primitive_abs(std::vector<BigInt> v) {
  BigInt g = 0;
  for (auto& x : v) {
    x = abs(x);
    g = gcd(g, x);
  }
  if (g > 1) {
    for (auto& x : v) x /= g;
  }
  return v;
}

BigInt centered(const BigInt& t, const BigInt& m) {
  BigInt r = t % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

std::vector<BigInt> ternary_witness(const SquareClass& c0,
                                    const SquareClass& c1,
                                    const SquareClass& c2) {
  const SquareClass a = (-c0) * c2;
  const SquareClass b = (-c1) * c2;
  const BigInt g1 = gcd(abs(c0.value()), abs(c2.value()));
  const BigInt g2 = gcd(abs(c1.value()), abs(c2.value()));
  auto xyz = detail::solve_legendre(a, b);
  return primitive_abs({xyz[0] * g2 * c2.value(), xyz[1] * g1 * c2.value(),
                        xyz[2] * g1 * g2});
}

std::vector<BigInt> find_witness(const DiagonalForm& f);

// Splits f = <c_i, c_j> + rest: finds t = c_i x^2 + c_j y^2 such that
// rest + <t> is isotropic and glues a witness of the latter.
std::vector<BigInt> split_witness(const DiagonalForm& f) {
  const std::size_t m = f.dim();
  constexpr long kMaxRadius = 256;
  for (long r = 1; r <= kMaxRadius; ++r) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        std::vector<std::size_t> rest;
        for (std::size_t k = 0; k < m; ++k) {
          if (k != i && k != j) rest.push_back(k);
        }
        for (long x = 0; x <= r; ++x) {
          for (long y = 0; y <= r; ++y) {
            if (std::max(x, y) != r || std::gcd(x, y) != 1) continue;
            const BigInt t = f[i].value() * x * x + f[j].value() * y * y;
            std::vector<BigInt> w(m, 0);
            if (t == 0) {
              w[i] = x;
              w[j] = y;
              return primitive_abs(std::move(w));
            }
            const SquareClass tc = SquareClass::reduce(t);
            std::vector<SquareClass> sub;
            for (std::size_t k : rest) sub.push_back(f[k]);
            sub.push_back(tc);
            const DiagonalForm g(sub);
            if (!decide_isotropic(g)) continue;
            const std::vector<BigInt> u = find_witness(g);
            const BigInt& wt = u.back();
            BigInt s;
            if (!is_perfect_square(t / tc.value(), &s)) {
              throw InternalError("square-class bookkeeping failed");
            }
            for (std::size_t k = 0; k < rest.size(); ++k) {
              w[rest[k]] = u[k] * s;
            }
            w[i] = x * wt;
            w[j] = y * wt;
            return primitive_abs(std::move(w));
          }
        }
      }
    }
  }
  throw InternalError("isotropic vector search exhausted for " + f.str());
}

// f is known to be isotropic.
std::vector<BigInt> find_witness(const DiagonalForm& f) {
  const std::size_t m = f.dim();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (f[i] == -f[j]) {
        std::vector<BigInt> w(m, 0);
        w[i] = 1;
        w[j] = 1;
        return w;
      }
    }
  }
  if (m <= 4) {
    if (auto w = box_search(f, m <= 3 ? 16 : 8)) return primitive_abs(*w);
  }
  if (m == 3) return ternary_witness(f[0], f[1], f[2]);
  if (m > 5) {
    // Any indefinite 5-dimensional subform is isotropic.
    std::vector<std::size_t> pick;
    auto pos = std::find_if(f.coeffs().begin(), f.coeffs().end(),
                            [](const SquareClass& c) { return !c.is_negative(); });
    auto neg = std::find_if(f.coeffs().begin(), f.coeffs().end(),
                            [](const SquareClass& c) { return c.is_negative(); });
    pick.push_back(static_cast<std::size_t>(pos - f.coeffs().begin()));
    pick.push_back(static_cast<std::size_t>(neg - f.coeffs().begin()));
    for (std::size_t k = 0; k < m && pick.size() < 5; ++k) {
      if (std::find(pick.begin(), pick.end(), k) == pick.end()) pick.push_back(k);
    }
    std::sort(pick.begin(), pick.end());
    std::vector<SquareClass> sub;
    for (std::size_t k : pick) sub.push_back(f[k]);
    const std::vector<BigInt> u = split_witness(DiagonalForm(sub));
    std::vector<BigInt> w(m, 0);
    for (std::size_t k = 0; k < pick.size(); ++k) w[pick[k]] = u[k];
    return w;
  }
  return split_witness(f);
}

}  // namespace

namespace detail {

std::vector<BigInt> solve_legendre(const SquareClass& a, const SquareClass& b) {
  if (a.is_one()) return {1, 0, 1};
  if (b.is_one()) return {0, 1, 1};
  if (abs(a.value()) > abs(b.value())) {
    auto r = solve_legendre(b, a);
    return {r[1], r[0], r[2]};
  }
  const BigInt& bv = b.value();
  const BigInt modulus = abs(bv);
  if (modulus < 2) {
    throw InternalError("Legendre equation has no solution");
  }
  // t^2 = a (mod |b|) by CRT over the primes of b.
  BigInt t = 0, acc = 1;
  for (std::uint64_t p : b.primes()) {
    std::uint64_t root;
    if (p == 2 || a.divisible_by(p)) {
      root = a.mod(p);
    } else {
      if (legendre_u64(a.mod(p), p) != 1) {
        throw InternalError("Legendre equation has no solution");
      }
      root = sqrt_mod_prime(a.mod(p), p);
    }
    // Combine t (mod acc) with root (mod p).
    const std::uint64_t t_mod_p = mod_u64(t, p);
    const std::uint64_t acc_mod_p = mod_u64(acc, p);
    const std::uint64_t inv = powmod(acc_mod_p, p - 2, p);
    const std::uint64_t diff = (root + p - t_mod_p) % p;
    const std::uint64_t k = mulmod(diff, inv, p);
    t += acc * k;
    acc *= p;
  }
  t = centered(t, modulus);
  const BigInt num = t * t - a.value();
  if (num % bv != 0) throw InternalError("Legendre descent: bad square root");
  const BigInt kprime = num / bv;
  const SquareClass k = SquareClass::reduce(kprime);
  BigInt msq = kprime / k.value();
  BigInt m;
  if (!is_perfect_square(msq, &m)) {
    throw InternalError("Legendre descent: bad square part");
  }
  auto r = solve_legendre(a, k);
  const BigInt u = t * r[2] + a.value() * r[0];
  const BigInt v = t * r[0] + r[2];
  const BigInt y = k.value() * m * r[1];
  return primitive_abs({v, y, u});
}

}  // namespace detail

DiagonalForm DiagonalForm::from_ints(std::initializer_list<std::int64_t> coeffs) {
  std::vector<SquareClass> c;
  for (auto v : coeffs) c.push_back(SquareClass::from_int(v));
  return DiagonalForm(std::move(c));
}

BigInt DiagonalForm::evaluate(std::span<const BigInt> v) const {
  if (v.size() != dim()) throw DomainError("vector length does not match form");
  BigInt s = 0;
  for (std::size_t i = 0; i < dim(); ++i) s += coeffs_[i].value() * v[i] * v[i];
  return s;
}

Rational DiagonalForm::evaluate(std::span<const Rational> v) const {
  if (v.size() != dim()) throw DomainError("vector length does not match form");
  Rational s = 0;
  for (std::size_t i = 0; i < dim(); ++i) {
    s += Rational(coeffs_[i].value()) * v[i] * v[i];
  }
  return s;
}

std::string DiagonalForm::str() const {
  std::string out = "<";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) out += ",";
    out += coeffs_[i].str();
  }
  return out + ">";
}

namespace {

class FormParser {
 public:
  explicit FormParser(std::string_view s) : cur_(s) {}

  DiagonalForm parse() {
    DiagonalForm f = scaled();
    while (cur_.accept("+")) f = orthogonal_sum(f, scaled());
    cur_.expect_end();
    return f;
  }

 private:
  DiagonalForm scaled() {
    const char c = cur_.peek();
    if (c == '-' || (c >= '0' && c <= '9')) {
      const std::size_t at = cur_.pos();
      Rational t = cur_.rational();
      if (t == 0) throw ParseError("scale must be nonzero", at);
      if (!cur_.accept("*") && !cur_.accept("·")) cur_.fail("expected '*'");
      return scale(SquareClass::reduce(t), atom());
    }
    return atom();
  }

  DiagonalForm atom() {
    if (cur_.accept("<<") || cur_.accept("⟨⟨")) {
      auto entries = list();
      if (!cur_.accept(">>") && !cur_.accept("⟩⟩")) cur_.fail("expected '>>'");
      return pfister(entries);
    }
    if (cur_.accept("<") || cur_.accept("⟨")) {
      auto entries = list();
      if (!cur_.accept(">") && !cur_.accept("⟩")) cur_.fail("expected '>'");
      return DiagonalForm(std::move(entries));
    }
    cur_.fail("expected '<' or '<<'");
  }

  std::vector<SquareClass> list() {
    std::vector<SquareClass> out;
    const char c = cur_.peek();
    if (c == '>' || c == '\xE2') return out;
    do {
      const std::size_t at = cur_.pos();
      Rational q = cur_.rational();
      if (q == 0) throw ParseError("coefficient must be nonzero", at);
      out.push_back(SquareClass::reduce(q));
    } while (cur_.accept(","));
    return out;
  }

  text::Cursor cur_;
};

}  // namespace

DiagonalForm parse_form(std::string_view text) {
  return FormParser(text).parse();
}

DiagonalForm orthogonal_sum(const DiagonalForm& f, const DiagonalForm& g) {
  std::vector<SquareClass> c = f.coeffs();
  c.insert(c.end(), g.coeffs().begin(), g.coeffs().end());
  return DiagonalForm(std::move(c));
}

DiagonalForm scale(const SquareClass& t, const DiagonalForm& f) {
  std::vector<SquareClass> c;
  c.reserve(f.dim());
  for (const auto& x : f.coeffs()) c.push_back(t * x);
  return DiagonalForm(std::move(c));
}

DiagonalForm tensor(const DiagonalForm& f, const DiagonalForm& g) {
  std::vector<SquareClass> c;
  c.reserve(f.dim() * g.dim());
  for (const auto& x : f.coeffs()) {
    for (const auto& y : g.coeffs()) c.push_back(x * y);
  }
  return DiagonalForm(std::move(c));
}

DiagonalForm pfister(std::span<const SquareClass> entries) {
  const std::size_t n = entries.size();
  if (n > 20) throw DomainError("Pfister form too large");
  std::vector<SquareClass> c(std::size_t{1} << n);
  for (std::size_t mask = 1; mask < c.size(); ++mask) {
    // Lowest set bit extends a smaller subset.
    const std::size_t bit = static_cast<std::size_t>(__builtin_ctzll(mask));
    c[mask] = c[mask & (mask - 1)] * (-entries[bit]);
  }
  return DiagonalForm(std::move(c));
}

DiagonalForm pfister(const Symbol& alpha) { return pfister(alpha.entries()); }

DiagonalForm hyperbolic_reference(std::size_t dim) {
  if (dim % 2 != 0) throw DomainError("hyperbolic forms have even dimension");
  std::vector<SquareClass> c;
  for (std::size_t i = 0; i < dim / 2; ++i) {
    c.emplace_back();
    c.push_back(SquareClass::from_int(-1));
  }
  return DiagonalForm(std::move(c));
}

int WittInvariants::hasse_at(const Place& v) const {
  auto it = hasse.find(v);
  return it == hasse.end() ? 1 : it->second;
}

std::string WittInvariants::str() const {
  std::string out = "dim_parity=" + std::to_string(dim_parity) +
                    " disc=" + signed_disc.str() +
                    " signature=" + std::to_string(signature) + " hasse={";
  bool first = true;
  for (const auto& [v, h] : hasse) {
    if (!first) out += ",";
    first = false;
    out += v.str() + ":" + (h > 0 ? "+1" : "-1");
  }
  return out + "}";
}

SquareClass signed_discriminant(const DiagonalForm& f) {
  const std::size_t m = f.dim();
  SquareClass d = product_class(f);
  if (m > 0 && (m * (m - 1) / 2) % 2 == 1) d = -d;
  return d;
}

int hasse_invariant(const DiagonalForm& f, const Place& v) {
  int h = 1;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t j = i + 1; j < f.dim(); ++j) {
      h *= hilbert_symbol(f[i], f[j], v);
    }
  }
  return h;
}

long signature(const DiagonalForm& f) {
  long s = 0;
  for (const auto& c : f.coeffs()) s += c.is_negative() ? -1 : 1;
  return s;
}

WittInvariants invariants(const DiagonalForm& f) {
  WittInvariants inv;
  inv.dim_parity = static_cast<int>(f.dim() % 2);
  inv.signed_disc = signed_discriminant(f);
  inv.signature = signature(f);
  for (const Place& v : places_of(f)) inv.hasse[v] = hasse_invariant(f, v);
  return inv;
}

bool is_locally_isotropic(const DiagonalForm& f, const Place& v) {
  const std::size_t m = f.dim();
  if (m < 2) return false;
  if (v.kind() == Place::Kind::kReal) {
    const long s = signature(f);
    return s != static_cast<long>(m) && s != -static_cast<long>(m);
  }
  if (m >= 5) return true;
  const SquareClass d = product_class(f);
  const SquareClass minus_one = SquareClass::from_int(-1);
  switch (m) {
    case 2:
      return is_local_square(-d, v);
    case 3:
      return hilbert_symbol(minus_one, -d, v) == hasse_invariant(f, v);
    default:
      return !is_local_square(d, v) ||
             hasse_invariant(f, v) == hilbert_symbol(minus_one, minus_one, v);
  }
}

bool decide_isotropic(const DiagonalForm& f) {
  const std::size_t m = f.dim();
  if (m < 2) return false;
  if (m == 2) return (-(f[0] * f[1])).is_one();
  for (const Place& v : places_of(f)) {
    if (!is_locally_isotropic(f, v)) return false;
  }
  return true;
}

Isotropy is_isotropic(const DiagonalForm& f) {
  Isotropy out;
  out.isotropic = decide_isotropic(f);
  if (!out.isotropic) return out;
  out.witness = find_witness(f);
  if (f.evaluate(std::span<const BigInt>(out.witness)) != 0) {
    throw InternalError("isotropy witness does not vanish on " + f.str());
  }
  return out;
}

namespace {

// Orthogonal complement of u inside <d_0, ..., d_{r-1}> with every u_l != 0
// and q(u) != 0, diagonalized through partial sums S_j of d_l u_l^2:
// w_j = S_j y_{j+1} - delta_{j+1}(y_1 + ... + y_j) has q(w_j) =
// S_j delta_{j+1} S_{j+1}.
std::vector<SquareClass> complement_of_vector(
    const std::vector<SquareClass>& d, const std::vector<BigInt>& u) {
  const std::size_t r = d.size();
  std::vector<BigInt> delta(r);
  for (std::size_t l = 0; l < r; ++l) delta[l] = d[l].value() * u[l] * u[l];
  // Order with all partial sums nonzero.
  std::vector<std::size_t> order;
  std::vector<bool> used(r, false);
  std::function<bool(const BigInt&)> dfs = [&](const BigInt& sum) -> bool {
    if (order.size() == r) return true;
    for (std::size_t l = 0; l < r; ++l) {
      if (used[l]) continue;
      const BigInt next = sum + delta[l];
      if (next == 0) continue;
      used[l] = true;
      order.push_back(l);
      if (dfs(next)) return true;
      used[l] = false;
      order.pop_back();
    }
    return false;
  };
  if (!dfs(BigInt(0))) {
    throw InternalError("no ordering with nonzero partial sums");
  }
  std::vector<SquareClass> out;
  BigInt sum = delta[order[0]];
  for (std::size_t j = 1; j < r; ++j) {
    const BigInt next = sum + delta[order[j]];
    out.push_back(SquareClass::reduce(sum) * SquareClass::reduce(next) *
                  d[order[j]]);
    sum = next;
  }
  return out;
}

}  // namespace

WittDecomposition witt_decompose(const DiagonalForm& f) {
  WittDecomposition out;
  DiagonalForm current = f;
  while (true) {
    Isotropy iso = is_isotropic(current);
    if (!iso.isotropic) break;
    const auto& w = iso.witness;
    std::size_t pivot = 0;
    while (w[pivot] == 0) ++pivot;
    // current = H + (complement of w' in the form without the pivot slot),
    // where w' is w with the pivot removed.
    std::vector<SquareClass> untouched, support;
    std::vector<BigInt> u;
    for (std::size_t k = 0; k < current.dim(); ++k) {
      if (k == pivot) continue;
      if (w[k] == 0) {
        untouched.push_back(current[k]);
      } else {
        support.push_back(current[k]);
        u.push_back(w[k]);
      }
    }
    std::vector<SquareClass> next = untouched;
    if (!support.empty()) {
      auto comp = complement_of_vector(support, u);
      next.insert(next.end(), comp.begin(), comp.end());
    }
    current = DiagonalForm(std::move(next));
    ++out.witt_index;
  }
  out.kernel = current;
  return out;
}

bool equivalent(const DiagonalForm& f, const DiagonalForm& g) {
  if (f.dim() != g.dim()) return false;
  if (signature(f) != signature(g)) return false;
  if (!(signed_discriminant(f) == signed_discriminant(g))) return false;
  std::vector<SquareClass> all = f.coeffs();
  all.insert(all.end(), g.coeffs().begin(), g.coeffs().end());
  all.emplace_back();
  for (const Place& v : relevant_places(all)) {
    if (hasse_invariant(f, v) != hasse_invariant(g, v)) return false;
  }
  return true;
}

bool is_hyperbolic(const DiagonalForm& f) {
  if (f.dim() % 2 != 0) return false;
  return equivalent(f, hyperbolic_reference(f.dim()));
}

Representation represents(const DiagonalForm& f, const SquareClass& b) {
  Representation out;
  const DiagonalForm g = orthogonal_sum(f, DiagonalForm({-b}));
  Isotropy iso = is_isotropic(g);
  if (!iso.isotropic) return out;
  out.represented = true;
  const std::size_t m = f.dim();
  const BigInt& s = iso.witness.back();
  std::vector<Rational> v(m);
  if (s != 0) {
    for (std::size_t i = 0; i < m; ++i) v[i] = Rational(iso.witness[i], s);
  } else {
    // f itself is isotropic along w; move along w from a basis vector e_i
    // with B(w, e_i) != 0.
    std::size_t i = 0;
    while (iso.witness[i] == 0) ++i;
    const Rational ci(f[i].value());
    const Rational lambda =
        (Rational(b.value()) - ci) / (2 * ci * Rational(iso.witness[i]));
    for (std::size_t k = 0; k < m; ++k) v[k] = lambda * Rational(iso.witness[k]);
    v[i] += 1;
  }
  if (f.evaluate(std::span<const Rational>(v)) != Rational(b.value())) {
    throw InternalError("representation witness failed for " + f.str());
  }
  out.witness = std::move(v);
  return out;
}

int IDegree::value() const {
  if (!value_) throw DomainError("the hyperbolic class has no finite degree");
  return *value_;
}

std::string IDegree::str() const {
  return value_ ? std::to_string(*value_) : std::string("hyperbolic");
}

bool in_I_power(const DiagonalForm& f, int n) {
  if (n < 0) throw DomainError("I-power exponent must be nonnegative");
  if (n == 0) return true;
  if (f.dim() % 2 != 0) return false;
  if (n == 1) return true;
  if (!signed_discriminant(f).is_one()) return false;
  if (n == 2) return true;
  const DiagonalForm ref = hyperbolic_reference(f.dim());
  for (const Place& v : places_of(f)) {
    if (hasse_invariant(f, v) != hasse_invariant(ref, v)) return false;
  }
  // Over Q a class in I^3 is determined by its signature.
  const long sig = signature(f);
  if (n >= 62) return sig == 0;
  return sig % (1L << n) == 0;
}

IDegree i_degree(const DiagonalForm& f) {
  if (is_hyperbolic(f)) return IDegree::hyperbolic();
  int n = 0;
  while (in_I_power(f, n + 1)) {
    ++n;
    if (n > 62) throw InternalError("unbounded I-degree for " + f.str());
  }
  return IDegree::finite(n);
}

PhiImage phi(const KElement& x) {
  PhiImage out;
  out.degree = x.degree();
  DiagonalForm sum;
  for (const auto& t : x.terms()) sum = orthogonal_sum(sum, pfister(t));
  out.form = std::move(sum);
  return out;
}

}  // namespace pfister
