#include "pfister/norm_quadric.hpp"

#include "pfister/error.hpp"

namespace pfister {

NormQuadric NormQuadric::build(const Symbol& alpha) {
  const std::size_t n = alpha.degree();
  if (n < 2) {
    throw DomainError("norm quadric needs a symbol of degree >= 2, got " +
                      std::to_string(n));
  }
  NormQuadric q;
  q.alpha_ = alpha;
  const auto& e = alpha.entries();
  const DiagonalForm block =
      pfister(std::span<const SquareClass>(e.data(), n - 1));
  q.form_ = orthogonal_sum(block, DiagonalForm({-e[n - 1]}));
  return q;
}

namespace {

std::string quad_str(const QuadElement& x, const SquareClass& d) {
  if (x.b == 0) return to_string(x.a);
  std::string root = "√" + d.str();
  std::string b;
  if (x.b == 1) {
    b = root;
  } else if (x.b == -1) {
    b = "-" + root;
  } else {
    b = to_string(x.b) + root;
  }
  if (x.a == 0) return b;
  if (b[0] == '-') return to_string(x.a) + b;
  return to_string(x.a) + "+" + b;
}

QuadricPoint rational_from(const std::vector<BigInt>& w) {
  QuadricPoint pt;
  for (const auto& x : w) pt.coords.push_back({Rational(x), Rational(0)});
  return pt;
}

// Solves c x^2 = -r for x in Q(sqrt d); fills d and the coordinate.
void solve_square(const SquareClass& c, const Rational& r, QuadricPoint& pt,
                  std::size_t slot) {
  const Rational target = -r / Rational(c.value());  // x^2 = target
  pt.d = SquareClass::reduce(target);
  // target = d * s^2 with s rational.
  Rational s;
  if (!is_rational_square(target / Rational(pt.d.value()), &s)) {
    throw InternalError("square-class reduction inconsistent");
  }
  if (pt.d.is_one()) {
    pt.coords[slot] = {s, Rational(0)};
  } else {
    pt.coords[slot] = {Rational(0), s};
  }
}

void check_point(const DiagonalForm& f, const QuadricPoint& pt) {
  if (!lies_on(f, pt)) {
    throw InternalError("constructed point " + pt.str() +
                        " does not lie on " + f.str());
  }
}

}  // namespace

std::string QuadricPoint::str() const {
  std::string out = d.str() + "; (";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += quad_str(coords[i], d);
  }
  return out + ")";
}

bool lies_on(const DiagonalForm& f, const QuadricPoint& pt) {
  if (pt.coords.size() != f.dim()) return false;
  bool nonzero = false;
  Rational ra = 0, rb = 0;
  const Rational d(pt.d.value());
  for (std::size_t i = 0; i < f.dim(); ++i) {
    const auto& x = pt.coords[i];
    if (x.a != 0 || x.b != 0) nonzero = true;
    const Rational c(f[i].value());
    ra += c * (x.a * x.a + d * x.b * x.b);
    rb += c * 2 * x.a * x.b;
  }
  return nonzero && ra == 0 && rb == 0;
}

std::optional<QuadricPoint> rational_point(const NormQuadric& q) {
  const Isotropy iso = is_isotropic(q.form());
  if (!iso.isotropic) return std::nullopt;
  QuadricPoint pt = rational_from(iso.witness);
  check_point(q.form(), pt);
  return pt;
}

std::vector<QuadricPoint> pair_points(const NormQuadric& q) {
  const DiagonalForm& f = q.form();
  std::vector<QuadricPoint> out;
  for (std::size_t i = 0; i < f.dim(); ++i) {
    for (std::size_t j = i + 1; j < f.dim(); ++j) {
      // c_i x^2 + c_j y^2 = 0 with y = 1.
      QuadricPoint pt;
      pt.coords.assign(f.dim(), QuadElement{});
      pt.coords[j] = {Rational(1), Rational(0)};
      solve_square(f[i], Rational(f[j].value()), pt, i);
      // Clear denominators so the point is integral over Z[sqrt d].
      const auto& xi = pt.coords[i];
      const Rational& s = pt.d.is_one() ? xi.a : xi.b;
      const Rational scale(denominator(s));
      pt.coords[i] = {xi.a * scale, xi.b * scale};
      pt.coords[j] = {scale, Rational(0)};
      check_point(f, pt);
      out.push_back(std::move(pt));
    }
  }
  return out;
}

std::vector<QuadricPoint> section_points(const NormQuadric& q, int radius) {
  const DiagonalForm& f = q.form();
  const std::size_t m = f.dim();
  std::vector<QuadricPoint> out;
  if (radius <= 0 || m < 2) return out;
  auto emit = [&](std::size_t solved, const std::vector<long>& fixed) {
    QuadricPoint pt;
    pt.coords.assign(m, QuadElement{});
    Rational r = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == solved || fixed[j] == 0) continue;
      pt.coords[j] = {Rational(fixed[j]), Rational(0)};
      r += Rational(f[j].value()) * fixed[j] * fixed[j];
    }
    if (r != 0) solve_square(f[solved], r, pt, solved);
    check_point(f, pt);
    out.push_back(std::move(pt));
  };
  const long rho = radius;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) others.push_back(j);
    }
    std::vector<long> v(m, 0);
    for (std::size_t p : others) {
      v[p] = rho;
      emit(i, v);
      v[p] = 0;
    }
    for (std::size_t a = 0; a < others.size(); ++a) {
      for (std::size_t b = a + 1; b < others.size(); ++b) {
        for (long x = 1; x <= rho; ++x) {
          for (long y = -rho; y <= rho; ++y) {
            if (y == 0 || std::max(x, std::abs(y)) != rho) continue;
            v[others[a]] = x;
            v[others[b]] = y;
            emit(i, v);
          }
        }
        v[others[a]] = 0;
        v[others[b]] = 0;
      }
    }
  }
  return out;
}

std::vector<QuadricPoint> quadratic_points(const NormQuadric& q, int depth) {
  if (depth < 0) throw DomainError("depth must be nonnegative");
  std::vector<QuadricPoint> out = pair_points(q);
  for (int r = 1; r <= depth; ++r) {
    auto more = section_points(q, r);
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  }
  return out;
}

Specialization::Specialization(KElement x, const QuadricPoint& pt)
    : x_(std::move(x)), d_(pt.d) {}

bool Specialization::is_zero() const {
  if (d_.is_one()) return k_is_zero(x_);
  return restrict_to(x_, NumberField::quadratic(d_)).is_zero();
}

Specialization specialize(const KElement& x, const QuadricPoint& pt) {
  return Specialization(x, pt);
}

namespace {

MPoly mpoly_mul(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      std::vector<int> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational& slot = out[e];
      slot += ca * cb;
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

void mpoly_add_to(MPoly& acc, const MPoly& p, const Rational& scale) {
  for (const auto& [e, c] : p) {
    Rational& slot = acc[e];
    slot += scale * c;
    if (slot == 0) acc.erase(e);
  }
}

MPoly monomial(int num_vars, int var, const Rational& c = 1) {
  std::vector<int> e(static_cast<std::size_t>(num_vars), 0);
  if (var >= 0) e[static_cast<std::size_t>(var)] = 1;
  return MPoly{{e, c}};
}

// Rewrites X_e^2 -> (X_e^2 - relation / c_e) until every exponent of X_e is
// below 2.
MPoly reduce(MPoly p, const MPoly& relation, int e, const Rational& c_e) {
  MPoly tail = relation;  // relation - c_e X_e^2, divided by -c_e below
  std::vector<int> sq(relation.begin()->first.size(), 0);
  sq[static_cast<std::size_t>(e)] = 2;
  tail.erase(sq);
  MPoly replacement;
  mpoly_add_to(replacement, tail, Rational(-1) / c_e);
  while (true) {
    auto it = std::find_if(p.begin(), p.end(), [&](const auto& kv) {
      return kv.first[static_cast<std::size_t>(e)] >= 2;
    });
    if (it == p.end()) return p;
    std::vector<int> rest = it->first;
    rest[static_cast<std::size_t>(e)] -= 2;
    const Rational c = it->second;
    p.erase(it);
    mpoly_add_to(p, mpoly_mul(MPoly{{rest, Rational(1)}}, replacement), c);
  }
}

}  // namespace

std::string mpoly_str(const MPoly& p) {
  if (p.empty()) return "0";
  std::string out;
  // Highest total degree first.
  std::vector<std::pair<std::vector<int>, Rational>> terms(p.begin(), p.end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    int dx = 0, dy = 0;
    for (int v : x.first) dx += v;
    for (int v : y.first) dy += v;
    return dx > dy;
  });
  for (const auto& [e, c] : terms) {
    const bool neg = c < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

std::string FunctionFieldWitness::str() const {
  std::string out = "chart: x" + std::to_string(chart) + " = 1\n";
  out += "relation: " + mpoly_str(relation) + " = 0\n";
  out += "eliminate: x" + std::to_string(eliminated) + "^2\n";
  out += "pfister: <";
  for (std::size_t i = 0; i < pfister_coeffs.size(); ++i) {
    if (i) out += ",";
    out += pfister_coeffs[i].str();
  }
  out += ">\nvector: (";
  for (std::size_t i = 0; i < vector.size(); ++i) {
    if (i) out += ", ";
    out += mpoly_str(vector[i]);
  }
  return out + ")";
}

FunctionFieldWitness generic_isotropy_witness(const Symbol& alpha) {
  const NormQuadric q = NormQuadric::build(alpha);
  const std::size_t n = alpha.degree();
  const DiagonalForm p = pfister(alpha);
  const std::size_t half = std::size_t{1} << (n - 1);
  const int nq = static_cast<int>(q.form().dim());

  FunctionFieldWitness w;
  w.chart = 0;
  w.eliminated = nq - 1;
  w.num_vars = nq;
  w.pfister_coeffs = p.coeffs();
  w.quadric_coeffs = q.form().coeffs();
  for (int i = 0; i < nq; ++i) {
    const Rational c(q.form()[static_cast<std::size_t>(i)].value());
    MPoly x = i == w.chart ? monomial(nq, -1) : monomial(nq, i);
    mpoly_add_to(w.relation, mpoly_mul(x, x), c);
  }
  // Quadric coordinates fill the Pfister slots sharing their coefficients:
  // slots below 2^{n-1} carry the <<a_1..a_{n-1}>> block and slot 2^{n-1}
  // carries -a_n.
  w.vector.assign(p.dim(), MPoly{});
  for (std::size_t s = 0; s < half; ++s) {
    w.vector[s] = s == 0 ? monomial(nq, -1) : monomial(nq, static_cast<int>(s));
  }
  w.vector[half] = monomial(nq, w.eliminated);
  if (!verify(w)) {
    throw InternalError("generic isotropy witness failed verification for " +
                        alpha.str());
  }
  return w;
}

bool verify(const FunctionFieldWitness& w) {
  if (w.vector.size() != w.pfister_coeffs.size() || w.relation.empty()) {
    return false;
  }
  bool nonzero = false;
  MPoly total;
  for (std::size_t s = 0; s < w.vector.size(); ++s) {
    if (w.vector[s].empty()) continue;
    nonzero = true;
    mpoly_add_to(total, mpoly_mul(w.vector[s], w.vector[s]),
                 Rational(w.pfister_coeffs[s].value()));
  }
  if (!nonzero) return false;
  const Rational c_e(
      w.quadric_coeffs[static_cast<std::size_t>(w.eliminated)].value());
  return reduce(std::move(total), w.relation, w.eliminated, c_e).empty();
}

}  // namespace pfister
