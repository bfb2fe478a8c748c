#include "pfister/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <thread>

#include "pfister/error.hpp"
#include "pfister/norm_quadric.hpp"
#include "pfister/numfield.hpp"
#include "pfister/quadform.hpp"

namespace pfister::campaign {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string join(const std::set<int>& s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string symbol_tuple(const Symbol& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.degree(); ++i) {
    if (i) out += ",";
    out += s.entries()[i].str();
  }
  return out + ")";
}

std::string pfister_text(const Symbol& s) {
  std::string out = "<<";
  for (std::size_t i = 0; i < s.degree(); ++i) {
    if (i) out += ",";
    out += s.entries()[i].str();
  }
  return out + ">>";
}

SampleResult pass() { return {}; }

SampleResult fail(std::string detail, std::string replay) {
  return {Outcome::kFail, std::move(detail), std::move(replay)};
}

SampleResult skip(std::string reason) {
  return {Outcome::kSkip, std::move(reason), {}};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

struct Context {
  const CampaignConfig& config;
  std::int64_t bound;
  int degree;  // drawn from the effective degree set, 0 when unused
};

using CheckFn = std::function<SampleResult(Sampler&, const Context&)>;

struct CheckDef {
  std::string name;
  std::set<int> supported;  // empty: no degree parameter
  std::set<int> defaults;
  CheckFn fn;
};

struct SuiteDef {
  std::string name;
  std::int64_t default_bound;
  std::vector<CheckDef> checks;
};

// reciprocity ---------------------------------------------------------------

SampleResult hilbert_reciprocity(Sampler& s, const Context& c) {
  const SquareClass a = s.square_class(c.bound);
  const SquareClass b = s.square_class(c.bound);
  const SquareClass ab[] = {a, b};
  int product = 1;
  for (const Place& v : relevant_places(ab)) product *= hilbert_symbol(a, b, v);
  if (product == 1) return pass();
  return fail("a=" + a.str() + " b=" + b.str() + " product=-1",
              "pfister hilbert " + a.str() + " " + b.str());
}

// steinberg -----------------------------------------------------------------

SampleResult steinberg(Sampler& s, const Context& c) {
  Rational a;
  do {
    a = s.nonzero_rational(c.bound);
  } while (a == 1);
  const Rational b = 1 - a;
  const Rational entries[] = {a, b};
  const KElement x = symbol_element(entries);
  const SquareClass cls[] = {SquareClass::reduce(a), SquareClass::reduce(b)};
  const DiagonalForm f = pfister(cls);
  const bool zero = k_is_zero(x);
  const bool hyp = is_hyperbolic(f);
  if (zero && hyp) return pass();
  const std::string sym = "{" + to_string(a) + "," + to_string(b) + "}";
  return fail("a=" + to_string(a) + " k_is_zero=" + yes_no(zero) +
                  " hyperbolic=" + yes_no(hyp),
              "pfister symbol iszero " + quote(sym) + " ; pfister form hyperbolic " +
                  quote(f.str()));
}

// milnor --------------------------------------------------------------------

SampleResult phi_agreement(Sampler& s, const Context& c) {
  const int n = c.degree;
  const int count = static_cast<int>(s.uniform(1, 3));
  std::vector<Symbol> terms;
  for (int i = 0; i < count; ++i) terms.push_back(s.symbol(n, c.bound));
  const KElement x = KElement::from_terms(n, terms);
  const bool zero = k_is_zero(x);
  const PhiImage img = phi(x);
  const bool in_next = img.is_zero_mod_next();
  if (zero == in_next) return pass();
  std::string raw;
  for (const auto& t : terms) {
    if (!raw.empty()) raw += "+";
    raw += t.str();
  }
  return fail("x=" + raw + " k_is_zero=" + yes_no(zero) + " phi_in_I^" +
                  std::to_string(n + 1) + "=" + yes_no(in_next),
              "pfister symbol iszero " + quote(raw) + " ; pfister form degree " +
                  quote(img.form.str()));
}

// exact-seq -----------------------------------------------------------------

SampleResult first_spot(Sampler& s, const Context& c) {
  const Symbol alpha = s.symbol(c.degree, c.bound);
  const NormQuadric q = NormQuadric::build(alpha);
  const KElement a = KElement::from_symbol(alpha);
  for (const QuadricPoint& pt : pair_points(q)) {
    FieldPtr field;
    if (!pt.d.is_one()) field = NumberField::quadratic(pt.d);
    for (int k = 0; k < 5; ++k) {
      KElement t = KElement::zero(1);
      std::string e_text;
      if (!field) {
        const Rational e = s.nonzero_rational(c.bound);
        const Rational one[] = {e};
        t = symbol_element(one);
        e_text = to_string(e);
      } else {
        Rational u, v;
        do {
          u = Rational(s.uniform(-c.bound, c.bound), s.uniform(1, 9));
          v = Rational(s.uniform(-c.bound, c.bound), s.uniform(1, 9));
        } while (u == 0 && v == 0);
        const FieldElement e(field, {u, v});
        t = transfer_k1(e);
        e_text = to_string(u) + "," + to_string(v);
      }
      const KElement prod = k_multiply(t, a);
      if (!k_is_zero(prod)) {
        const std::string fld =
            field ? "--field " + quote(field->str()) + " " : std::string();
        return fail("alpha=" + alpha.str() + " point=" + pt.str() +
                        " e=" + e_text + " product=" + prod.str(),
                    "pfister transfer " + fld + "--element " + quote(e_text) +
                        " --times " + quote(alpha.str()));
      }
    }
  }
  return pass();
}

SampleResult second_spot_forward(Sampler& s, const Context& c) {
  const Symbol alpha = s.symbol(c.degree, c.bound);
  const DiagonalForm f = pfister(alpha);
  BigInt value = 0;
  std::vector<BigInt> v(f.dim());
  while (value == 0) {
    for (auto& x : v) x = s.uniform(-3, 3);
    value = f.evaluate(std::span<const BigInt>(v));
  }
  const SquareClass b = SquareClass::reduce(value);
  if (kernel_member(b, alpha)) return pass();
  const std::string sym = "{" + b.str() + "}*" + alpha.str();
  return fail("alpha=" + alpha.str() + " b=" + b.str() + " kernel_member=false",
              "pfister symbol iszero " + quote(sym));
}

SampleResult second_spot_backward(Sampler& s, const Context& c) {
  const Symbol alpha = s.symbol(c.degree, c.bound);
  std::optional<SquareClass> b;
  for (int tries = 0; tries < 256 && !b; ++tries) {
    const SquareClass cand = s.nontrivial_class(c.bound);
    if (kernel_member(cand, alpha)) b = cand;
  }
  if (!b) return skip("no kernel member found for " + alpha.str());
  const DiagonalForm f = pfister(alpha);
  const Representation r = represents(f, *b);
  bool exact = r.represented &&
               f.evaluate(std::span<const Rational>(r.witness)) ==
                   Rational(b->value());
  if (exact) return pass();
  return fail("alpha=" + alpha.str() + " b=" + b->str() +
                  " represented=" + yes_no(r.represented),
              "pfister form represents " + quote(f.str()) + " " + b->str());
}

SampleResult third_spot(Sampler& s, const Context& c) {
  const Symbol alpha = s.symbol(c.degree, c.bound);
  const FunctionFieldWitness w = generic_isotropy_witness(alpha);
  if (verify(w)) return pass();
  return fail("alpha=" + alpha.str() + " witness did not reduce to 0",
              "pfister quadric witness " + quote(symbol_tuple(alpha)));
}

// krs -----------------------------------------------------------------------

SampleResult specialization_certificate(Sampler& s, const Context& c) {
  const int i = c.config.krs_degree;
  const int n = c.degree;
  const int m = (1 << (n - 1)) - 1;  // projective dimension
  if (i == 2) {
    return skip("krs at i = 2 needs the K_2 zero test over quadratic fields, "
                "which is not supported");
  }
  if (i < 1 || i > 4 || (1 << i) >= m + 2) {
    return skip("i = " + std::to_string(i) + " is not below log2(m+2) for m = " +
                std::to_string(m));
  }
  const Symbol alpha = s.symbol(n, c.bound);
  const NormQuadric q = NormQuadric::build(alpha);
  KElement x = KElement::zero(i);
  for (int tries = 0; tries < 256; ++tries) {
    std::vector<Symbol> terms;
    const int count = i == 1 ? 1 : static_cast<int>(s.uniform(1, 3));
    for (int t = 0; t < count; ++t) terms.push_back(s.symbol(i, c.bound));
    x = KElement::from_terms(i, terms);
    if (!k_is_zero(x)) break;
  }
  if (k_is_zero(x)) return skip("no nonzero element sampled");
  // Degree >= 3 classes die over imaginary quadratic fields, and a definite
  // quadric has no point with a real residue field.
  const DiagonalForm& f = q.form();
  if (i >= 3 && std::abs(signature(f)) == static_cast<int>(f.dim())) {
    return skip("alpha=" + alpha.str() +
                " quadric is definite, no degree <= 2 point can certify i = " +
                std::to_string(i));
  }
  auto certified = [&](const std::vector<QuadricPoint>& pts) {
    for (const auto& pt : pts) {
      if (!specialize(x, pt).is_zero()) return true;
    }
    return false;
  };
  if (certified(pair_points(q))) return pass();
  for (int r = 1; r <= c.config.depth; ++r) {
    if (certified(section_points(q, r))) return pass();
  }
  return fail("alpha=" + alpha.str() + " x=" + x.str() +
                  " no certifying point up to depth " +
                  std::to_string(c.config.depth),
              "pfister quadric points " + quote(symbol_tuple(alpha)) +
                  " --depth " + std::to_string(c.config.depth));
}

// jfilt ---------------------------------------------------------------------

SampleResult pfister_multiple_degree(Sampler& s, const Context& c) {
  const int n = c.degree;
  for (int tries = 0; tries < 512; ++tries) {
    const SquareClass t = s.square_class(c.bound);
    const Symbol alpha = s.symbol(n, c.bound);
    const DiagonalForm f = scale(t, pfister(alpha));
    if (is_isotropic(f).isotropic) continue;
    const IDegree deg = i_degree(f);
    if (deg == IDegree::finite(n)) return pass();
    return fail("form=" + f.str() + " i_degree=" + deg.str() +
                    " expected=" + std::to_string(n),
                "pfister form degree " +
                    quote(t.str() + "*" + pfister_text(alpha)));
  }
  return skip("no anisotropic scaled Pfister form of degree " +
              std::to_string(n) + " sampled");
}

SampleResult sum_degree_lower_bound(Sampler& s, const Context& c) {
  const int n = c.degree;
  const SquareClass t1 = s.square_class(c.bound);
  const SquareClass t2 = s.square_class(c.bound);
  const Symbol a1 = s.symbol(n, c.bound);
  const Symbol a2 = s.symbol(n, c.bound);
  const DiagonalForm f =
      orthogonal_sum(scale(t1, pfister(a1)), scale(t2, pfister(a2)));
  const IDegree deg = i_degree(f);
  if (deg.at_least(n)) return pass();
  return fail("form=" + f.str() + " i_degree=" + deg.str() + " expected>=" +
                  std::to_string(n),
              "pfister form degree " +
                  quote(t1.str() + "*" + pfister_text(a1) + "+" + t2.str() +
                        "*" + pfister_text(a2)));
}

// lemma-simple --------------------------------------------------------------

std::string coords_text(const std::vector<Rational>& v) {
  std::string out;
  for (const auto& q : v) {
    if (!out.empty()) out += ",";
    out += to_string(q);
  }
  return out;
}

SampleResult simple_solve(Sampler& s, const Context& c) {
  const int m = c.degree;
  const std::int64_t b = std::max<std::int64_t>(1, c.bound);
  FieldPtr field;
  while (!field) {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i < m; ++i) coeffs[i] = s.uniform(-b, b);
    coeffs[static_cast<std::size_t>(m)] = 1;
    if (coeffs[0] == 0) continue;
    try {
      field = NumberField::from_polynomial(coeffs);
    } catch (const DomainError&) {
    }
  }
  const int k = static_cast<int>(s.uniform(m / 2 + 1, m));
  std::vector<FieldElement> span;
  while (true) {
    span.clear();
    linalg::Matrix rows;
    for (int i = 0; i < k; ++i) {
      std::vector<Rational> v(static_cast<std::size_t>(m));
      for (auto& x : v) x = s.uniform(-3, 3);
      rows.push_back(v);
      span.emplace_back(field, v);
    }
    if (linalg::rank(rows) == static_cast<std::size_t>(k)) break;
  }
  std::vector<Rational> xc(static_cast<std::size_t>(m));
  do {
    for (auto& q : xc) q = s.uniform(-b, b);
  } while (std::all_of(xc.begin(), xc.end(),
                       [](const Rational& q) { return q == 0; }));
  const FieldElement x(field, xc);
  const SimpleQuotient sol = simple_quotient_solve(field, span, x);
  FieldElement v1 = FieldElement::from_rational(field, 0);
  FieldElement v2 = FieldElement::from_rational(field, 0);
  for (int i = 0; i < k; ++i) {
    v1 = v1 + FieldElement::from_rational(field, sol.v1_in_span[i]) * span[i];
    v2 = v2 + FieldElement::from_rational(field, sol.v2_in_span[i]) * span[i];
  }
  if (!v2.is_zero() && v1 == sol.v1 && v2 == sol.v2 && x * v2 == v1) {
    return pass();
  }
  std::string span_text;
  for (const auto& e : span) {
    if (!span_text.empty()) span_text += ";";
    span_text += coords_text(e.coords());
  }
  return fail("field=" + field->str() + " x=" + coords_text(xc) +
                  " v1=" + sol.v1.str() + " v2=" + sol.v2.str(),
              "pfister field simple " + quote(field->str()) + " --span " +
                  quote(span_text) + " --x " + quote(coords_text(xc)));
}

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"exact-seq",
       50,
       {{"first-spot", {2, 3, 4}, {2, 3, 4}, first_spot},
        {"second-spot-forward", {2, 3}, {2, 3}, second_spot_forward},
        {"second-spot-backward", {2, 3}, {2, 3}, second_spot_backward},
        {"third-spot", {2, 3, 4}, {2, 3, 4}, third_spot}}},
      {"milnor", 200, {{"phi-agreement", {1, 2, 3}, {1, 2, 3}, phi_agreement}}},
      {"krs",
       100,
       {{"specialization-certificate", {3, 4}, {3, 4},
         specialization_certificate}}},
      {"jfilt",
       100,
       {{"pfister-multiple-degree", {1, 2, 3, 4}, {1, 2, 3, 4},
         pfister_multiple_degree},
        {"sum-degree-lower-bound", {1, 2, 3, 4}, {1, 2, 3, 4},
         sum_degree_lower_bound}}},
      {"reciprocity", 500, {{"hilbert-reciprocity", {}, {}, hilbert_reciprocity}}},
      {"steinberg", 500, {{"steinberg", {}, {}, steinberg}}},
      {"lemma-simple", 5, {{"solve", {3, 4}, {3, 4}, simple_solve}}},
  };
  return defs;
}

const SuiteDef& find_suite(const std::string& name) {
  for (const auto& s : suites()) {
    if (s.name == name) return s;
  }
  throw DomainError("unknown suite '" + name + "'");
}

SampleResult run_sample(const CheckDef& def, const std::set<int>& degrees,
                        const CampaignConfig& config, std::int64_t bound,
                        int index) {
  Sampler s(sub_seed(config.seed, def.name, static_cast<std::uint64_t>(index)));
  int degree = 0;
  if (!degrees.empty()) {
    auto it = degrees.begin();
    std::advance(it, s.uniform(0, static_cast<std::int64_t>(degrees.size()) - 1));
    degree = *it;
    if (!def.supported.count(degree)) {
      return skip("degree " + std::to_string(degree) +
                  " is not supported by " + def.name);
    }
  }
  try {
    return def.fn(s, Context{config, bound, degree});
  } catch (const UnsupportedError& e) {
    return skip(e.what());
  } catch (const std::exception& e) {
    return fail(std::string("error: ") + e.what(), {});
  }
}

}  // namespace

std::int64_t Sampler::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw DomainError("empty sampling range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = rng_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

SquareClass Sampler::square_class(std::int64_t bound) {
  const auto primes = primes_up_to(static_cast<std::uint64_t>(
      std::max<std::int64_t>(bound, 2)));
  while (true) {
    const int k = static_cast<int>(uniform(0, 3));
    std::vector<std::uint64_t> chosen;
    std::uint64_t product = 1;
    bool ok = true;
    while (static_cast<int>(chosen.size()) < k) {
      const auto p = primes[static_cast<std::size_t>(
          uniform(0, static_cast<std::int64_t>(primes.size()) - 1))];
      if (std::find(chosen.begin(), chosen.end(), p) != chosen.end()) continue;
      chosen.push_back(p);
      product *= p;
      if (product > static_cast<std::uint64_t>(bound)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    return SquareClass::from_primes(coin() ? -1 : 1, std::move(chosen));
  }
}

SquareClass Sampler::nontrivial_class(std::int64_t bound) {
  while (true) {
    SquareClass c = square_class(bound);
    if (!c.is_one()) return c;
  }
}

Symbol Sampler::symbol(int degree, std::int64_t bound) {
  std::vector<SquareClass> entries;
  for (int i = 0; i < degree; ++i) entries.push_back(nontrivial_class(bound));
  return *Symbol::make(std::move(entries));
}

Rational Sampler::nonzero_rational(std::int64_t bound) {
  std::int64_t num = 0;
  while (num == 0) num = uniform(-bound, bound);
  return Rational(num, uniform(1, bound));
}

std::uint64_t sub_seed(std::uint64_t seed, const std::string& check,
                       std::uint64_t index) {
  return splitmix(splitmix(seed ^ fnv1a(check)) + index);
}

bool Report::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& c) { return c.fail == 0; });
}

std::string Report::render() const {
  std::string out = "pfister-report v1\n";
  out += "suite: " + suite + "\n";
  out += "seed: " + std::to_string(config.seed) + "\n";
  out += "samples: " + std::to_string(config.samples) + "\n";
  out += "coeff_bound: " + std::to_string(config.coeff_bound) + "\n";
  out += "degree_set: " +
         (config.degree_set.empty() ? std::string("default")
                                    : join(config.degree_set)) +
         "\n";
  out += "depth: " + std::to_string(config.depth) + "\n";
  out += "krs_degree: " + std::to_string(config.krs_degree) + "\n";
  for (const auto& c : checks) {
    out += "check " + c.name + ": pass=" + std::to_string(c.pass) +
           " fail=" + std::to_string(c.fail) + " skip=" + std::to_string(c.skip) +
           "\n";
    for (const auto& [index, r] : c.notes) {
      const char* tag = r.outcome == Outcome::kFail ? "fail" : "skip";
      out += "  " + std::string(tag) + " #" + std::to_string(index) + ": " +
             r.detail + "\n";
      if (!r.replay.empty()) out += "    replay: " + r.replay + "\n";
    }
  }
  out += std::string("status: ") + (all_passed() ? "PASS" : "FAIL") + "\n";
  if (config.record_time) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", wall_seconds);
    out += "wall_time_s: " + std::string(buf) + "\n";
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.push_back(s.name);
    return out;
  }();
  return names;
}

std::vector<std::string> check_names(const std::string& suite) {
  std::vector<std::string> out;
  for (const auto& c : find_suite(suite).checks) out.push_back(c.name);
  return out;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

Report run(const std::string& suite_name, const CampaignConfig& config_in) {
  const auto start = std::chrono::steady_clock::now();
  const SuiteDef& suite = find_suite(suite_name);
  if (config_in.samples <= 0) throw DomainError("samples must be positive");
  if (config_in.coeff_bound < 0) throw DomainError("coeff_bound must be positive");
  if (config_in.depth < 0) throw DomainError("depth must be nonnegative");
  for (const auto& name : config_in.checks) {
    const auto names = check_names(suite_name);
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw DomainError("suite " + suite_name + " has no check '" + name + "'");
    }
  }
  Report report;
  report.suite = suite_name;
  report.config = config_in;
  CampaignConfig& config = report.config;
  if (config.coeff_bound == 0) config.coeff_bound = suite.default_bound;
  const int jobs = std::max(1, config.jobs);

  for (const CheckDef& def : suite.checks) {
    if (!config.checks.empty() && !config.checks.count(def.name)) continue;
    std::set<int> degrees;
    if (!def.supported.empty()) {
      degrees = config.degree_set.empty() ? def.defaults : config.degree_set;
    }
    std::vector<SampleResult> results(static_cast<std::size_t>(config.samples));
    auto worker = [&](int offset) {
      for (int i = offset; i < config.samples; i += jobs) {
        results[static_cast<std::size_t>(i)] =
            run_sample(def, degrees, config, config.coeff_bound, i);
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
      for (auto& th : pool) th.join();
    }
    CheckReport cr;
    cr.name = def.name;
    for (int i = 0; i < config.samples; ++i) {
      auto& r = results[static_cast<std::size_t>(i)];
      switch (r.outcome) {
        case Outcome::kPass:
          ++cr.pass;
          break;
        case Outcome::kFail:
          ++cr.fail;
          cr.notes.emplace_back(i, std::move(r));
          break;
        case Outcome::kSkip:
          ++cr.skip;
          cr.notes.emplace_back(i, std::move(r));
          break;
      }
    }
    report.checks.push_back(std::move(cr));
  }
  report.wall_seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
  return report;
}

}  // namespace pfister::campaign
