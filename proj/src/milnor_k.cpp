#include "pfister/milnor_k.hpp"

#include <algorithm>
#include <set>

#include "pfister/error.hpp"
#include "pfister/text.hpp"

namespace pfister {

std::optional<Symbol> Symbol::make(std::vector<SquareClass> entries) {
  for (const auto& e : entries) {
    if (e.is_one()) return std::nullopt;
  }
  Symbol s;
  s.entries_ = std::move(entries);
  return s;
}

std::optional<Symbol> Symbol::from_rationals(
    std::span<const Rational> entries) {
  std::vector<SquareClass> classes;
  classes.reserve(entries.size());
  for (const auto& q : entries) {
    if (q == 0) throw DomainError("symbol entries must be nonzero");
    classes.push_back(SquareClass::reduce(q));
  }
  return make(std::move(classes));
}

std::optional<Symbol> Symbol::from_ints(std::initializer_list<std::int64_t> v) {
  std::vector<Rational> q(v.begin(), v.end());
  return from_rationals(q);
}

Symbol Symbol::operator*(const Symbol& other) const {
  Symbol s = *this;
  s.entries_.insert(s.entries_.end(), other.entries_.begin(),
                    other.entries_.end());
  return s;
}

std::string Symbol::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += entries_[i].str();
  }
  return out + "}";
}

KElement KElement::zero(int degree) {
  if (degree < 0) throw DomainError("negative degree");
  KElement x;
  x.degree_ = degree;
  return x;
}

KElement KElement::one() { return from_symbol(Symbol()); }

KElement KElement::from_symbol(const Symbol& s) {
  KElement x;
  x.degree_ = static_cast<int>(s.degree());
  x.terms_.push_back(s);
  return x;
}

KElement KElement::from_symbol(const std::optional<Symbol>& s, int degree) {
  if (!s) return zero(degree);
  if (static_cast<int>(s->degree()) != degree) {
    throw DomainError("symbol degree mismatch");
  }
  return from_symbol(*s);
}

KElement KElement::from_terms(int degree, std::vector<Symbol> terms) {
  for (const auto& t : terms) {
    if (static_cast<int>(t.degree()) != degree) {
      throw DomainError("term degree " + std::to_string(t.degree()) +
                        " does not match element degree " +
                        std::to_string(degree));
    }
  }
  std::sort(terms.begin(), terms.end());
  KElement x = zero(degree);
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) x.terms_.push_back(terms[i]);
    i = j;
  }
  return x;
}

std::string KElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) out += "+";
    out += terms_[i].str();
  }
  return out;
}

KElement symbol_element(std::span<const Rational> entries) {
  return KElement::from_symbol(Symbol::from_rationals(entries),
                               static_cast<int>(entries.size()));
}

KElement k_add(const KElement& x, const KElement& y) {
  if (x.degree() != y.degree()) {
    throw DomainError("cannot add elements of degrees " +
                      std::to_string(x.degree()) + " and " +
                      std::to_string(y.degree()));
  }
  std::vector<Symbol> terms = x.terms();
  terms.insert(terms.end(), y.terms().begin(), y.terms().end());
  return KElement::from_terms(x.degree(), std::move(terms));
}

KElement k_multiply(const KElement& x, const KElement& y) {
  std::vector<Symbol> terms;
  terms.reserve(x.terms().size() * y.terms().size());
  for (const auto& s : x.terms()) {
    for (const auto& t : y.terms()) terms.push_back(s * t);
  }
  return KElement::from_terms(x.degree() + y.degree(), std::move(terms));
}

KElement multiply_by_symbol(const KElement& x, const Symbol& alpha) {
  return k_multiply(x, KElement::from_symbol(alpha));
}

bool k_is_zero(const KElement& x) {
  const auto& terms = x.terms();
  switch (x.degree()) {
    case 0:
      return terms.size() % 2 == 0;
    case 1: {
      SquareClass product;
      for (const auto& t : terms) product = product * t.entries()[0];
      return product.is_one();
    }
    case 2: {
      if (terms.empty()) return true;
      std::vector<SquareClass> all;
      for (const auto& t : terms) {
        all.insert(all.end(), t.entries().begin(), t.entries().end());
      }
      for (const Place& v : relevant_places(all)) {
        int product = 1;
        for (const auto& t : terms) {
          product *= hilbert_symbol(t.entries()[0], t.entries()[1], v);
        }
        if (product != 1) return false;
      }
      return true;
    }
    default: {
      std::size_t negative = 0;
      for (const auto& t : terms) {
        if (std::all_of(t.entries().begin(), t.entries().end(),
                        [](const SquareClass& c) { return c.is_negative(); })) {
          ++negative;
        }
      }
      return negative % 2 == 0;
    }
  }
}

bool kernel_member(const SquareClass& b, const Symbol& alpha) {
  auto bs = Symbol::make({b});
  if (!bs) return true;
  return k_is_zero(multiply_by_symbol(KElement::from_symbol(*bs), alpha));
}

std::string FiniteFieldKClass::str() const {
  std::string out = "K" + std::to_string(degree) + "(F" + std::to_string(p) +
                    ")/2: " + std::to_string(bit);
  if (forced_zero) out += " (forced: group is zero)";
  return out;
}

FiniteFieldKClass residue_at_p(const KElement& x, std::uint64_t p) {
  if (p == 2) {
    throw UnsupportedError("the residue at 2 is not supported");
  }
  if (!is_prime_u64(p)) {
    throw DomainError(std::to_string(p) + " is not an odd prime");
  }
  const int n = x.degree();
  if (n < 1 || n > 3) {
    throw DomainError("residue_at_p needs degree 1, 2 or 3, got " +
                      std::to_string(n));
  }
  FiniteFieldKClass out;
  out.p = p;
  out.degree = n - 1;
  if (n - 1 >= 2) {
    out.forced_zero = true;
    return out;
  }
  int bit = 0;
  for (const auto& term : x.terms()) {
    const auto& e = term.entries();
    if (n == 1) {
      if (e[0].divisible_by(p)) bit ^= 1;
      continue;
    }
    // n == 2: expand {u_0 p^v0, u_1 p^v1} multilinearly with {p,p} = {p,-1}.
    const bool v0 = e[0].divisible_by(p);
    const bool v1 = e[1].divisible_by(p);
    auto flip_if_nonsquare = [&](std::uint64_t residue) {
      if (legendre_u64(residue, p) == -1) bit ^= 1;
    };
    if (v0) flip_if_nonsquare(e[1].unit_part_mod(p, p));
    if (v1) flip_if_nonsquare(e[0].unit_part_mod(p, p));
    if (v0 && v1) flip_if_nonsquare(p - 1);
  }
  out.bit = bit;
  return out;
}

namespace {

class ElementParser {
 public:
  explicit ElementParser(std::string_view s) : cur_(s) {}

  KElement parse() {
    KElement x = expr();
    cur_.expect_end();
    return x;
  }

  std::optional<Symbol> lone_symbol() {
    const char open = cur_.peek();
    if (open != '{' && open != '(') cur_.fail("expected '{' or '('");
    auto s = symbol_body(open == '{' ? "}" : ")");
    cur_.expect_end();
    return s;
  }

 private:
  // Parsed value: an element, or the untyped zero literal "0".
  struct Value {
    std::optional<KElement> element;
  };

  KElement expr() {
    Value v = sum();
    return v.element ? *v.element : KElement::zero(0);
  }

  Value sum() {
    Value acc = product();
    while (cur_.accept("+")) {
      const std::size_t at = cur_.pos();
      Value rhs = product();
      acc = combine(acc, rhs, at, /*multiply=*/false);
    }
    return acc;
  }

  Value product() {
    Value acc = atom();
    while (cur_.accept("*")) {
      const std::size_t at = cur_.pos();
      Value rhs = atom();
      acc = combine(acc, rhs, at, /*multiply=*/true);
    }
    return acc;
  }

  Value combine(const Value& a, const Value& b, std::size_t at, bool multiply) {
    if (multiply) {
      if (!a.element || !b.element) return Value{};
      return Value{k_multiply(*a.element, *b.element)};
    }
    if (!a.element) return b;
    if (!b.element) return a;
    if (a.element->degree() != b.element->degree()) {
      throw ParseError("degree mismatch in sum", at);
    }
    return Value{k_add(*a.element, *b.element)};
  }

  Value atom() {
    if (cur_.accept("(")) {
      Value v = sum();
      cur_.expect(")");
      return v;
    }
    if (cur_.peek() == '{') {
      std::size_t degree = 0;
      auto s = symbol_body("}", &degree);
      return Value{KElement::from_symbol(s, static_cast<int>(degree))};
    }
    if (cur_.accept("0")) return Value{};
    cur_.fail("expected a symbol, '(' or 0");
  }

  std::optional<Symbol> symbol_body(std::string_view close,
                                    std::size_t* degree = nullptr) {
    cur_.accept("{") || cur_.accept("(");
    std::vector<Rational> entries;
    if (!cur_.accept(close)) {
      do {
        const std::size_t at = cur_.pos();
        Rational q = cur_.rational();
        if (q == 0) throw ParseError("symbol entry must be nonzero", at);
        entries.push_back(q);
      } while (cur_.accept(","));
      cur_.expect(close);
    }
    if (degree) *degree = entries.size();
    return Symbol::from_rationals(entries);
  }

  text::Cursor cur_;
};

}  // namespace

KElement parse_kelement(std::string_view text) {
  return ElementParser(text).parse();
}

std::optional<Symbol> parse_symbol(std::string_view text) {
  return ElementParser(text).lone_symbol();
}

}  // namespace pfister
