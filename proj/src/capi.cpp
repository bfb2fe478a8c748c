#include "pfister/pfister.h"

#include <cstdlib>
#include <cstring>
#include <sstream>

#include "pfister/campaign.hpp"
#include "pfister/error.hpp"
#include "pfister/milnor_k.hpp"
#include "pfister/norm_quadric.hpp"
#include "pfister/numfield.hpp"
#include "pfister/quadform.hpp"
#include "pfister/text.hpp"

struct pf_kelement {
  pfister::KElement value;
};
struct pf_form {
  pfister::DiagonalForm value;
};
struct pf_field {
  pfister::FieldPtr value;
};
struct pf_quadric {
  pfister::NormQuadric value;
};

namespace {

thread_local std::string g_error;
thread_local long g_error_pos = -1;

pf_status status_of(pfister::ErrorCode c) {
  switch (c) {
    case pfister::ErrorCode::kDomain:
      return PF_ERR_DOMAIN;
    case pfister::ErrorCode::kUnsupported:
      return PF_ERR_UNSUPPORTED;
    case pfister::ErrorCode::kParse:
      return PF_ERR_PARSE;
    case pfister::ErrorCode::kFactorBound:
      return PF_ERR_FACTOR_BOUND;
    case pfister::ErrorCode::kInternal:
      return PF_ERR_INTERNAL;
  }
  return PF_ERR_INTERNAL;
}

template <typename F>
pf_status guard(F&& body) {
  g_error.clear();
  g_error_pos = -1;
  try {
    body();
    return PF_OK;
  } catch (const pfister::ParseError& e) {
    g_error = e.what();
    g_error_pos = static_cast<long>(e.position());
    return PF_ERR_PARSE;
  } catch (const pfister::Error& e) {
    g_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_error = e.what();
    return PF_ERR_INTERNAL;
  }
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pfister::Rational parse_number(const char* s) {
  pfister::text::Cursor cur(s);
  pfister::Rational q = cur.rational();
  cur.expect_end();
  return q;
}

pfister::SquareClass parse_class(const char* s) {
  const pfister::Rational q = parse_number(s);
  if (q == 0) throw pfister::DomainError("zero has no square class");
  return pfister::SquareClass::reduce(q);
}

std::string vector_str(const std::vector<pfister::BigInt>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += pfister::to_string(v[i]);
  }
  return out + ")";
}

std::string vector_str(const std::vector<pfister::Rational>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += pfister::to_string(v[i]);
  }
  return out + ")";
}

std::set<int> parse_int_set(const char* s) {
  std::set<int> out;
  if (!s || !*s) return out;
  pfister::text::Cursor cur(s);
  do {
    const std::size_t at = cur.pos();
    const pfister::BigInt v = cur.integer();
    if (v < 0 || v > 64) throw pfister::ParseError("degree out of range", at);
    out.insert(v.convert_to<int>());
  } while (cur.accept(","));
  cur.expect_end();
  return out;
}

std::set<std::string> parse_name_set(const char* s) {
  std::set<std::string> out;
  if (!s || !*s) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

pfister::FieldElement parse_element(const pfister::FieldPtr& f, const char* s) {
  return pfister::FieldElement::parse(f, s);
}

}  // namespace

extern "C" {

PF_API const char* pf_version(void) { return "1.0.0"; }

PF_API const char* pf_status_name(pf_status status) {
  switch (status) {
    case PF_OK:
      return "ok";
    case PF_ERR_DOMAIN:
      return "domain error";
    case PF_ERR_UNSUPPORTED:
      return "unsupported";
    case PF_ERR_PARSE:
      return "parse error";
    case PF_ERR_FACTOR_BOUND:
      return "factorization bound exceeded";
    case PF_ERR_INTERNAL:
      return "internal error";
    case PF_ERR_NULL_ARGUMENT:
      return "null argument";
  }
  return "unknown";
}

PF_API const char* pf_last_error(void) { return g_error.c_str(); }
PF_API long pf_last_error_position(void) { return g_error_pos; }
PF_API void pf_string_free(char* s) { std::free(s); }

PF_API pf_status pf_squarefree(const char* value, char** out) {
  if (!value || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(parse_class(value).str()); });
}

PF_API pf_status pf_hilbert(const char* a, const char* b, const char* place,
                            int* out) {
  if (!a || !b || !place || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    *out = pfister::hilbert_symbol(parse_class(a), parse_class(b),
                                   pfister::Place::parse(place));
  });
}

PF_API pf_status pf_hilbert_table(const char* a, const char* b, char** out) {
  if (!a || !b || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    const pfister::SquareClass ca = parse_class(a), cb = parse_class(b);
    const pfister::SquareClass both[] = {ca, cb};
    std::string text;
    int product = 1;
    for (const auto& v : pfister::relevant_places(both)) {
      const int h = pfister::hilbert_symbol(ca, cb, v);
      product *= h;
      text += v.str() + ": " + std::to_string(h) + "\n";
    }
    text += "product: " + std::to_string(product) + "\n";
    *out = dup(text);
  });
}

PF_API pf_status pf_kelement_parse(const char* text, pf_kelement** out) {
  if (!text || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new pf_kelement{pfister::parse_kelement(text)}; });
}

PF_API void pf_kelement_free(pf_kelement* x) { delete x; }

PF_API pf_status pf_kelement_str(const pf_kelement* x, char** out) {
  if (!x || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(x->value.str()); });
}

PF_API pf_status pf_kelement_degree(const pf_kelement* x, int* out) {
  if (!x || !out) return PF_ERR_NULL_ARGUMENT;
  *out = x->value.degree();
  return PF_OK;
}

PF_API pf_status pf_kelement_add(const pf_kelement* x, const pf_kelement* y,
                                 pf_kelement** out) {
  if (!x || !y || !out) return PF_ERR_NULL_ARGUMENT;
  return guard(
      [&] { *out = new pf_kelement{pfister::k_add(x->value, y->value)}; });
}

PF_API pf_status pf_kelement_multiply(const pf_kelement* x,
                                      const pf_kelement* y, pf_kelement** out) {
  if (!x || !y || !out) return PF_ERR_NULL_ARGUMENT;
  return guard(
      [&] { *out = new pf_kelement{pfister::k_multiply(x->value, y->value)}; });
}

PF_API pf_status pf_kelement_is_zero(const pf_kelement* x, int* out) {
  if (!x || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = pfister::k_is_zero(x->value) ? 1 : 0; });
}

PF_API pf_status pf_kelement_residue(const pf_kelement* x, uint64_t p,
                                     char** out) {
  if (!x || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(pfister::residue_at_p(x->value, p).str()); });
}

PF_API pf_status pf_kelement_phi(const pf_kelement* x, pf_form** out) {
  if (!x || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new pf_form{pfister::phi(x->value).form}; });
}

PF_API pf_status pf_form_parse(const char* text, pf_form** out) {
  if (!text || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new pf_form{pfister::parse_form(text)}; });
}

PF_API void pf_form_free(pf_form* f) { delete f; }

PF_API pf_status pf_form_str(const pf_form* f, char** out) {
  if (!f || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(f->value.str()); });
}

PF_API pf_status pf_form_dim(const pf_form* f, int* out) {
  if (!f || !out) return PF_ERR_NULL_ARGUMENT;
  *out = static_cast<int>(f->value.dim());
  return PF_OK;
}

PF_API pf_status pf_form_invariants(const pf_form* f, char** out) {
  if (!f || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(pfister::invariants(f->value).str()); });
}

PF_API pf_status pf_form_witt(const pf_form* f, int* witt_index,
                              pf_form** kernel) {
  if (!f || !witt_index || !kernel) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    auto w = pfister::witt_decompose(f->value);
    *witt_index = w.witt_index;
    *kernel = new pf_form{std::move(w.kernel)};
  });
}

PF_API pf_status pf_form_i_degree(const pf_form* f, int* degree,
                                  int* hyperbolic) {
  if (!f || !degree || !hyperbolic) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto d = pfister::i_degree(f->value);
    *hyperbolic = d.is_hyperbolic() ? 1 : 0;
    *degree = d.is_hyperbolic() ? -1 : d.value();
  });
}

PF_API pf_status pf_form_in_I_power(const pf_form* f, int n, int* out) {
  if (!f || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = pfister::in_I_power(f->value, n) ? 1 : 0; });
}

PF_API pf_status pf_form_is_hyperbolic(const pf_form* f, int* out) {
  if (!f || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = pfister::is_hyperbolic(f->value) ? 1 : 0; });
}

PF_API pf_status pf_form_isotropic(const pf_form* f, int* isotropic,
                                   char** witness) {
  if (!f || !isotropic || !witness) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto iso = pfister::is_isotropic(f->value);
    *isotropic = iso.isotropic ? 1 : 0;
    *witness = iso.isotropic ? dup(vector_str(iso.witness)) : nullptr;
  });
}

PF_API pf_status pf_form_represents(const pf_form* f, const char* b,
                                    int* represented, char** witness) {
  if (!f || !b || !represented || !witness) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto r = pfister::represents(f->value, parse_class(b));
    *represented = r.represented ? 1 : 0;
    *witness = r.represented ? dup(vector_str(r.witness)) : nullptr;
  });
}

PF_API pf_status pf_form_equivalent(const pf_form* f, const pf_form* g,
                                    int* out) {
  if (!f || !g || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = pfister::equivalent(f->value, g->value) ? 1 : 0; });
}

PF_API pf_status pf_field_parse(const char* text, pf_field** out) {
  if (!text || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new pf_field{pfister::NumberField::parse(text)}; });
}

PF_API void pf_field_free(pf_field* e) { delete e; }

PF_API pf_status pf_field_str(const pf_field* e, char** out) {
  if (!e || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = dup(e->value->str()); });
}

PF_API pf_status pf_field_degree(const pf_field* e, int* out) {
  if (!e || !out) return PF_ERR_NULL_ARGUMENT;
  *out = e->value->degree();
  return PF_OK;
}

PF_API pf_status pf_field_real_embeddings(const pf_field* e, int* out) {
  if (!e || !out) return PF_ERR_NULL_ARGUMENT;
  *out = e->value->real_embedding_count();
  return PF_OK;
}

PF_API pf_status pf_field_norm(const pf_field* e, const char* element,
                               char** out) {
  if (!e || !element || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    *out = dup(pfister::to_string(parse_element(e->value, element).norm()));
  });
}

PF_API pf_status pf_transfer_k1(const pf_field* e, const char* element,
                                pf_kelement** out) {
  if (!element || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    if (!e) {
      const pfister::Rational q = parse_number(element);
      const pfister::Rational one[] = {q};
      *out = new pf_kelement{pfister::symbol_element(one)};
      return;
    }
    *out = new pf_kelement{
        pfister::transfer_k1(parse_element(e->value, element))};
  });
}

PF_API pf_status pf_field_simple(const pf_field* e, const char* span,
                                 const char* x, char** out) {
  if (!e || !span || !x || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    std::vector<pfister::FieldElement> basis;
    std::stringstream ss(span);
    std::string item;
    while (std::getline(ss, item, ';')) {
      basis.push_back(parse_element(e->value, item.c_str()));
    }
    const auto xe = parse_element(e->value, x);
    const auto sol = pfister::simple_quotient_solve(e->value, basis, xe);
    std::string text = "v1 = " + sol.v1.str() + "\n";
    text += "v2 = " + sol.v2.str() + "\n";
    text += "v1 coordinates: " + vector_str(sol.v1_in_span) + "\n";
    text += "v2 coordinates: " + vector_str(sol.v2_in_span) + "\n";
    text += std::string("check x*v2 == v1: ") +
            (xe * sol.v2 == sol.v1 ? "ok" : "FAILED") + "\n";
    *out = dup(text);
  });
}

PF_API pf_status pf_quadric_build(const char* symbol, pf_quadric** out) {
  if (!symbol || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto s = pfister::parse_symbol(symbol);
    if (!s) {
      throw pfister::DomainError("symbol has an entry that is a square");
    }
    *out = new pf_quadric{pfister::NormQuadric::build(*s)};
  });
}

PF_API void pf_quadric_free(pf_quadric* q) { delete q; }

PF_API pf_status pf_quadric_form(const pf_quadric* q, pf_form** out) {
  if (!q || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] { *out = new pf_form{q->value.form()}; });
}

PF_API pf_status pf_quadric_points(const pf_quadric* q, int depth, char** out) {
  if (!q || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    std::string text;
    if (auto pt = pfister::rational_point(q->value)) {
      text += "rational " + pt->str() + "\n";
    }
    const auto pairs = pfister::pair_points(q->value);
    for (const auto& pt : pairs) text += "pair " + pt.str() + "\n";
    for (int r = 1; r <= depth; ++r) {
      for (const auto& pt : pfister::section_points(q->value, r)) {
        text += "section " + std::to_string(r) + " " + pt.str() + "\n";
      }
    }
    *out = dup(text);
  });
}

PF_API pf_status pf_quadric_witness(const pf_quadric* q, int* verified,
                                    char** out) {
  if (!q || !verified || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto w = pfister::generic_isotropy_witness(q->value.alpha());
    *verified = pfister::verify(w) ? 1 : 0;
    *out = dup(w.str());
  });
}

PF_API pf_status pf_specialize_is_zero(const pf_kelement* x, const char* d,
                                       int* out) {
  if (!x || !d || !out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    pfister::QuadricPoint pt;
    pt.d = parse_class(d);
    *out = pfister::specialize(x->value, pt).is_zero() ? 1 : 0;
  });
}

PF_API void pf_campaign_default_config(pf_campaign_config* cfg) {
  if (!cfg) return;
  const pfister::campaign::CampaignConfig d;
  cfg->seed = d.seed;
  cfg->samples = d.samples;
  cfg->coeff_bound = d.coeff_bound;
  cfg->degree_set = nullptr;
  cfg->depth = d.depth;
  cfg->jobs = d.jobs;
  cfg->record_time = d.record_time ? 1 : 0;
  cfg->krs_degree = d.krs_degree;
  cfg->checks = nullptr;
}

PF_API pf_status pf_campaign_suites(char** out) {
  if (!out) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    std::string text;
    for (const auto& s : pfister::campaign::suite_names()) {
      if (!text.empty()) text += ",";
      text += s;
    }
    *out = dup(text);
  });
}

PF_API pf_status pf_campaign_run(const char* suite,
                                 const pf_campaign_config* cfg, char** report,
                                 int* all_passed) {
  if (!suite || !cfg || !report || !all_passed) return PF_ERR_NULL_ARGUMENT;
  return guard([&] {
    pfister::campaign::CampaignConfig c;
    c.seed = cfg->seed;
    c.samples = cfg->samples;
    c.coeff_bound = cfg->coeff_bound;
    c.degree_set = parse_int_set(cfg->degree_set);
    c.depth = cfg->depth;
    c.jobs = cfg->jobs;
    c.record_time = cfg->record_time != 0;
    c.krs_degree = cfg->krs_degree;
    c.checks = parse_name_set(cfg->checks);
    const auto r = pfister::campaign::run(suite, c);
    *report = dup(r.render());
    *all_passed = r.all_passed() ? 1 : 0;
  });
}

}  // extern "C"
