/* C interface to the pfister library. Every call returns a pf_status; on
 * failure pf_last_error() holds the message for the calling thread. Strings
 * returned through char** are owned by the caller and released with
 * pf_string_free. Handles are released with their *_free function. */
#ifndef PFISTER_PFISTER_H
#define PFISTER_PFISTER_H

#include <stdint.h>

#if defined(_WIN32)
#if defined(PFISTER_BUILDING)
#define PF_API __declspec(dllexport)
#else
#define PF_API __declspec(dllimport)
#endif
#else
#define PF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pf_status {
  PF_OK = 0,
  PF_ERR_DOMAIN = 1,
  PF_ERR_UNSUPPORTED = 2,
  PF_ERR_PARSE = 3,
  PF_ERR_FACTOR_BOUND = 4,
  PF_ERR_INTERNAL = 5,
  PF_ERR_NULL_ARGUMENT = 6
} pf_status;

typedef struct pf_kelement pf_kelement;
typedef struct pf_form pf_form;
typedef struct pf_field pf_field;
typedef struct pf_quadric pf_quadric;

PF_API const char* pf_version(void);
PF_API const char* pf_status_name(pf_status status);
/* Message of the last failed call on this thread, "" if none. */
PF_API const char* pf_last_error(void);
/* Input offset of the last parse error, -1 otherwise. */
PF_API long pf_last_error_position(void);
PF_API void pf_string_free(char* s);

/* Square classes and Hilbert symbols. Numbers are decimal integers or a/b. */
PF_API pf_status pf_squarefree(const char* value, char** out);
/* place is "inf", "2" or an odd prime. */
PF_API pf_status pf_hilbert(const char* a, const char* b, const char* place,
                            int* out);
/* One "place: symbol" line per relevant place, then "product: s". */
PF_API pf_status pf_hilbert_table(const char* a, const char* b, char** out);

/* Milnor K-theory mod 2. */
PF_API pf_status pf_kelement_parse(const char* text, pf_kelement** out);
PF_API void pf_kelement_free(pf_kelement* x);
PF_API pf_status pf_kelement_str(const pf_kelement* x, char** out);
PF_API pf_status pf_kelement_degree(const pf_kelement* x, int* out);
PF_API pf_status pf_kelement_add(const pf_kelement* x, const pf_kelement* y,
                                 pf_kelement** out);
PF_API pf_status pf_kelement_multiply(const pf_kelement* x,
                                      const pf_kelement* y, pf_kelement** out);
PF_API pf_status pf_kelement_is_zero(const pf_kelement* x, int* out);
/* Residue at an odd prime, rendered as text. */
PF_API pf_status pf_kelement_residue(const pf_kelement* x, uint64_t p,
                                     char** out);
PF_API pf_status pf_kelement_phi(const pf_kelement* x, pf_form** out);

/* Diagonal quadratic forms. */
PF_API pf_status pf_form_parse(const char* text, pf_form** out);
PF_API void pf_form_free(pf_form* f);
PF_API pf_status pf_form_str(const pf_form* f, char** out);
PF_API pf_status pf_form_dim(const pf_form* f, int* out);
PF_API pf_status pf_form_invariants(const pf_form* f, char** out);
PF_API pf_status pf_form_witt(const pf_form* f, int* witt_index,
                              pf_form** kernel);
/* *hyperbolic is set for the zero Witt class, *degree otherwise. */
PF_API pf_status pf_form_i_degree(const pf_form* f, int* degree,
                                  int* hyperbolic);
PF_API pf_status pf_form_in_I_power(const pf_form* f, int n, int* out);
PF_API pf_status pf_form_is_hyperbolic(const pf_form* f, int* out);
/* *witness is "(x1, ..., xm)" when isotropic, NULL otherwise. */
PF_API pf_status pf_form_isotropic(const pf_form* f, int* isotropic,
                                   char** witness);
PF_API pf_status pf_form_represents(const pf_form* f, const char* b,
                                    int* represented, char** witness);
PF_API pf_status pf_form_equivalent(const pf_form* f, const pf_form* g,
                                    int* out);

/* Number fields "Q(sqrt d)" or "Q[x]/(f)"; elements are comma separated
 * power-basis coordinates. */
PF_API pf_status pf_field_parse(const char* text, pf_field** out);
PF_API void pf_field_free(pf_field* e);
PF_API pf_status pf_field_str(const pf_field* e, char** out);
PF_API pf_status pf_field_degree(const pf_field* e, int* out);
PF_API pf_status pf_field_real_embeddings(const pf_field* e, int* out);
PF_API pf_status pf_field_norm(const pf_field* e, const char* element,
                               char** out);
/* {N(e)} in K_1; a NULL field means e is a rational number. */
PF_API pf_status pf_transfer_k1(const pf_field* e, const char* element,
                                pf_kelement** out);
/* span is a ';' separated list of elements. */
PF_API pf_status pf_field_simple(const pf_field* e, const char* span,
                                 const char* x, char** out);

/* Norm quadrics of a symbol written "(a1,...,an)" or "{a1,...,an}". */
PF_API pf_status pf_quadric_build(const char* symbol, pf_quadric** out);
PF_API void pf_quadric_free(pf_quadric* q);
PF_API pf_status pf_quadric_form(const pf_quadric* q, pf_form** out);
/* One point per line, "d; (x1, ...)"; the rational point (if any) first. */
PF_API pf_status pf_quadric_points(const pf_quadric* q, int depth, char** out);
PF_API pf_status pf_quadric_witness(const pf_quadric* q, int* verified,
                                    char** out);
/* Zero test of x over the residue field Q(sqrt d) of a point. */
PF_API pf_status pf_specialize_is_zero(const pf_kelement* x, const char* d,
                                       int* out);

/* Verification campaigns. */
typedef struct pf_campaign_config {
  uint64_t seed;
  int samples;
  int64_t coeff_bound; /* 0: suite default */
  const char* degree_set; /* "1,2,3" or NULL for the suite default */
  int depth;
  int jobs;
  int record_time;
  int krs_degree;
  const char* checks; /* comma separated check names or NULL for all */
} pf_campaign_config;

PF_API void pf_campaign_default_config(pf_campaign_config* cfg);
/* Comma separated suite names. */
PF_API pf_status pf_campaign_suites(char** out);
PF_API pf_status pf_campaign_run(const char* suite,
                                 const pf_campaign_config* cfg, char** report,
                                 int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
