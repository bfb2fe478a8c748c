#include <gtest/gtest.h>

#include <string>

#include "pfister/pfister.h"

namespace {
std::string take(char* s) {
  std::string out = s ? s : "";
  pf_string_free(s);
  return out;
}
}  // namespace

TEST(CApi, StatusNamesAndVersion) {
  EXPECT_STRNE(pf_version(), "");
  EXPECT_STREQ(pf_status_name(PF_OK), "ok");
  EXPECT_STRNE(pf_status_name(PF_ERR_PARSE), pf_status_name(PF_ERR_DOMAIN));
}

TEST(CApi, Hilbert) {
  int h = 0;
  ASSERT_EQ(pf_hilbert("2", "3", "3", &h), PF_OK);
  EXPECT_EQ(h, -1);
  ASSERT_EQ(pf_hilbert("-1", "-1", "inf", &h), PF_OK);
  EXPECT_EQ(h, -1);
  EXPECT_EQ(pf_hilbert("2", "3", "4", &h), PF_ERR_DOMAIN);
  EXPECT_EQ(pf_hilbert("0", "3", "3", &h), PF_ERR_DOMAIN);
  EXPECT_EQ(pf_hilbert(nullptr, "3", "3", &h), PF_ERR_NULL_ARGUMENT);
  char* s = nullptr;
  ASSERT_EQ(pf_squarefree("-72/5", &s), PF_OK);
  EXPECT_EQ(take(s), "-10");
  ASSERT_EQ(pf_hilbert_table("2", "3", &s), PF_OK);
  EXPECT_NE(take(s).find("product: 1"), std::string::npos);
}

TEST(CApi, KElements) {
  pf_kelement* x = nullptr;
  ASSERT_EQ(pf_kelement_parse("{2,-1}", &x), PF_OK);
  int z = -1, d = 0;
  ASSERT_EQ(pf_kelement_is_zero(x, &z), PF_OK);
  EXPECT_EQ(z, 1);
  ASSERT_EQ(pf_kelement_degree(x, &d), PF_OK);
  EXPECT_EQ(d, 2);
  pf_kelement* y = nullptr;
  ASSERT_EQ(pf_kelement_parse("{3}", &y), PF_OK);
  pf_kelement* p = nullptr;
  ASSERT_EQ(pf_kelement_multiply(x, y, &p), PF_OK);
  char* s = nullptr;
  ASSERT_EQ(pf_kelement_str(p, &s), PF_OK);
  EXPECT_EQ(take(s), "{2,-1,3}");
  pf_kelement* sum = nullptr;
  EXPECT_EQ(pf_kelement_add(x, y, &sum), PF_ERR_DOMAIN);
  EXPECT_EQ(sum, nullptr);
  ASSERT_EQ(pf_kelement_residue(y, 3, &s), PF_OK);
  EXPECT_EQ(take(s), "K0(F3)/2: 1");
  pf_form* f = nullptr;
  ASSERT_EQ(pf_kelement_phi(y, &f), PF_OK);
  ASSERT_EQ(pf_form_str(f, &s), PF_OK);
  EXPECT_EQ(take(s), "<1,-3>");
  pf_form_free(f);
  pf_kelement_free(p);
  pf_kelement_free(x);
  pf_kelement_free(y);
  pf_kelement_free(nullptr);
}

TEST(CApi, ParseErrorPosition) {
  pf_kelement* x = nullptr;
  EXPECT_EQ(pf_kelement_parse("{2,", &x), PF_ERR_PARSE);
  EXPECT_EQ(x, nullptr);
  EXPECT_EQ(pf_last_error_position(), 3);
  EXPECT_STRNE(pf_last_error(), "");
  pf_form* f = nullptr;
  ASSERT_EQ(pf_form_parse("<1>", &f), PF_OK);
  EXPECT_EQ(pf_last_error_position(), -1);
  pf_form_free(f);
}

TEST(CApi, Forms) {
  pf_form* f = nullptr;
  ASSERT_EQ(pf_form_parse("<1,1,-2>", &f), PF_OK);
  int iso = 0;
  char* w = nullptr;
  ASSERT_EQ(pf_form_isotropic(f, &iso, &w), PF_OK);
  EXPECT_EQ(iso, 1);
  EXPECT_EQ(take(w).front(), '(');
  int index = 0;
  pf_form* kernel = nullptr;
  ASSERT_EQ(pf_form_witt(f, &index, &kernel), PF_OK);
  EXPECT_EQ(index, 1);
  char* s = nullptr;
  ASSERT_EQ(pf_form_str(kernel, &s), PF_OK);
  EXPECT_EQ(take(s), "<2>");
  pf_form_free(kernel);
  int rep = 0;
  ASSERT_EQ(pf_form_represents(f, "7", &rep, &w), PF_OK);
  EXPECT_EQ(rep, 1);
  pf_string_free(w);
  pf_form_free(f);

  ASSERT_EQ(pf_form_parse("<5,5,5,5>", &f), PF_OK);
  int deg = 0, hyp = 0;
  ASSERT_EQ(pf_form_i_degree(f, &deg, &hyp), PF_OK);
  EXPECT_EQ(deg, 2);
  EXPECT_EQ(hyp, 0);
  int in = 0;
  ASSERT_EQ(pf_form_in_I_power(f, 3, &in), PF_OK);
  EXPECT_EQ(in, 0);
  pf_form* g = nullptr;
  ASSERT_EQ(pf_form_parse("<<-1,-1>>", &g), PF_OK);
  int eq = 0;
  ASSERT_EQ(pf_form_equivalent(f, g, &eq), PF_OK);
  EXPECT_EQ(eq, 1);
  pf_form_free(f);
  pf_form_free(g);
}

TEST(CApi, Fields) {
  pf_field* e = nullptr;
  ASSERT_EQ(pf_field_parse("Q[x]/(x^3-2)", &e), PF_OK);
  int d = 0, r = 0;
  ASSERT_EQ(pf_field_degree(e, &d), PF_OK);
  ASSERT_EQ(pf_field_real_embeddings(e, &r), PF_OK);
  EXPECT_EQ(d, 3);
  EXPECT_EQ(r, 1);
  char* s = nullptr;
  ASSERT_EQ(pf_field_norm(e, "1,1", &s), PF_OK);
  EXPECT_EQ(take(s), "3");
  ASSERT_EQ(pf_field_simple(e, "1;0,1", "0,0,1", &s), PF_OK);
  EXPECT_NE(take(s).find("ok"), std::string::npos);
  pf_kelement* t = nullptr;
  ASSERT_EQ(pf_transfer_k1(e, "0,1", &t), PF_OK);
  ASSERT_EQ(pf_kelement_str(t, &s), PF_OK);
  EXPECT_EQ(take(s), "{2}");
  pf_kelement_free(t);
  ASSERT_EQ(pf_transfer_k1(nullptr, "-3/4", &t), PF_OK);
  ASSERT_EQ(pf_kelement_str(t, &s), PF_OK);
  EXPECT_EQ(take(s), "{-3}");
  pf_kelement_free(t);
  pf_field_free(e);
  EXPECT_EQ(pf_field_parse("Q[x]/(x^2-4)", &e), PF_ERR_DOMAIN);
}

TEST(CApi, Quadrics) {
  pf_quadric* q = nullptr;
  ASSERT_EQ(pf_quadric_build("(2,3)", &q), PF_OK);
  char* s = nullptr;
  ASSERT_EQ(pf_quadric_points(q, 1, &s), PF_OK);
  const std::string pts = take(s);
  EXPECT_NE(pts.find("pair -6; "), std::string::npos);
  int ok = 0;
  ASSERT_EQ(pf_quadric_witness(q, &ok, &s), PF_OK);
  EXPECT_EQ(ok, 1);
  pf_string_free(s);
  pf_quadric_free(q);
  EXPECT_EQ(pf_quadric_build("(2)", &q), PF_ERR_DOMAIN);

  pf_kelement* x = nullptr;
  ASSERT_EQ(pf_kelement_parse("{2}", &x), PF_OK);
  int z = 0;
  ASSERT_EQ(pf_specialize_is_zero(x, "2", &z), PF_OK);
  EXPECT_EQ(z, 1);
  ASSERT_EQ(pf_specialize_is_zero(x, "3", &z), PF_OK);
  EXPECT_EQ(z, 0);
  pf_kelement_free(x);
}

TEST(CApi, Campaign) {
  pf_campaign_config cfg;
  pf_campaign_default_config(&cfg);
  cfg.samples = 10;
  cfg.seed = 4;
  char* report = nullptr;
  int passed = 0;
  ASSERT_EQ(pf_campaign_run("milnor", &cfg, &report, &passed), PF_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_EQ(take(report).rfind("pfister-report v1", 0), 0u);
  EXPECT_EQ(pf_campaign_run("bogus", &cfg, &report, &passed), PF_ERR_DOMAIN);
  char* suites = nullptr;
  ASSERT_EQ(pf_campaign_suites(&suites), PF_OK);
  EXPECT_NE(take(suites).find("lemma-simple"), std::string::npos);
}
