#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pfister/error.hpp"
#include "pfister/quadform.hpp"

using namespace pfister;

namespace {
DiagonalForm F(const char* s) { return parse_form(s); }
std::string S(const char* s) { return parse_form(s).str(); }
}  // namespace

TEST(QuadForm, ParseAndRender) {
  EXPECT_EQ(S("<1,-2,-3>"), "<1,-2,-3>");
  EXPECT_EQ(S("⟨1, 18⟩"), "<1,2>");
  EXPECT_EQ(S("<<2,3>>"), "<1,-2,-3,6>");
  EXPECT_EQ(S("⟨⟨-1,-1⟩⟩"), "<1,1,1,1>");
  EXPECT_EQ(S("5*<<-1,-1>>"), "<5,5,5,5>");
  EXPECT_EQ(S("<1> + <-1>"), "<1,-1>");
  EXPECT_THROW(F("<1,0>"), ParseError);
  EXPECT_THROW(F("<1,2"), ParseError);
}

TEST(QuadForm, Constructions) {
  EXPECT_EQ(scale(SquareClass::from_int(2), F("<3>")).str(), "<6>");
  EXPECT_EQ(tensor(F("<1,-2>"), F("<1,-3>")).str(), "<1,-3,-2,6>");
  EXPECT_EQ(orthogonal_sum(F("<1>"), F("<-1>")).str(), "<1,-1>");
  const SquareClass a[] = {SquareClass::from_int(7)};
  EXPECT_EQ(pfister::pfister(a).str(), "<1,-7>");
  EXPECT_EQ(hyperbolic_reference(4).str(), "<1,-1,1,-1>");
}

TEST(QuadForm, Invariants) {
  auto h = invariants(F("<1,-1>"));
  EXPECT_TRUE(h.signed_disc.is_one());
  EXPECT_EQ(h.signature, 0);
  auto p = invariants(F("<1,1>"));
  EXPECT_EQ(p.signed_disc.value(), -1);
  EXPECT_EQ(p.signature, 2);
  const DiagonalForm five = F("<5,5,5,5>");
  const DiagonalForm ref = hyperbolic_reference(4);
  EXPECT_TRUE(signed_discriminant(five).is_one());
  EXPECT_NE(hasse_invariant(five, Place::real()), hasse_invariant(ref, Place::real()));
  EXPECT_NE(hasse_invariant(five, Place::two()), hasse_invariant(ref, Place::two()));
  EXPECT_EQ(hasse_invariant(five, Place::odd(5)), hasse_invariant(ref, Place::odd(5)));
  EXPECT_EQ(signature(five), 4);
}

TEST(QuadForm, IsotropyExamples) {
  auto iso = is_isotropic(F("<1,1,-2>"));
  ASSERT_TRUE(iso.isotropic);
  EXPECT_EQ(F("<1,1,-2>").evaluate(std::span<const BigInt>(iso.witness)), 0);
  EXPECT_FALSE(is_isotropic(F("<1,1,1,1>")).isotropic);
  EXPECT_FALSE(is_isotropic(F("<1,-2,-3,6>")).isotropic);
  EXPECT_TRUE(is_isotropic(F("<1,-1>")).isotropic);
  EXPECT_FALSE(is_isotropic(F("<1>")).isotropic);
  // Dimension 5, indefinite: always isotropic.
  auto five = is_isotropic(F("<1,1,1,1,-7>"));
  ASSERT_TRUE(five.isotropic);
  EXPECT_EQ(F("<1,1,1,1,-7>").evaluate(std::span<const BigInt>(five.witness)), 0);
}

// Ternary forms against Hasse-Minkowski with the Hensel oracle at each place,
// and the witness checked by substitution.
TEST(QuadForm, TernaryIsotropyMatchesLocalOracle) {
  const std::int64_t vals[] = {-1, 1, 2, -2, 3, -3, 5, -5, 6, -6, 7, -7, 10, -15, 21, 35};
  int isotropic = 0, total = 0;
  for (std::int64_t a : vals)
    for (std::int64_t b : vals)
      for (std::int64_t c : vals) {
        if (!(a <= b && b <= c)) continue;
        bool oracle_iso = true;
        for (std::int64_t p : {0, 2, 3, 5, 7}) {
          if (!oracle::ternary_locally_isotropic(a, b, c, p)) oracle_iso = false;
        }
        const DiagonalForm f({SquareClass::from_int(a), SquareClass::from_int(b),
                              SquareClass::from_int(c)});
        const Isotropy iso = is_isotropic(f);
        ASSERT_EQ(iso.isotropic, oracle_iso) << f.str();
        if (iso.isotropic) {
          ++isotropic;
          EXPECT_EQ(f.evaluate(std::span<const BigInt>(iso.witness)), 0);
        }
        ++total;
      }
  EXPECT_GT(isotropic, 20);
  EXPECT_GT(total - isotropic, 20);
}

TEST(QuadForm, SmallVectorSearchAgrees) {
  const std::vector<std::vector<std::int64_t>> forms = {
      {1, 1, -2}, {1, -2, -7}, {1, 1, 1, -3}, {2, 3, -5}, {1, -3, -5, 15}, {1, 2, -3, -6}};
  for (const auto& c : forms) {
    std::vector<SquareClass> cls;
    for (auto v : c) cls.push_back(SquareClass::from_int(v));
    const bool found = oracle::small_isotropic_vector(c, 6);
    const bool decided = decide_isotropic(DiagonalForm(cls));
    if (found) EXPECT_TRUE(decided);
  }
  EXPECT_TRUE(decide_isotropic(F("<1,-2,-7>")));
  EXPECT_TRUE(oracle::small_isotropic_vector({1, -2, -7}, 6));
}

TEST(QuadForm, LegendreSolver) {
  const std::pair<int, int> cases[] = {{2, 7}, {-1, 2}, {3, 13}, {-7, 11}, {5, 29}, {1, -1}};
  for (auto [a, b] : cases) {
    const auto sol = detail::solve_legendre(SquareClass::from_int(a), SquareClass::from_int(b));
    ASSERT_EQ(sol.size(), 3u);
    EXPECT_EQ(sol[2] * sol[2], a * sol[0] * sol[0] + b * sol[1] * sol[1]) << a << "," << b;
    EXPECT_FALSE(sol[0] == 0 && sol[1] == 0 && sol[2] == 0);
  }
}

TEST(QuadForm, WittDecomposition) {
  auto w = witt_decompose(F("<1,-1,1,-1>"));
  EXPECT_EQ(w.witt_index, 2);
  EXPECT_EQ(w.kernel.dim(), 0u);
  w = witt_decompose(F("<1,1,-2>"));
  EXPECT_EQ(w.witt_index, 1);
  EXPECT_EQ(w.kernel.str(), "<2>");
  w = witt_decompose(F("<1,1,1,1>"));
  EXPECT_EQ(w.witt_index, 0);
  EXPECT_EQ(w.kernel.str(), "<1,1,1,1>");
  // The decomposition must reproduce the form: kernel + index * H ~ f.
  const DiagonalForm g = F("<1,2,3,-5,-7,11>");
  w = witt_decompose(g);
  EXPECT_TRUE(equivalent(orthogonal_sum(w.kernel, hyperbolic_reference(2 * w.witt_index)), g));
  EXPECT_FALSE(is_isotropic(w.kernel).isotropic);
}

TEST(QuadForm, Hyperbolicity) {
  EXPECT_TRUE(is_hyperbolic(F("<1,-1>")));
  EXPECT_TRUE(is_hyperbolic(F("<<2,-1>>")));
  EXPECT_FALSE(is_hyperbolic(F("<<-1,-1>>")));
  EXPECT_FALSE(is_hyperbolic(F("<1,-1,1>")));
}

TEST(QuadForm, Represents) {
  auto r = represents(F("<1,1>"), SquareClass::from_int(5));
  ASSERT_TRUE(r.represented);
  EXPECT_EQ(F("<1,1>").evaluate(std::span<const Rational>(r.witness)), 5);
  EXPECT_FALSE(represents(F("<1,1,1,1>"), SquareClass::from_int(-1)).represented);
  r = represents(F("<<-1,-1>>"), SquareClass::from_int(7));
  ASSERT_TRUE(r.represented);
  EXPECT_EQ(F("<1,1,1,1>").evaluate(std::span<const Rational>(r.witness)), 7);
  EXPECT_TRUE(oracle::four_squares(7));
  // Isotropic form: represents everything, including through the s = 0 path.
  r = represents(F("<1,-1>"), SquareClass::from_int(-3));
  ASSERT_TRUE(r.represented);
  EXPECT_EQ(F("<1,-1>").evaluate(std::span<const Rational>(r.witness)), -3);
}

TEST(QuadForm, Equivalence) {
  EXPECT_TRUE(equivalent(F("<5,5,5,5>"), F("<1,1,1,1>")));
  EXPECT_TRUE(equivalent(F("<1,-1>"), F("<2,-2>")));
  EXPECT_FALSE(equivalent(F("<1,1>"), F("<1,-1>")));
  EXPECT_FALSE(equivalent(F("<1,1>"), F("<1,1,1>")));
}

TEST(QuadForm, IDegree) {
  EXPECT_EQ(i_degree(F("<1,1>")), IDegree::finite(1));
  EXPECT_EQ(i_degree(F("<5,5,5,5>")), IDegree::finite(2));
  EXPECT_EQ(i_degree(F("<<-1,-1,-1>>")), IDegree::finite(3));
  EXPECT_EQ(i_degree(F("<1,1,1>")), IDegree::finite(0));
  EXPECT_TRUE(i_degree(F("<1,-1,2,-2>")).is_hyperbolic());
  EXPECT_THROW(i_degree(F("<1,-1>")).value(), DomainError);
  EXPECT_TRUE(i_degree(F("<1,-1>")).at_least(100));
  EXPECT_EQ(i_degree(F("<<-1,-1,-1,-1>>")), IDegree::finite(4));
  EXPECT_THROW(in_I_power(F("<1>"), -1), DomainError);
  EXPECT_TRUE(in_I_power(F("<1>"), 0));
}

TEST(QuadForm, Phi) {
  auto p = phi(parse_kelement("{7}"));
  EXPECT_EQ(p.form.str(), "<1,-7>");
  p = phi(parse_kelement("{2,-1}"));
  EXPECT_TRUE(p.is_zero_mod_next());
  EXPECT_TRUE(is_hyperbolic(p.form));
  p = phi(parse_kelement("{2,3}"));
  EXPECT_EQ(p.form.str(), "<1,-2,-3,6>");
  EXPECT_FALSE(p.is_zero_mod_next());
}
