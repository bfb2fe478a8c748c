#include <gtest/gtest.h>

#include "pfister/error.hpp"
#include "pfister/milnor_k.hpp"

using namespace pfister;

namespace {
KElement K(const char* s) { return parse_kelement(s); }
}  // namespace

TEST(MilnorK, SymbolConstruction) {
  auto s = Symbol::from_ints({18, -1});
  ASSERT_TRUE(s);
  EXPECT_EQ(s->str(), "{2,-1}");
  EXPECT_FALSE(Symbol::from_ints({4, 7}));
  EXPECT_EQ(Symbol::from_ints({2, 3, 5})->str(), "{2,3,5}");
  EXPECT_THROW(Symbol::from_ints({0, 3}), DomainError);
}

TEST(MilnorK, Addition) {
  EXPECT_EQ(k_add(K("{2,3}"), K("{2,3}")).str(), "0");
  EXPECT_EQ(k_add(K("{2,3}"), K("{5,7}")).str(), "{2,3}+{5,7}");
  EXPECT_EQ(k_add(K("{2,3}"), KElement::zero(2)), K("{2,3}"));
  EXPECT_THROW(k_add(K("{2}"), K("{2,3}")), DomainError);
}

TEST(MilnorK, Multiplication) {
  EXPECT_EQ(k_multiply(K("{7}"), K("{2,3}")).str(), "{7,2,3}");
  EXPECT_EQ(k_multiply(K("{2}+{3}"), K("{5}")).str(), "{2,5}+{3,5}");
  EXPECT_EQ(k_multiply(KElement::one(), K("{2,3}")), K("{2,3}"));
  EXPECT_EQ(multiply_by_symbol(K("{2}"), *Symbol::from_ints({-1, -1})).str(),
            "{2,-1,-1}");
}

TEST(MilnorK, ZeroTest) {
  EXPECT_TRUE(k_is_zero(K("{2,-1}")));
  EXPECT_FALSE(k_is_zero(K("{2,3}")));
  EXPECT_FALSE(k_is_zero(K("{-1,-1,-1}")));
  EXPECT_TRUE(k_is_zero(K("{-1,-1,-1}+{-2,-3,-5}")));
  EXPECT_TRUE(k_is_zero(K("{-1,-1,2}")));
  EXPECT_TRUE(k_is_zero(K("{4}")));
  EXPECT_FALSE(k_is_zero(K("{3}+{5}")));
  EXPECT_TRUE(k_is_zero(K("{3}+{12}")));
  EXPECT_FALSE(k_is_zero(KElement::one()));
  EXPECT_TRUE(k_is_zero(k_add(KElement::one(), KElement::one())));
}

// {2,2} = {2,-1} and (2,-1)_v = +1 at every place, so {2,2} vanishes.
TEST(MilnorK, TwoTwoIsZero) {
  const KElement x = k_multiply(K("{2}"), K("{2}"));
  EXPECT_EQ(x.str(), "{2,2}");
  EXPECT_TRUE(k_is_zero(x));
  EXPECT_TRUE(k_is_zero(k_add(x, K("{2,-1}"))));
}

TEST(MilnorK, KernelMember) {
  const auto mm = *Symbol::from_ints({-1, -1});
  EXPECT_TRUE(kernel_member(SquareClass::from_int(2), mm));
  EXPECT_FALSE(kernel_member(SquareClass::from_int(-1), mm));
  EXPECT_TRUE(kernel_member(SquareClass(), *Symbol::from_ints({2, 3})));
}

TEST(MilnorK, Residue) {
  auto r = residue_at_p(K("{3,2}"), 3);
  EXPECT_EQ(r.degree, 1);
  EXPECT_EQ(r.bit, 1);
  EXPECT_EQ(residue_at_p(K("{2,3}"), 5).bit, 0);
  EXPECT_EQ(residue_at_p(K("{3,4}"), 3).bit, 0);
  EXPECT_EQ(residue_at_p(K("{3}"), 3).bit, 1);
  EXPECT_EQ(residue_at_p(K("{5}"), 3).bit, 0);
  // {3,3} = {3,-1}, residue (-1 | 3) = -1.
  EXPECT_EQ(residue_at_p(K("{3,3}"), 3).bit, 1);
  EXPECT_EQ(residue_at_p(K("{5,5}"), 5).bit, 0);
  auto r3 = residue_at_p(K("{3,2,5}"), 3);
  EXPECT_TRUE(r3.forced_zero);
  EXPECT_EQ(r3.bit, 0);
  EXPECT_THROW(residue_at_p(K("{3,2}"), 2), UnsupportedError);
  EXPECT_THROW(residue_at_p(K("{3,2}"), 9), DomainError);
  EXPECT_THROW(residue_at_p(K("{3,2,5,7}"), 3), DomainError);
}

TEST(MilnorK, Parsing) {
  EXPECT_EQ(K("{18, -1}").str(), "{2,-1}");
  EXPECT_EQ(K("({2}+{3})*{5}").str(), "{2,5}+{3,5}");
  EXPECT_EQ(K("{1/2,3}").str(), "{2,3}");
  EXPECT_EQ(K("{4,3}").degree(), 2);
  EXPECT_TRUE(K("{4,3}").is_formally_zero());
  EXPECT_EQ(K("{}").str(), "{}");
  EXPECT_EQ(K("0 + {2}").str(), "{2}");
  try {
    K("{2,3}+{5}");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(K("{2,0}"), ParseError);
  EXPECT_THROW(K("{2,3"), ParseError);
  EXPECT_THROW(K("{2,3} junk"), ParseError);
  EXPECT_EQ(parse_symbol("(2,3)")->str(), "{2,3}");
}
