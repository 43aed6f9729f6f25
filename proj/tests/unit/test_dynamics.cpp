#include <gtest/gtest.h>

#include "negbeta/algebraic.hpp"
#include "negbeta/dynamics.hpp"
#include "negbeta/error.hpp"
#include "oracles.hpp"

using namespace negbeta;

namespace {

EventuallyPeriodicWord W(const char* s) { return EventuallyPeriodicWord::parse(s); }

BetaField root_field(std::vector<long> descending) {
  return BetaField(*largest_root_gt1(IntPolynomial::from_descending(descending)));
}

}  // namespace

TEST(Dynamics, SingleStep) {
  const auto field = BetaField::rational(2);
  const auto s = step(field, initial_state(field, field.constant(mpq_class(2, 5))));
  EXPECT_EQ(s.digits, (DigitString{0}));
  EXPECT_TRUE(field.is_zero(s.current - field.constant(mpq_class(1, 5))));
}

TEST(Dynamics, ExpansionOfOne) {
  const auto two = expansion_of_one(BetaField::rational(2), 50);
  ASSERT_TRUE(two.word.has_value());
  EXPECT_EQ(two.word->to_string(), "(2)");
  const auto golden = expansion_of_one(root_field({1, -1, -1}), 50);
  ASSERT_TRUE(golden.word.has_value());
  EXPECT_EQ(golden.word->to_string(), "1(0)");
  const auto square = expansion_of_one(root_field({1, -3, 1}), 50);
  ASSERT_TRUE(square.word.has_value());
  EXPECT_EQ(square.word->to_string(), "(21)");
}

TEST(Dynamics, ExpansionDigitsMatchPartialSums) {
  // The partial sums converge to 1 at rate beta^-k.
  const mpq_class beta(7, 3);
  const auto e = expansion_of_one(BetaField::rational(beta), 30, false);
  ASSERT_EQ(e.digits.size(), 30u);
  const mpq_class err = abs(negbeta::testing::partial_sum(beta, e.digits) - 1);
  mpq_class bound = 1;
  for (int k = 0; k < 29; ++k) bound /= beta;
  EXPECT_LE(err, bound);
}

TEST(Dynamics, LazyExpansion) {
  LazyExpansion d1(BetaField::rational(2));
  EXPECT_EQ(d1.digit(1), 2);
  EXPECT_EQ(d1.digit(40), 2);
  const auto& w = d1.settle(10);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, W("(2)"));
}

TEST(Dynamics, ShiftMembership) {
  EXPECT_TRUE(shift_membership(W("(2)"), W("(2)")));
  EXPECT_FALSE(shift_membership(W("(10)"), W("(2)")));
  EXPECT_FALSE(shift_membership(W("110010(2)"), W("(2)")));
  LazyExpansion above(BetaField::rational(mpq_class(41, 20)));
  EXPECT_TRUE(shift_membership(W("110010(2)"), above));
  EXPECT_EQ(shift_lower_bound(W("(2)")), W("(01)"));
  EXPECT_EQ(shift_lower_bound(W("1(0)")), W("01(0)"));
}

TEST(Dynamics, ValidateExpansion) {
  EXPECT_TRUE(validate_expansion(W("(2)")));
  EXPECT_FALSE(validate_expansion(W("(10)")));
  EXPECT_TRUE(validate_expansion(W("21(0)")));
  EXPECT_TRUE(validate_expansion(W("1(0)")));
  EXPECT_FALSE(validate_expansion(W("(100)")));
}

TEST(Dynamics, OrbitPattern) {
  const auto field = BetaField::rational(2);
  EXPECT_EQ(pat_of_orbit(field, field.constant(mpq_class(2, 5)), 3), Permutation::parse("213"));
  // 1 is fixed at base 2.
  try {
    pat_of_orbit(field, field.constant(1), 2);
    FAIL() << "expected pattern-undefined";
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), "pattern-undefined");
  }
}

TEST(Dynamics, OrbitPatternMatchesSampling) {
  const mpq_class beta(13, 10);
  const auto field = BetaField::rational(beta);
  const auto sampled = negbeta::testing::sampled_patterns(5, 1.3, 20000);
  for (int s = 1; s <= 97; s += 8) {
    const mpq_class x(s, 97);
    const auto pi = pat_of_orbit(field, field.constant(x), 5);
    EXPECT_TRUE(sampled.count(pi.image())) << pi.to_string();
  }
}
