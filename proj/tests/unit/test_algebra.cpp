#include <gtest/gtest.h>

#include "oracles.hpp"
#include "negbeta/algebraic.hpp"
#include "negbeta/polynomial.hpp"
#include "negbeta/word.hpp"

using namespace negbeta;

namespace {

EventuallyPeriodicWord W(const char* s) { return EventuallyPeriodicWord::parse(s); }

}  // namespace

TEST(Polynomial, PPolynomial) {
  EXPECT_EQ(p_polynomial({2}), IntPolynomial::from_descending({-1, 3}));
  EXPECT_EQ(p_polynomial({1, 0}), IntPolynomial::from_descending({1, -2, 1}));
  EXPECT_EQ(p_polynomial({1, 0, 0}), IntPolynomial::from_descending({-1, 2, -1, 1}));
}

TEST(Polynomial, CharacteristicPolynomial) {
  EXPECT_EQ(char_polynomial(W("(10)")).to_string(), "x^2 - 2x");
  EXPECT_EQ(char_polynomial(W("1(0)")).to_string(), "x^2 - x - 1");
  EXPECT_EQ(char_polynomial(W("211(210)")).to_string(), "x^6 - 3x^5 + 2x^4 - x^3 - 1");
}

TEST(Polynomial, DivisionAndGcd) {
  const auto a = IntPolynomial::from_descending({1, 0, -1});
  const auto b = IntPolynomial::from_descending({1, -1});
  const auto q = exact_quotient(a, b);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, IntPolynomial::from_descending({1, 1}));
  EXPECT_FALSE(exact_quotient(a, IntPolynomial::from_descending({1, 2, 5})).has_value());
  EXPECT_EQ(gcd(a, IntPolynomial::from_descending({1, -2, 1})).sign_normalized(), b);
  const auto sq = IntPolynomial::from_descending({1, -2, 1});
  EXPECT_EQ(squarefree_part(sq), b);
}

TEST(Polynomial, SturmCounts) {
  const SturmSequence s(IntPolynomial::from_descending({1, 0, -2}));
  EXPECT_EQ(s.count_roots(-2, 2), 2);
  EXPECT_EQ(s.count_roots(0, 2), 1);
  EXPECT_EQ(s.count_roots(mpq_class(3, 2), 2), 0);
  const SturmSequence none(IntPolynomial::from_descending({1, 0, 1}));
  EXPECT_EQ(none.count_roots(-10, 10), 0);
  EXPECT_GE(cauchy_bound(IntPolynomial::from_descending({1, -3, 2})), 2);
}

TEST(Algebraic, ThresholdValues) {
  EXPECT_TRUE(b_of(W("(100)")).is_one());
  EXPECT_TRUE(b_of(W("(1)")).is_one());
  const auto two = b_of(W("(10)"));
  ASSERT_TRUE(two.exact_value().has_value());
  EXPECT_EQ(*two.exact_value(), 2);
  EXPECT_EQ(b_of(W("1(0)")).decimal(6), "1.618034");
  EXPECT_EQ(b_of(W("211(210)")).decimal(3), "2.343");
  EXPECT_EQ(b_of(W("(301210220)")).decimal(3), "3.831");
}

TEST(Algebraic, RootsAboveOne) {
  const auto r = largest_root_gt1(IntPolynomial::from_descending({1, -2, 0}));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->exact_value(), mpq_class(2));
  EXPECT_FALSE(largest_root_gt1(IntPolynomial::from_descending({1, 0, 1})).has_value());
  const auto roots = real_roots_above_one(IntPolynomial::from_descending({1, -6, 11, -6}));
  ASSERT_EQ(roots.size(), 2u);
  EXPECT_EQ(roots[0].exact_value(), mpq_class(2));
  EXPECT_EQ(roots[1].exact_value(), mpq_class(3));
}

TEST(Algebraic, Ordering) {
  const auto phi = b_of(W("1(0)"));
  const auto two = b_of(W("(10)"));
  EXPECT_EQ(compare(phi, two), Ordering::less);
  EXPECT_EQ(compare(two, AlgebraicNumber::rational(2)), Ordering::equal);
  EXPECT_EQ(phi.floor(), 1);
  EXPECT_GT(phi.compare(mpq_class(8, 5)), 0);
}

TEST(Algebraic, PisotClassification) {
  const auto golden = classify_perron_pisot(b_of(W("1(0)")));
  EXPECT_EQ(golden.classification, PisotClass::pisot);
  EXPECT_EQ(golden.minimal_polynomial.to_string(), "x^2 - x - 1");
  const auto integer = classify_perron_pisot(AlgebraicNumber::rational(3));
  EXPECT_EQ(integer.classification, PisotClass::pisot);
  const auto half = classify_perron_pisot(AlgebraicNumber::rational(mpq_class(5, 2)));
  EXPECT_EQ(half.classification, PisotClass::neither);
  EXPECT_FALSE(half.algebraic_integer);
  const auto perron = largest_root_gt1(IntPolynomial::from_descending({1, -1, -3}));
  ASSERT_TRUE(perron.has_value());
  EXPECT_EQ(classify_perron_pisot(*perron).classification, PisotClass::perron_not_pisot);
}
