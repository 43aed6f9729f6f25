#include <gtest/gtest.h>

#include <random>

#include "negbeta/error.hpp"
#include "negbeta/word.hpp"
#include "oracles.hpp"

using namespace negbeta;

namespace {

EventuallyPeriodicWord W(const char* s) { return EventuallyPeriodicWord::parse(s); }

}  // namespace

TEST(AltLex, DecidesByParity) {
  EXPECT_EQ(alt_lex_decide(0, 1, 1), Ordering::less);
  EXPECT_EQ(alt_lex_decide(0, 1, 2), Ordering::greater);
  EXPECT_EQ(alt_lex_compare(W("(1)"), W("(10)")), Ordering::less);
  EXPECT_EQ(alt_lex_compare(W("21(0)"), W("21(0)")), Ordering::equal);
  EXPECT_EQ(alt_lex_compare(DigitString{1, 0}, DigitString{1, 1}), Ordering::greater);
}

TEST(Word, CanonicalForm) {
  const EventuallyPeriodicWord a({2, 1}, {0, 0});
  EXPECT_EQ(a.preperiod(), (DigitString{2, 1}));
  EXPECT_EQ(a.period(), (DigitString{0}));
  const EventuallyPeriodicWord b({1, 0}, {1, 0});
  EXPECT_TRUE(b.purely_periodic());
  EXPECT_EQ(b.period(), (DigitString{1, 0}));
  const EventuallyPeriodicWord c({0}, {1, 0});
  EXPECT_EQ(c, W("(01)"));
}

TEST(Word, ParsePrintRoundTrip) {
  for (const char* s : {"330121023(301210220)", "(2)", "21(0)", "1(100)", "211(210)"}) {
    EXPECT_EQ(W(s).to_string(), s);
  }
  EXPECT_EQ(W("3,3,0(3,0,1)"), W("330(301)"));
  const auto big = W("12,0(11)");
  EXPECT_EQ(big.at(1), 12);
  EXPECT_EQ(EventuallyPeriodicWord::parse(big.to_string()), big);
  EXPECT_THROW(W("12("), Error);
  EXPECT_THROW(W("()"), Error);
}

TEST(Word, AccessAndTails) {
  const auto w = W("110010(2)");
  EXPECT_EQ(w.at(1), 1);
  EXPECT_EQ(w.at(7), 2);
  EXPECT_EQ(w.at(100), 2);
  EXPECT_EQ(w.tail(3), W("0010(2)"));
  EXPECT_EQ(w.prefix(8), (DigitString{1, 1, 0, 0, 1, 0, 2, 2}));
  EXPECT_EQ(W("(100)").prepend({1}), W("1(100)"));
  EXPECT_EQ(w.max_digit(), 2);
}

TEST(Word, AnchoredForm) {
  const auto f = anchored_form(W("(2)"));
  EXPECT_EQ(f.q, 1u);
  EXPECT_EQ(f.p, 1u);
  EXPECT_EQ(f.digits(), (DigitString{2, 2}));
  const auto g = anchored_form(W("21(0)"));
  EXPECT_EQ(g.q, 3u);
  EXPECT_EQ(g.p, 1u);
}

TEST(Word, SupOfShifts) {
  EXPECT_EQ(sup_of_shifts(W("330121023(301210220)")), W("(301210220)"));
  EXPECT_EQ(sup_of_shifts(W("1(100)")), W("(100)"));
  EXPECT_EQ(sup_of_shifts(W("(2)")), W("(2)"));
  EXPECT_EQ(sup_of_shifts(W("(12)")), W("(21)"));
  EXPECT_TRUE(is_sup_fixed(W("21(0)")));
  EXPECT_FALSE(is_sup_fixed(W("(12)")));
}

TEST(Word, DerivedWord) {
  EXPECT_EQ(derived_word({2}), (DigitString{1, 0}));
  EXPECT_EQ(derived_word({1, 0}), (DigitString{2}));
  EXPECT_EQ(derived_word({1, 0, 0}), (DigitString{1, 1}));
  EXPECT_EQ(derived_word({3, 0, 1, 2, 1, 0, 2, 3}), (DigitString{3, 0, 1, 2, 1, 0, 2, 2, 0}));
  EXPECT_EQ(derived_word({2, 1, 0}), (DigitString{2, 2}));
  EXPECT_THROW(derived_word({0}), Error);
}

TEST(Word, Primitivity) {
  EXPECT_EQ(primitivity_class({1, 0, 0}), Primitivity::primitive);
  EXPECT_EQ(primitivity_class({1, 1}), Primitivity::almost_primitive_square);
  EXPECT_EQ(primitivity_class({1, 0, 1, 0}), Primitivity::imprimitive);
  EXPECT_EQ(primitive_root({1, 0, 1, 0}), (DigitString{1, 0}));
}

TEST(Word, Substitution) {
  EXPECT_EQ(phi_power(0), (DigitString{0}));
  EXPECT_EQ(phi_power(2), (DigitString{1, 0, 0}));
  EXPECT_EQ(digits_to_string(phi_power(4)), "10011100100");
  EXPECT_EQ(digits_to_string(u_prefix(1)), "1");
  EXPECT_EQ(digits_to_string(u_prefix(9)), "100111001");
  EXPECT_EQ(digits_to_string(u_prefix(21)), "100111001001001110011");
  EXPECT_EQ(compare_with_u(W("(100)")), Ordering::less);
  EXPECT_EQ(compare_with_u(W("(2)")), Ordering::greater);
}

TEST(Word, ConcatenationFamily) {
  EXPECT_TRUE(in_vv_prime_star(W("(2)"), {2}));
  EXPECT_TRUE(in_vv_prime_star(W("(210)"), {2}));
  EXPECT_THROW(in_vv_prime_star(W("(12)"), {2}), Error);
}

TEST(Word, ConcatenationCharacterizationsAgree) {
  // Order-based and automaton-based membership in {v, v'}^inf.
  std::mt19937_64 rng(7);
  int compared = 0;
  for (int t = 0; t < 3000 && compared < 400; ++t) {
    const auto w = sup_of_shifts(negbeta::testing::random_word(rng, 3, 3, 4));
    std::uniform_int_distribution<int> len(1, 3), dig(0, 3);
    DigitString v(static_cast<std::size_t>(len(rng)));
    for (auto& d : v) d = dig(rng);
    if (v.size() == 1 && v[0] == 0) continue;
    if (v.back() == 0 && v.size() == 1) continue;
    DigitString v2;
    try {
      v2 = derived_word(v);
    } catch (const Error&) {
      continue;
    }
    EXPECT_EQ(in_vv_prime_star(w, v), factorizes_over(w, v, v2)) << w.to_string() << " v=" << digits_to_string(v);
    ++compared;
  }
  EXPECT_GT(compared, 100);
}
