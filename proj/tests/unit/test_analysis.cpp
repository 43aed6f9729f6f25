#include <gtest/gtest.h>

#include <set>

#include "negbeta/analysis.hpp"
#include "negbeta/error.hpp"
#include "oracles.hpp"

using namespace negbeta;

namespace {

EventuallyPeriodicWord W(const char* s) { return EventuallyPeriodicWord::parse(s); }
Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::string> names(const std::vector<Permutation>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

}  // namespace

TEST(Analysis, PatternOfWord) {
  EXPECT_EQ(pat_of_word(W("1(100)"), 4), P("3421"));
  EXPECT_EQ(pat_of_word(W("110010(2)"), 6), P("453261"));
  EXPECT_EQ(pat_of_word(W("211210210(2)"), 7), P("7325416"));
  try {
    pat_of_word(W("(10)"), 3);
    FAIL() << "tails 1 and 3 coincide";
  } catch (const Error& e) {
    EXPECT_EQ(e.reason(), "pattern-undefined");
  }
}

TEST(Analysis, RealizabilityConditions) {
  EXPECT_TRUE(prop1_check(W("1(100)"), P("3421")));
  EXPECT_FALSE(prop1_check(W("1(100)"), P("4321")));
  EXPECT_TRUE(prop1_check(W("110010(2)"), P("453261")));
}

TEST(Analysis, WorkedExamples) {
  const auto a = analyze(P("3421"));
  EXPECT_EQ(a.z.to_string(), "110");
  EXPECT_EQ(a.a.to_string(), "(100)");
  EXPECT_TRUE(a.b_minus.is_one());
  EXPECT_EQ(a.n_minus, 2);

  const auto b = analyze(P("453261"));
  EXPECT_EQ(b.a.to_string(), "(10)");
  EXPECT_EQ(b.b_minus.exact_value(), mpq_class(2));
  EXPECT_EQ(b.n_minus, 3);
  EXPECT_EQ(b.n_minus_formula, 3);

  const auto c = analyze(P("7325416"));
  EXPECT_TRUE(c.collapsed);
  EXPECT_EQ(c.chosen.to_string(), "211210");
  EXPECT_EQ(c.a.to_string(), "211(210)");
  EXPECT_EQ(c.b_minus.decimal(3), "2.343");

  const auto d = analyze(P("892364157"));
  ASSERT_TRUE(d.poly.has_value());
  EXPECT_EQ(d.poly->degree(), 8);
  EXPECT_EQ(d.b_minus.decimal(3), "3.831");
}

TEST(Analysis, FourPatternCases) {
  EXPECT_EQ(analyze(P("1423")).a.to_string(), "1(0)");
  EXPECT_TRUE(analyze(P("3142")).b_minus.is_one());
  EXPECT_TRUE(analyze(P("2314")).b_minus.is_one());
  EXPECT_EQ(analyze(P("4231")).b_minus.decimal(6), "1.618034");
}

TEST(Analysis, AlphabetFormula) {
  for (int n = 3; n <= 6; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const auto r = analyze(pi);
      ASSERT_EQ(r.n_minus, r.n_minus_formula) << pi.to_string();
    }
  }
}

TEST(Analysis, SpectrumSmall) {
  const auto s3 = spectrum(3);
  ASSERT_EQ(s3.size(), 2u);
  EXPECT_TRUE(s3[0].value.is_one());
  EXPECT_EQ(names(s3[0].members), (std::vector<std::string>{"123", "132", "213", "231", "321"}));
  EXPECT_EQ(names(s3[1].members), (std::vector<std::string>{"312"}));
  EXPECT_EQ(s3[1].minimal_polynomial.to_string(), "x^2 - x - 1");
  const auto s4 = spectrum(4);
  std::size_t total = 0;
  for (std::size_t k = 0; k < s4.size(); ++k) {
    total += s4[k].members.size();
    if (k > 0) EXPECT_EQ(compare(s4[k - 1].value, s4[k].value), Ordering::less);
  }
  EXPECT_EQ(total, 24u);
}

TEST(Analysis, SpectrumIsJobIndependent) {
  const auto a = spectrum(5, 1), b = spectrum(5, 3);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(names(a[k].members), names(b[k].members));
}

TEST(Analysis, CountB1MatchesOrbitSampling) {
  const auto counts = count_b1(6);
  ASSERT_EQ(counts.size(), 5u);
  EXPECT_EQ(counts, (std::vector<std::int64_t>{2, 5, 12, 19, 34}));
  // Every pattern with threshold 1 appears at base 1.1 and nothing else does,
  // since all thresholds above 1 in this range exceed 1.1.
  for (int n = 3; n <= 6; ++n) {
    const auto sampled = negbeta::testing::sampled_patterns(n, 1.1, 400000);
    std::set<std::vector<int>> exact;
    for (const auto& pi : all_permutations(n)) {
      if (b_minus_is_one(pi)) exact.insert(pi.image());
    }
    EXPECT_EQ(sampled, exact) << "n=" << n;
  }
}

TEST(Analysis, ThresholdOneCharacterization) {
  EXPECT_EQ(b1_exponent(W("(0)")), 0u);
  EXPECT_EQ(b1_exponent(W("(1)")), 1u);
  EXPECT_EQ(b1_exponent(W("(100)")), 2u);
  EXPECT_FALSE(b1_exponent(W("(10)")).has_value());
}

TEST(Analysis, Extremal) {
  for (int n = 3; n <= 5; ++n) {
    const auto r = extremal_report(n);
    EXPECT_TRUE(r.in_range);
    EXPECT_TRUE(r.exhaustive);
    EXPECT_TRUE(r.verified) << n;
  }
  EXPECT_EQ(extremal_report(5).max_word.to_string(), "321(0)");
  EXPECT_EQ(names(extremal_report(5).attaining), (std::vector<std::string>{"54312"}));
}
