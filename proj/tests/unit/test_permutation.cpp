#include <gtest/gtest.h>

#include "oracles.hpp"
#include "negbeta/analysis.hpp"
#include "negbeta/error.hpp"
#include "negbeta/permutation.hpp"

using namespace negbeta;

namespace {

Permutation P(const char* s) { return Permutation::parse(s); }

std::vector<std::string> variant_strings(const Permutation& pi) {
  std::vector<std::string> out;
  for (const auto& v : z_variants(pi)) out.push_back(v.to_string());
  return out;
}

}  // namespace

TEST(Permutation, ParseAndPrint) {
  EXPECT_EQ(P("3421").to_string(), "3421");
  EXPECT_EQ(P("3,4,2,1"), P("3421"));
  const auto big = P("10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(big.size(), 10);
  EXPECT_EQ(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
  EXPECT_EQ(P("3421").inverse(1), 4);
  EXPECT_THROW(P("3321"), Error);
  EXPECT_THROW(P("0123"), Error);
  EXPECT_THROW(P(""), Error);
}

TEST(Permutation, Circular) {
  // tilde-pi(pi(j)) = pi(j+1), closing back to pi(1).
  EXPECT_EQ(circular(P("3421")), P("3142"));
  EXPECT_EQ(circular(P("12")), P("21"));
}

TEST(Permutation, Landmarks) {
  const auto lm = landmarks(P("7325416"));
  EXPECT_EQ(lm.m, 1);
  EXPECT_EQ(lm.ell, 4);
  EXPECT_EQ(lm.r, 1);
  const auto top = landmarks(P("3421"));
  EXPECT_EQ(top.m, 2);
  EXPECT_FALSE(top.ell.has_value());
  EXPECT_EQ(top.r, 3);
  const auto bottom = landmarks(P("2314"));
  EXPECT_FALSE(bottom.r.has_value());
  EXPECT_EQ(bottom.ell, 2);
}

TEST(Permutation, ZDigits) {
  EXPECT_EQ(z_digits(P("3421")).to_string(), "110");
  EXPECT_EQ(z_digits(P("453261")).to_string(), "11001");
  EXPECT_EQ(z_digits(P("7325416")).to_string(), "100100");
  EXPECT_EQ(z_digits(P("892364157")).to_string().size(), 8u);
}

TEST(Permutation, CollapsedAndVariants) {
  EXPECT_TRUE(is_collapsed(P("7325416")));
  EXPECT_EQ(variant_strings(P("7325416")), (std::vector<std::string>{"200100", "200210", "211210"}));
  EXPECT_TRUE(is_collapsed(P("1423")));
  EXPECT_EQ(variant_strings(P("1423")), (std::vector<std::string>{"010"}));
  EXPECT_EQ(variant_strings(P("312")), (std::vector<std::string>{"10"}));
  EXPECT_FALSE(is_collapsed(P("3421")));
  EXPECT_THROW(z_variants(P("3421")), Error);
}

TEST(Permutation, ThresholdWord) {
  EXPECT_EQ(a_sequence(P("3421")).to_string(), "(100)");
  EXPECT_EQ(a_sequence(P("453261")).to_string(), "(10)");
  EXPECT_EQ(a_sequence(P("7325416")).to_string(), "211(210)");
  const auto t = threshold_word(P("7325416"));
  EXPECT_EQ(t.digits.to_string(), "211210");
  EXPECT_EQ(t.digits.variant_index.has_value(), true);
}

TEST(Permutation, ZCountsAgreeThroughS7) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& pi : all_permutations(n)) {
      ASSERT_EQ(z_digits_direct(pi), z_digits_circular(pi)) << pi.to_string();
    }
  }
}
