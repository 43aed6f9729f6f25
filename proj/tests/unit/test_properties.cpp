#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "negbeta/analysis.hpp"
#include "negbeta/error.hpp"
#include "negbeta/inverse.hpp"
#include "oracles.hpp"

using namespace negbeta;

namespace {

constexpr std::uint64_t kSeed = 20240531;

Permutation random_permutation(std::mt19937_64& rng, int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) v[static_cast<std::size_t>(k)] = k + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

}  // namespace

TEST(Properties, AltLexIsATotalOrder) {
  std::mt19937_64 rng(kSeed);
  for (int t = 0; t < 3000; ++t) {
    const auto a = negbeta::testing::random_word(rng, 2, 3, 3);
    const auto b = negbeta::testing::random_word(rng, 2, 3, 3);
    const auto c = negbeta::testing::random_word(rng, 2, 3, 3);
    const Ordering ab = alt_lex_compare(a, b);
    ASSERT_EQ(alt_lex_compare(b, a), reverse(ab));
    ASSERT_EQ(ab == Ordering::equal, a == b);
    if (ab == Ordering::less && alt_lex_compare(b, c) == Ordering::less) {
      ASSERT_EQ(alt_lex_compare(a, c), Ordering::less) << a.to_string() << " " << b.to_string() << " " << c.to_string();
    }
  }
}

TEST(Properties, OrderMatchesValues) {
  // Larger in the alternating order means a larger value of the digit series
  // once beta is large enough that the first difference dominates the tail.
  std::mt19937_64 rng(kSeed + 1);
  const mpq_class beta(4);
  for (int t = 0; t < 500; ++t) {
    const auto a = negbeta::testing::random_word(rng, 2, 2, 3);
    const auto b = negbeta::testing::random_word(rng, 2, 2, 3);
    const std::size_t first = [&] {
      std::size_t k = 1;
      while (k < 60 && a.at(k) == b.at(k)) ++k;
      return k;
    }();
    if (first >= 40) continue;
    const mpq_class va = negbeta::testing::partial_sum(beta, a.prefix(60));
    const mpq_class vb = negbeta::testing::partial_sum(beta, b.prefix(60));
    ASSERT_EQ(alt_lex_compare(a, b) == Ordering::less, va < vb) << a.to_string() << " " << b.to_string();
  }
}

TEST(Properties, PatternOfWordSatisfiesConditions) {
  std::mt19937_64 rng(kSeed + 2);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto w = negbeta::testing::random_word(rng, 3, 4, 4);
    std::uniform_int_distribution<int> len(2, 7);
    const int n = len(rng);
    Permutation pi;
    try {
      pi = pat_of_word(w, n);
    } catch (const Error&) {
      continue;
    }
    ASSERT_TRUE(prop1_check(w, pi)) << w.to_string() << " " << pi.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(Properties, ZCountsAgreeOnLargerPermutations) {
  std::mt19937_64 rng(kSeed + 3);
  for (int t = 0; t < 300; ++t) {
    const auto pi = random_permutation(rng, 8 + t % 9);
    ASSERT_EQ(z_digits_direct(pi), z_digits_circular(pi)) << pi.to_string();
  }
}

TEST(Properties, AlphabetFormulaOnSampledPermutations) {
  std::mt19937_64 rng(kSeed + 4);
  for (int t = 0; t < 200; ++t) {
    const auto pi = random_permutation(rng, 7 + t % 6);
    const auto r = analyze(pi);
    ASSERT_EQ(r.n_minus, r.n_minus_formula) << pi.to_string();
    ASSERT_NE(compare(r.b_minus, AlgebraicNumber::rational(1)), Ordering::less);
  }
}

TEST(Properties, InverseRoundTripOnCorpus) {
  const auto corpus = negbeta::testing::expansion_corpus(2, 4);
  ASSERT_FALSE(corpus.empty());
  for (const auto& w : corpus) {
    const auto r = construct_pi(w);
    ASSERT_TRUE(r.verified) << w.to_string();
    ASSERT_EQ(analyze(r.pi).a, w) << w.to_string();
  }
}
