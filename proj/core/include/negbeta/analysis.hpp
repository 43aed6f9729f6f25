#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "negbeta/algebraic.hpp"
#include "negbeta/permutation.hpp"
#include "negbeta/polynomial.hpp"
#include "negbeta/word.hpp"

namespace negbeta {

// Permutation recording the alternating-lex order of the tails w_[1,inf),
// ..., w_[n,inf). Throws pattern-undefined when two of them coincide.
Permutation pat_of_word(const EventuallyPeriodicWord& w, int n);

// The three-condition realizability test. With `periodized`, the tails at
// l and r are replaced by the periodizations of w_[l,n) and w_[r,n).
bool prop1_check(const EventuallyPeriodicWord& w, const Permutation& pi, bool periodized = false);

// k with a = (phi^k(0))^inf, which characterizes threshold base 1.
std::optional<unsigned> b1_exponent(const EventuallyPeriodicWord& a);
bool b_minus_is_one(const Permutation& pi);

struct AnalysisReport {
  Permutation pi;
  Landmarks landmarks;
  DigitVector z;
  std::vector<DigitVector> variants;
  bool collapsed = false;
  DigitVector chosen;  // z or the minimizing variant
  EventuallyPeriodicWord a;
  std::optional<IntPolynomial> poly;  // characteristic polynomial of a when B > 1
  AlgebraicNumber b_minus;
  std::int64_t n_minus = 0;           // floor(B) + 1
  std::int64_t n_minus_formula = 0;   // max z + 1 + epsilon
  int epsilon = 0;
  std::optional<unsigned> b1_exponent;
  std::optional<IntPolynomial> minimal_polynomial;
};

struct AnalyzeOptions {
  bool minimal_polynomial = false;
};

// Requires n >= 2.
AnalysisReport analyze(const Permutation& pi, const AnalyzeOptions& options = {});

// All permutations of size n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

inline constexpr int kEnumerationBound = 10;

// c_2 .. c_{n_max}: how many permutations of each size have threshold 1.
std::vector<std::int64_t> count_b1(int n_max, unsigned jobs = 1);

struct SpectrumGroup {
  AlgebraicNumber value;
  IntPolynomial minimal_polynomial;
  std::vector<Permutation> members;  // lexicographic
};
// Groups all of S_n by exact threshold value, in increasing order.
std::vector<SpectrumGroup> spectrum(int n, unsigned jobs = 1);

struct ExtremalReport {
  int n = 0;
  EventuallyPeriodicWord max_word;          // (n-2)(n-3)...1(0)^inf
  AlgebraicNumber max_value;                // b of max_word
  bool in_range = false;                    // n-2 < max < n-1
  bool exhaustive = false;                  // whether S_n was enumerated
  std::optional<AlgebraicNumber> observed_max;
  std::vector<Permutation> attaining;       // observed
  std::vector<Permutation> expected_attaining;
  std::vector<Permutation> top_alphabet;    // observed N = n-1
  std::vector<Permutation> expected_top_alphabet;
  bool verified = false;
};
ExtremalReport extremal_report(int n, unsigned jobs = 1);

}  // namespace negbeta
