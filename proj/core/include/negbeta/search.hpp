#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "negbeta/algebraic.hpp"
#include "negbeta/dynamics.hpp"
#include "negbeta/permutation.hpp"
#include "negbeta/word.hpp"

namespace negbeta {

struct SearchBounds {
  int max_prefix = 0;
  int max_period = 0;
  // 2n for both when left at zero.
  static SearchBounds defaults(int n) { return {2 * n, 2 * n}; }
};

struct AlphabetResult {
  int alphabet = 0;
  EventuallyPeriodicWord witness;
};

// Smallest N such that a word over {0..N-1} realizes pi. Every word with
// preperiod <= max_prefix and period <= max_period has all its first n tails
// separated within max_prefix + max_period + n digits, so the search over
// prefixes of that length is exhaustive for those words. Throws
// search-inconclusive when no alphabet up to max_alphabet works.
AlphabetResult min_alphabet_bruteforce(const Permutation& pi, int max_prefix = 0, int max_period = 0, int max_alphabet = 0);

// Exhaustive search for a word pre (per)^inf with |pre| <= max_prefix,
// 1 <= |per| <= max_period, realizing pi and admissible for the given
// expansion of 1.
std::optional<EventuallyPeriodicWord> find_admissible_realization(const Permutation& pi, LazyExpansion& d1,
                                                                  const SearchBounds& bounds);

struct Witness {
  EventuallyPeriodicWord word;
  mpq_class beta;            // the base it was checked against
  std::string construction;  // "threshold", "perturbed", or "search"
};

// A realizing word admissible at a rational base within [B + margin,
// B + margin + 1/1000].
Witness witness_word(const Permutation& pi, double margin, const SearchBounds& bounds = {});

// Rational bases bracketing B: at least B + margin and at most B - margin.
mpq_class base_above(const AlgebraicNumber& b, double margin);
mpq_class base_below(const AlgebraicNumber& b, double margin);

struct SandwichReport {
  AlgebraicNumber b_minus;
  Witness above;
  bool below_checked = false;                       // false when B - margin <= 1
  mpq_class below_beta;
  std::optional<EventuallyPeriodicWord> below_found;
  bool at_checked = false;                          // false when B = 1
  std::optional<EventuallyPeriodicWord> at_found;
  bool consistent = false;
};

SandwichReport verify_sandwich(const Permutation& pi, double margin, const SearchBounds& bounds = {});

}  // namespace negbeta
