#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negbeta/algebraic.hpp"
#include "negbeta/permutation.hpp"
#include "negbeta/polynomial.hpp"
#include "negbeta/word.hpp"

namespace negbeta {

inline constexpr unsigned kDefaultStartBits = 128;
inline constexpr unsigned kDefaultMaxBits = 4096;

// An element of Q(beta), stored as a rational polynomial in beta reduced
// modulo beta's defining polynomial.
using FieldElement = RationalPolynomial;

// Exact arithmetic in Q(beta) for a real algebraic beta > 1. Rational beta
// is the degree-one case. Signs are decided by interval evaluation with
// precision doubling, backed by an exact zero test (gcd with the defining
// polynomial having a root in beta's isolating interval).
class BetaField {
 public:
  explicit BetaField(AlgebraicNumber beta, unsigned max_bits = kDefaultMaxBits);
  static BetaField rational(const mpq_class& beta, unsigned max_bits = kDefaultMaxBits);

  const AlgebraicNumber& beta() const { return beta_; }
  unsigned max_bits() const { return max_bits_; }

  FieldElement constant(const mpq_class& c) const { return FieldElement::constant(c); }
  FieldElement generator() const;
  FieldElement reduce(const RationalPolynomial& e) const;
  FieldElement times_beta(const FieldElement& e) const;

  // Closed rational interval containing e(beta), computed from an enclosure
  // of beta of width 2^-bits.
  std::pair<mpq_class, mpq_class> enclose(const FieldElement& e, unsigned bits) const;
  bool is_zero(const FieldElement& e) const;
  int sign(const FieldElement& e) const;
  int compare(const FieldElement& a, const FieldElement& b) const;
  mpz_class floor(const FieldElement& e) const;
  double to_double(const FieldElement& e) const;

 private:
  AlgebraicNumber beta_;
  RationalPolynomial modulus_;
  unsigned max_bits_;
};

struct ExpansionState {
  FieldElement current;   // T^k(x)
  DigitString digits;     // d_1 .. d_k
};

ExpansionState initial_state(const BetaField& field, const FieldElement& x);
// One application of x -> floor(beta x) + 1 - beta x, recording the digit.
ExpansionState step(const BetaField& field, const ExpansionState& state);

struct Expansion {
  DigitString digits;                         // the digits computed
  std::optional<EventuallyPeriodicWord> word; // set when an exact orbit repeat was found
  std::vector<FieldElement> orbit;            // x_0 = 1, x_1, ...
};

// Expansion of 1 in base -beta; stops at max_digits or at the first exact
// orbit repeat when detect_period is set.
Expansion expansion_of_one(const BetaField& field, std::size_t max_digits, bool detect_period = true);

// d_{-beta}(1) generated on demand, with period detection as it goes.
class LazyExpansion {
 public:
  explicit LazyExpansion(BetaField field, std::size_t max_digits = 1u << 16);

  Digit digit(std::size_t k);  // 1-based
  // Digit k of the admissibility lower bound.
  Digit lower_digit(std::size_t k);
  // Computes up to `count` digits looking for periodicity.
  const std::optional<EventuallyPeriodicWord>& settle(std::size_t count);
  const std::optional<EventuallyPeriodicWord>& word() const { return word_; }
  const BetaField& field() const { return field_; }

 private:
  void extend();
  BetaField field_;
  std::size_t max_digits_;
  DigitString digits_;
  std::vector<FieldElement> orbit_;
  std::vector<std::pair<mpq_class, mpq_class>> boxes_;
  std::optional<EventuallyPeriodicWord> word_;
  std::optional<EventuallyPeriodicWord> lower_;
};

// (0 d_1 .. d_{p-1} (d_p - 1))^inf when d1 is purely periodic with odd
// period p, and 0 d1 otherwise.
EventuallyPeriodicWord shift_lower_bound(const EventuallyPeriodicWord& d1);
// Every tail t of w satisfies lower < t <= d1.
bool shift_membership(const EventuallyPeriodicWord& w, const EventuallyPeriodicWord& d1);
bool shift_membership(const EventuallyPeriodicWord& w, LazyExpansion& d1);

// Whether w is d_{-b(w)}(1). Words with b(w) = 1 are never expansions.
bool validate_expansion(const EventuallyPeriodicWord& w, unsigned max_bits = kDefaultMaxBits);

// Ordinal pattern of x, T(x), ..., T^{n-1}(x).
Permutation pat_of_orbit(const BetaField& field, const FieldElement& x, int n);

}  // namespace negbeta
