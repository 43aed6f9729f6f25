#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "negbeta/polynomial.hpp"
#include "negbeta/word.hpp"

namespace negbeta {

// A real algebraic number given by a squarefree defining polynomial and a
// rational interval (lo, hi] containing exactly one of its roots. When the
// root is rational it is stored exactly with lo == hi.
//
// Copies share the refinement state, which is guarded so that concurrent
// readers may refine at the same time.
class AlgebraicNumber {
 public:
  AlgebraicNumber();  // the integer 1
  static AlgebraicNumber rational(const mpq_class& value);
  // poly need not be squarefree; (lo, hi] must isolate a single distinct root.
  AlgebraicNumber(const IntPolynomial& poly, const mpq_class& lo, const mpq_class& hi);

  const IntPolynomial& polynomial() const { return poly_; }
  bool is_rational() const;
  std::optional<mpq_class> exact_value() const;
  bool is_one() const;

  std::pair<mpq_class, mpq_class> interval() const;
  // Refines until hi - lo <= width and returns the new interval.
  std::pair<mpq_class, mpq_class> refine(const mpq_class& width) const;
  // Interval of width at most 2^-bits.
  std::pair<mpq_class, mpq_class> refine_bits(unsigned bits) const;

  mpz_class floor() const;
  double to_double() const;
  // Rounded decimal with the given number of fractional digits.
  std::string decimal(int digits) const;
  // Negative, zero or positive as this is below, at or above x.
  int compare(const mpq_class& x) const;

 private:
  struct State;
  IntPolynomial poly_;
  int sign_lo_ = 0;
  std::shared_ptr<State> state_;
};

Ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
inline bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == Ordering::equal; }
inline bool operator<(const AlgebraicNumber& a, const AlgebraicNumber& b) { return compare(a, b) == Ordering::less; }

// (-x)^j + sum_k (v_k + 1)(-x)^(j-k); the empty word gives 1.
IntPolynomial p_polynomial(const DigitString& v);
// P_{w_1..w_{q+p}} - P_{w_1..w_q} with the canonical preperiod length q,
// normalized to a positive leading coefficient.
IntPolynomial char_polynomial(const EventuallyPeriodicWord& w);
// Largest real root strictly above 1, if any.
std::optional<AlgebraicNumber> largest_root_gt1(const IntPolynomial& poly);
// Distinct real roots strictly above 1, increasing.
std::vector<AlgebraicNumber> real_roots_above_one(const IntPolynomial& poly);
// b(w) for a sup-fixed w: 1 when w <= u, otherwise the largest root of the
// characteristic polynomial.
AlgebraicNumber b_of(const EventuallyPeriodicWord& w);

enum class PisotClass { pisot, perron_not_pisot, neither };
const char* to_string(PisotClass c);

struct PisotReport {
  PisotClass classification = PisotClass::neither;
  IntPolynomial minimal_polynomial;
  // 1 - max conjugate modulus for pisot; beta - max conjugate modulus for
  // perron; certified lower bounds. Zero when not applicable.
  double margin = 0;
  bool algebraic_integer = false;
};

// Minimal polynomial of an algebraic number: the irreducible factor of its
// defining polynomial that vanishes at it.
IntPolynomial minimal_polynomial(const AlgebraicNumber& x);
PisotReport classify_perron_pisot(const AlgebraicNumber& x);

}  // namespace negbeta
