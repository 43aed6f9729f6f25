#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace negbeta {

// Univariate polynomial with rational coefficients in ascending degree order.
// Always trimmed: the zero polynomial has no coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<mpq_class> ascending);
  static RationalPolynomial constant(const mpq_class& c);
  static RationalPolynomial monomial(const mpq_class& c, int degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpq_class coeff(int i) const;
  const mpq_class& leading() const { return c_.back(); }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  mpq_class evaluate(const mpq_class& x) const;
  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b);
  friend RationalPolynomial operator*(const mpq_class& s, const RationalPolynomial& a);
  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpq_class> c_;
};

struct DivisionResult {
  RationalPolynomial quotient;
  RationalPolynomial remainder;
};
DivisionResult divide(const RationalPolynomial& a, const RationalPolynomial& b);
RationalPolynomial remainder(const RationalPolynomial& a, const RationalPolynomial& b);
// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

// Integer-coefficient polynomial, ascending degree order, trimmed.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> ascending);
  // Convenience for literals, e.g. {1, -1, -1} for 1 - x - x^2.
  static IntPolynomial from_ascending(const std::vector<long>& ascending);
  static IntPolynomial from_descending(const std::vector<long>& descending);
  // Scales a rational polynomial to a primitive integer one with positive
  // leading coefficient. Roots are unchanged.
  static IntPolynomial primitive_from(const RationalPolynomial& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  mpz_class coeff(int i) const;
  const mpz_class& leading() const { return c_.back(); }
  const std::vector<mpz_class>& coefficients() const { return c_; }

  mpq_class evaluate(const mpq_class& x) const;
  int sign_at(const mpq_class& x) const;
  IntPolynomial derivative() const;
  // Positive leading coefficient, same roots.
  IntPolynomial sign_normalized() const;
  RationalPolynomial to_rational() const;

  // Descending human form, e.g. "x^3 - 2x^2 - x + 1".
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<mpz_class> c_;
};

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);
// a / b when b divides a over the integers.
std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b);
// 1 + max |a_i / a_n|; every root has modulus below it.
mpq_class cauchy_bound(const IntPolynomial& p);

// Sturm chain p, p', -rem(...), ... for counting distinct real roots.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& p);
  int sign_variations(const mpq_class& x) const;
  // Distinct real roots in the half-open interval (lo, hi].
  int count_roots(const mpq_class& lo, const mpq_class& hi) const;
  const IntPolynomial& polynomial() const { return chain_.front(); }

 private:
  std::vector<IntPolynomial> chain_;
};

int sign(const mpq_class& x);

}  // namespace negbeta
