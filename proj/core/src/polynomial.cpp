#include "negbeta/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "negbeta/error.hpp"

namespace negbeta {

int sign(const mpq_class& x) { return sgn(x); }

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<mpq_class> ascending) : c_(std::move(ascending)) {
  for (auto& c : c_) c.canonicalize();
  trim();
}

RationalPolynomial RationalPolynomial::constant(const mpq_class& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::monomial(const mpq_class& c, int degree) {
  std::vector<mpq_class> v(static_cast<std::size_t>(degree + 1), mpq_class(0));
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

void RationalPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class RationalPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpq_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return {};
  const mpq_class lead = leading();
  std::vector<mpq_class> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] / lead;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
  std::vector<mpq_class> v(std::max(a.c_.size(), b.c_.size()), mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> v(a.c_.size() + b.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPolynomial(std::move(v));
}

RationalPolynomial operator*(const mpq_class& s, const RationalPolynomial& a) {
  std::vector<mpq_class> v(a.c_.size());
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] = s * a.c_[i];
  return RationalPolynomial(std::move(v));
}

DivisionResult divide(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("negbeta: polynomial division by zero");
  std::vector<mpq_class> rem = a.coefficients();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {RationalPolynomial{}, a};
  std::vector<mpq_class> quot(static_cast<std::size_t>(da - db + 1), mpq_class(0));
  const mpq_class& lead = b.leading();
  for (int k = da; k >= db; --k) {
    const mpq_class factor = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - db)] = factor;
    if (factor == 0) continue;
    for (int i = 0; i <= db; ++i) rem[static_cast<std::size_t>(k - db + i)] -= factor * b.coeff(i);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial remainder(const RationalPolynomial& a, const RationalPolynomial& b) {
  return divide(a, b).remainder;
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a, y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = remainder(x, y);
    x = std::move(y);
    y = r.is_zero() ? r : r.monic();
  }
  return x.monic();
}

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : c_(std::move(ascending)) { trim(); }

IntPolynomial IntPolynomial::from_ascending(const std::vector<long>& ascending) {
  std::vector<mpz_class> v;
  v.reserve(ascending.size());
  for (long x : ascending) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::from_descending(const std::vector<long>& descending) {
  std::vector<long> asc(descending.rbegin(), descending.rend());
  return from_ascending(asc);
}

IntPolynomial IntPolynomial::primitive_from(const RationalPolynomial& p) {
  if (p.is_zero()) return {};
  mpz_class den = 1;
  for (const auto& c : p.coefficients()) den = lcm(den, mpz_class(c.get_den()));
  std::vector<mpz_class> v;
  v.reserve(p.coefficients().size());
  mpz_class content = 0;
  for (const auto& c : p.coefficients()) {
    mpz_class x = c.get_num() * (den / c.get_den());
    content = gcd(content, x);
    v.push_back(std::move(x));
  }
  if (p.leading() < 0) content = -content;
  for (auto& x : v) x /= content;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  // Horner on numerator and denominator separately keeps the integers exact
  // without repeated canonicalization.
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  // acc / den^deg
  if (c_.empty()) return 0;
  mpz_class d = 1;
  mpz_pow_ui(d.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(c_.size() - 1));
  mpq_class out(acc, d);
  out.canonicalize();
  return out;
}

int IntPolynomial::sign_at(const mpq_class& x) const {
  const mpz_class& num = x.get_num();
  const mpz_class& den = x.get_den();
  mpz_class acc = 0;
  mpz_class den_pow = 1;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<mpz_class> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::sign_normalized() const {
  if (is_zero() || leading() > 0) return *this;
  std::vector<mpz_class> v = c_;
  for (auto& x : v) x = -x;
  return IntPolynomial(std::move(v));
}

RationalPolynomial IntPolynomial::to_rational() const {
  std::vector<mpq_class> v;
  v.reserve(c_.size());
  for (const auto& x : c_) v.emplace_back(x);
  return RationalPolynomial(std::move(v));
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (i == 0 || mag != 1) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> v(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] -= b.c_[i];
  return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> v(a.c_.size() + b.c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  return IntPolynomial::primitive_from(gcd(a.to_rational(), b.to_rational()));
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p.sign_normalized();
  const RationalPolynomial rp = p.to_rational();
  const RationalPolynomial g = gcd(rp, rp.derivative());
  return IntPolynomial::primitive_from(divide(rp, g).quotient);
}

std::optional<IntPolynomial> exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) return std::nullopt;
  DivisionResult d = divide(a.to_rational(), b.to_rational());
  if (!d.remainder.is_zero()) return std::nullopt;
  std::vector<mpz_class> v;
  for (const auto& c : d.quotient.coefficients()) {
    if (c.get_den() != 1) return std::nullopt;
    v.push_back(c.get_num());
  }
  return IntPolynomial(std::move(v));
}

mpq_class cauchy_bound(const IntPolynomial& p) {
  if (p.degree() <= 0) return 1;
  mpz_class top = 0;
  for (int i = 0; i < p.degree(); ++i) top = std::max(top, mpz_class(abs(p.coeff(i))));
  mpq_class out(top, abs(p.leading()));
  out.canonicalize();
  return out + 1;
}

// ---------------------------------------------------------------------------
// Sturm

SturmSequence::SturmSequence(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("negbeta: Sturm sequence of the zero polynomial");
  chain_.push_back(p);
  IntPolynomial d = p.derivative();
  if (d.is_zero()) return;
  chain_.push_back(d);
  RationalPolynomial a = p.to_rational(), b = d.to_rational();
  for (;;) {
    RationalPolynomial r = remainder(a, b);
    if (r.is_zero()) break;
    r = mpq_class(-1) * r;
    // primitive_from only rescales by a positive factor when the sign of the
    // leading coefficient is kept, so flip back if it normalized a negative.
    IntPolynomial ir = IntPolynomial::primitive_from(r);
    if (r.leading() < 0) ir = IntPolynomial() - ir;
    chain_.push_back(ir);
    a = std::move(b);
    b = std::move(r);
  }
}

int SturmSequence::sign_variations(const mpq_class& x) const {
  int variations = 0;
  int prev = 0;
  for (const auto& poly : chain_) {
    const int s = poly.sign_at(x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int SturmSequence::count_roots(const mpq_class& lo, const mpq_class& hi) const {
  if (hi <= lo) return 0;
  return sign_variations(lo) - sign_variations(hi);
}

}  // namespace negbeta
