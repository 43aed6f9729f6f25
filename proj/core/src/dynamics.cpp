#include "negbeta/dynamics.hpp"

#include <algorithm>
#include <numeric>

#include "negbeta/error.hpp"

namespace negbeta {

namespace {

mpz_class floor_of(const mpq_class& x) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

bool overlaps(const std::pair<mpq_class, mpq_class>& a, const std::pair<mpq_class, mpq_class>& b) {
  return !(a.second < b.first || b.second < a.first);
}

}  // namespace

BetaField::BetaField(AlgebraicNumber beta, unsigned max_bits)
    : beta_(std::move(beta)), modulus_(beta_.polynomial().to_rational()), max_bits_(max_bits) {
  if (beta_.compare(mpq_class(1)) <= 0) throw domain_error("beta-not-above-one", "the base must exceed 1");
}

BetaField BetaField::rational(const mpq_class& beta, unsigned max_bits) {
  return BetaField(AlgebraicNumber::rational(beta), max_bits);
}

FieldElement BetaField::generator() const { return reduce(FieldElement::monomial(1, 1)); }

FieldElement BetaField::reduce(const RationalPolynomial& e) const {
  if (e.degree() < modulus_.degree()) return e;
  return remainder(e, modulus_);
}

FieldElement BetaField::times_beta(const FieldElement& e) const {
  return reduce(FieldElement::monomial(1, 1) * e);
}

std::pair<mpq_class, mpq_class> BetaField::enclose(const FieldElement& e, unsigned bits) const {
  if (auto v = beta_.exact_value()) {
    mpq_class x = e.evaluate(*v);
    return {x, x};
  }
  auto [lo, hi] = beta_.refine_bits(bits);
  const auto& c = e.coefficients();
  if (c.empty()) return {0, 0};
  mpq_class a = c.back(), b = c.back();
  for (int i = static_cast<int>(c.size()) - 2; i >= 0; --i) {
    // [a,b] * [lo,hi] with 0 < lo
    mpq_class na, nb;
    if (a >= 0) {
      na = a * lo;
      nb = b * hi;
    } else if (b <= 0) {
      na = a * hi;
      nb = b * lo;
    } else {
      na = a * hi;
      nb = b * hi;
    }
    a = na + c[static_cast<std::size_t>(i)];
    b = nb + c[static_cast<std::size_t>(i)];
  }
  return {a, b};
}

bool BetaField::is_zero(const FieldElement& e) const {
  const FieldElement r = reduce(e);
  if (r.is_zero()) return true;
  if (auto v = beta_.exact_value()) return r.evaluate(*v) == 0;
  if (r.degree() == 0) return false;
  const RationalPolynomial g = gcd(modulus_, r);
  if (g.degree() < 1) return false;
  auto [lo, hi] = beta_.interval();
  return SturmSequence(IntPolynomial::primitive_from(g)).count_roots(lo, hi) >= 1;
}

int BetaField::sign(const FieldElement& e) const {
  if (e.is_zero()) return 0;
  bool zero_checked = false;
  for (unsigned bits = kDefaultStartBits;; bits *= 2) {
    auto [lo, hi] = enclose(e, std::min(bits, max_bits_));
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    if (lo == hi) return 0;
    if (!zero_checked) {
      if (is_zero(e)) return 0;
      zero_checked = true;
    }
    if (bits >= max_bits_) {
      throw undecidable_error("sign not settled within " + std::to_string(max_bits_) + " bits; value straddles 0");
    }
  }
}

int BetaField::compare(const FieldElement& a, const FieldElement& b) const {
  if (a == b) return 0;
  return sign(a - b);
}

mpz_class BetaField::floor(const FieldElement& e) const {
  for (unsigned bits = kDefaultStartBits;; bits *= 2) {
    auto [lo, hi] = enclose(e, std::min(bits, max_bits_));
    const mpz_class fl = floor_of(lo), fh = floor_of(hi);
    if (fl == fh) return fl;
    if (fh == fl + 1) {
      const int s = sign(e - FieldElement::constant(mpq_class(fh)));
      return s >= 0 ? fh : fl;
    }
    if (bits >= max_bits_) {
      throw undecidable_error("floor not settled within " + std::to_string(max_bits_) + " bits near " + fh.get_str());
    }
  }
}

double BetaField::to_double(const FieldElement& e) const {
  auto [lo, hi] = enclose(e, 96);
  return mpq_class((lo + hi) / 2).get_d();
}

ExpansionState initial_state(const BetaField& field, const FieldElement& x) {
  if (field.sign(x) <= 0 || field.compare(x, field.constant(1)) > 0) {
    throw domain_error("point-out-of-range", "expansions are defined on (0, 1]");
  }
  return ExpansionState{field.reduce(x), {}};
}

ExpansionState step(const BetaField& field, const ExpansionState& state) {
  const FieldElement y = field.times_beta(state.current);
  const mpz_class d = field.floor(y);
  ExpansionState next;
  next.current = field.reduce(FieldElement::constant(mpq_class(d + 1)) - y);
  next.digits = state.digits;
  next.digits.push_back(static_cast<Digit>(d.get_si()));
  return next;
}

Expansion expansion_of_one(const BetaField& field, std::size_t max_digits, bool detect_period) {
  LazyExpansion lazy(field, max_digits);
  Expansion out;
  if (detect_period) {
    lazy.settle(max_digits);
    if (lazy.word()) {
      out.word = lazy.word();
      out.digits = lazy.word()->prefix(std::min(max_digits, lazy.word()->distinct_tails()));
      return out;
    }
  }
  ExpansionState s{field.constant(1), {}};
  out.orbit.push_back(s.current);
  for (std::size_t k = 0; k < max_digits; ++k) {
    s = step(field, s);
    out.orbit.push_back(s.current);
  }
  out.digits = s.digits;
  return out;
}

LazyExpansion::LazyExpansion(BetaField field, std::size_t max_digits)
    : field_(std::move(field)), max_digits_(max_digits) {
  orbit_.push_back(field_.constant(1));
  boxes_.push_back(field_.enclose(orbit_.back(), kDefaultStartBits));
}

void LazyExpansion::extend() {
  if (word_) return;
  if (digits_.size() >= max_digits_) {
    throw undecidable_error("expansion of 1 not settled within " + std::to_string(max_digits_) + " digits");
  }
  const FieldElement y = field_.times_beta(orbit_.back());
  const mpz_class d = field_.floor(y);
  FieldElement next = field_.reduce(FieldElement::constant(mpq_class(d + 1)) - y);
  digits_.push_back(static_cast<Digit>(d.get_si()));
  auto box = field_.enclose(next, kDefaultStartBits);
  for (std::size_t j = 0; j < orbit_.size(); ++j) {
    if (!overlaps(box, boxes_[j])) continue;
    if (orbit_[j] == next || field_.is_zero(orbit_[j] - next)) {
      // x_k = x_j: digits d_{j+1}..d_k repeat forever.
      word_ = EventuallyPeriodicWord(DigitString(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(j)),
                                     DigitString(digits_.begin() + static_cast<std::ptrdiff_t>(j), digits_.end()));
      lower_ = shift_lower_bound(*word_);
      return;
    }
  }
  orbit_.push_back(std::move(next));
  boxes_.push_back(std::move(box));
}

Digit LazyExpansion::digit(std::size_t k) {
  while (!word_ && digits_.size() < k) extend();
  if (word_) return word_->at(k);
  return digits_[k - 1];
}

Digit LazyExpansion::lower_digit(std::size_t k) {
  if (word_) return lower_->at(k);
  if (k == 1) return 0;
  return digit(k - 1);
}

const std::optional<EventuallyPeriodicWord>& LazyExpansion::settle(std::size_t count) {
  while (!word_ && digits_.size() < count) extend();
  return word_;
}

EventuallyPeriodicWord shift_lower_bound(const EventuallyPeriodicWord& d1) {
  if (d1.purely_periodic() && d1.period_length() % 2 == 1) {
    DigitString per;
    per.push_back(0);
    per.insert(per.end(), d1.period().begin(), d1.period().end() - 1);
    if (d1.period().back() == 0) {
      throw domain_error("invalid-expansion", d1.to_string() + " cannot be an expansion of 1");
    }
    per.push_back(d1.period().back() - 1);
    return EventuallyPeriodicWord::periodic(std::move(per));
  }
  return d1.prepend({0});
}

bool shift_membership(const EventuallyPeriodicWord& w, const EventuallyPeriodicWord& d1) {
  const EventuallyPeriodicWord lower = shift_lower_bound(d1);
  for (std::size_t k = 1; k <= w.distinct_tails(); ++k) {
    const EventuallyPeriodicWord t = w.tail(k);
    if (alt_lex_compare(t, d1) == Ordering::greater) return false;
    if (alt_lex_compare(t, lower) != Ordering::greater) return false;
  }
  return true;
}

namespace {

// Alternating comparison of an eventually periodic word with a lazily
// generated one. Returns nullopt if the lazy word became periodic meanwhile.
enum class Against { expansion, lower };

std::optional<Ordering> lazy_compare(const EventuallyPeriodicWord& t, LazyExpansion& d1, Against which) {
  for (std::size_t k = 1;; ++k) {
    if (d1.word()) return std::nullopt;
    const Digit other = which == Against::expansion ? d1.digit(k) : d1.lower_digit(k);
    if (d1.word()) return std::nullopt;
    const Digit mine = t.at(k);
    if (mine != other) return alt_lex_decide(mine, other, k);
  }
}

}  // namespace

bool shift_membership(const EventuallyPeriodicWord& w, LazyExpansion& d1) {
  d1.settle(256);
  for (std::size_t k = 1; k <= w.distinct_tails(); ++k) {
    if (d1.word()) return shift_membership(w, *d1.word());
    const EventuallyPeriodicWord t = w.tail(k);
    auto upper = lazy_compare(t, d1, Against::expansion);
    if (!upper) return shift_membership(w, *d1.word());
    if (*upper == Ordering::greater) return false;
    auto lower = lazy_compare(t, d1, Against::lower);
    if (!lower) return shift_membership(w, *d1.word());
    if (*lower != Ordering::greater) return false;
  }
  return true;
}

bool validate_expansion(const EventuallyPeriodicWord& w, unsigned max_bits) {
  if (!is_sup_fixed(w)) throw domain_error("sup-not-fixed", w.to_string() + " is not the supremum of its shifts");
  if (compare_with_u(w) == Ordering::less) return false;
  const BetaField field(b_of(w), max_bits);
  const std::size_t q = w.preperiod_length(), p = w.period_length();
  FieldElement x = field.constant(1);
  FieldElement at_q = x;
  for (std::size_t k = 1; k <= q + p; ++k) {
    const FieldElement y = field.times_beta(x);
    const mpz_class d = field.floor(y);
    if (d != w.at(k)) return false;
    x = field.reduce(FieldElement::constant(mpq_class(d + 1)) - y);
    if (k == q) at_q = x;
  }
  return field.compare(x, at_q) == 0;
}

Permutation pat_of_orbit(const BetaField& field, const FieldElement& x, int n) {
  if (n < 1) throw domain_error("pattern-undefined", "pattern length must be positive");
  ExpansionState s = initial_state(field, x);
  std::vector<FieldElement> pts{s.current};
  for (int i = 1; i < n; ++i) {
    s = step(field, s);
    pts.push_back(s.current);
  }
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return field.compare(pts[static_cast<std::size_t>(a)], pts[static_cast<std::size_t>(b)]) < 0;
  });
  for (int i = 0; i + 1 < n; ++i) {
    if (field.compare(pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])],
                      pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i + 1)])]) == 0) {
      throw domain_error("pattern-undefined", "orbit points coincide");
    }
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int rank = 0; rank < n; ++rank) img[static_cast<std::size_t>(idx[static_cast<std::size_t>(rank)])] = rank + 1;
  return Permutation(std::move(img));
}

}  // namespace negbeta
