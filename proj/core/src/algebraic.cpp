#include "negbeta/algebraic.hpp"

#include <algorithm>
#include <mutex>

#include "negbeta/error.hpp"

namespace negbeta {

struct AlgebraicNumber::State {
  std::mutex mu;
  mpq_class lo;
  mpq_class hi;
  bool exact = false;
};

namespace {

mpq_class midpoint(const mpq_class& a, const mpq_class& b) {
  mpq_class m = (a + b) / 2;
  m.canonicalize();
  return m;
}

mpq_class pow2_inverse(unsigned bits) {
  mpz_class den = 1;
  den <<= bits;
  return mpq_class(mpz_class(1), den);
}

std::vector<mpz_class> small_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  mpz_class a = abs(n);
  if (a > 1000000000) return out;
  const long v = a.get_si();
  for (long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.emplace_back(d);
    if (d != v / d) out.emplace_back(v / d);
  }
  return out;
}

}  // namespace

AlgebraicNumber::AlgebraicNumber() : AlgebraicNumber(rational(1)) {}

AlgebraicNumber AlgebraicNumber::rational(const mpq_class& value) {
  mpq_class v = value;
  v.canonicalize();
  // d x - n
  IntPolynomial poly(std::vector<mpz_class>{-v.get_num(), v.get_den()});
  return AlgebraicNumber(poly, v, v);
}

AlgebraicNumber::AlgebraicNumber(const IntPolynomial& poly, const mpq_class& lo, const mpq_class& hi)
    : poly_(squarefree_part(poly)), state_(std::make_shared<State>()) {
  if (poly_.degree() < 1) throw std::invalid_argument("negbeta: algebraic number needs a nonconstant polynomial");
  State& s = *state_;
  s.lo = lo;
  s.hi = hi;
  if (lo == hi) {
    NEGBETA_CHECK(poly_.sign_at(lo) == 0, "exact algebraic value is not a root");
    s.exact = true;
  }
  if (!s.exact && poly_.degree() == 1) {
    mpq_class root(-poly_.coeff(0), poly_.coeff(1));
    root.canonicalize();
    NEGBETA_CHECK(root > lo && root <= hi, "linear root outside isolating interval");
    s.lo = s.hi = root;
    s.exact = true;
  }
  if (!s.exact && poly_.sign_at(s.hi) == 0) {
    s.lo = s.hi;
    s.exact = true;
  }
  if (!s.exact && poly_.sign_at(s.lo) == 0) {
    // lo is a neighbouring root; move it inside while keeping the target.
    SturmSequence sturm(poly_);
    while (poly_.sign_at(s.lo) == 0) {
      mpq_class mid = midpoint(s.lo, s.hi);
      if (sturm.count_roots(mid, s.hi) >= 1) {
        s.lo = mid;
      } else {
        s.hi = mid;
        if (poly_.sign_at(s.hi) == 0) {
          s.lo = s.hi;
          s.exact = true;
          break;
        }
      }
    }
  }
  if (s.exact) return;
  sign_lo_ = poly_.sign_at(s.lo);
  // Rational roots have a denominator dividing the leading coefficient.
  const mpz_class lead = poly_.leading();
  const std::vector<mpz_class> divisors = small_divisors(lead);
  if (divisors.empty()) return;
  const mpq_class width(mpz_class(1), abs(lead) * 2);
  while (s.hi - s.lo > width) {
    mpq_class mid = midpoint(s.lo, s.hi);
    int sm = poly_.sign_at(mid);
    if (sm == 0) {
      s.lo = s.hi = mid;
      s.exact = true;
      return;
    }
    if (sm == sign_lo_) s.lo = mid; else s.hi = mid;
  }
  for (const auto& d : divisors) {
    mpq_class scaled = s.hi * d;
    mpz_class k;
    mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    mpq_class cand(k, d);
    cand.canonicalize();
    if (cand > s.lo && cand <= s.hi && poly_.sign_at(cand) == 0) {
      s.lo = s.hi = cand;
      s.exact = true;
      return;
    }
  }
}

bool AlgebraicNumber::is_rational() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->exact;
}

std::optional<mpq_class> AlgebraicNumber::exact_value() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  if (!state_->exact) return std::nullopt;
  return state_->lo;
}

bool AlgebraicNumber::is_one() const {
  auto v = exact_value();
  return v && *v == 1;
}

std::pair<mpq_class, mpq_class> AlgebraicNumber::interval() const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return {state_->lo, state_->hi};
}

std::pair<mpq_class, mpq_class> AlgebraicNumber::refine(const mpq_class& width) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  State& s = *state_;
  while (!s.exact && s.hi - s.lo > width) {
    mpq_class mid = midpoint(s.lo, s.hi);
    const int sm = poly_.sign_at(mid);
    if (sm == 0) {
      s.lo = s.hi = mid;
      s.exact = true;
    } else if (sm == sign_lo_) {
      s.lo = mid;
    } else {
      s.hi = mid;
    }
  }
  return {s.lo, s.hi};
}

std::pair<mpq_class, mpq_class> AlgebraicNumber::refine_bits(unsigned bits) const {
  return refine(pow2_inverse(bits));
}

int AlgebraicNumber::compare(const mpq_class& x) const {
  auto [lo, hi] = interval();
  if (lo == hi) return sgn(mpq_class(lo - x));
  if (x <= lo) return 1;
  if (x >= hi) return -1;
  const int sx = poly_.sign_at(x);
  if (sx == 0) return 0;
  // The sign stays sign_lo_ from lo up to the root.
  return sx == sign_lo_ ? 1 : -1;
}

mpz_class AlgebraicNumber::floor() const {
  for (;;) {
    auto [lo, hi] = interval();
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    if (lo == hi) return fl;
    const mpq_class k = fl + 1;
    if (k >= hi) return fl;
    const int c = compare(k);
    if (c == 0) return fl + 1;
    if (c < 0) return fl;
    // Root lies above k: narrow from below.
    std::lock_guard<std::mutex> lock(state_->mu);
    if (!state_->exact && state_->lo < k) state_->lo = k;
  }
}

double AlgebraicNumber::to_double() const {
  auto [lo, hi] = refine(pow2_inverse(64));
  return midpoint(lo, hi).get_d();
}

std::string AlgebraicNumber::decimal(int digits) const {
  mpz_class scale = 1;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  auto [lo, hi] = refine(mpq_class(mpz_class(1), scale * 1000));
  mpq_class v = midpoint(lo, hi) * scale + mpq_class(1, 2);
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  const bool negative = r < 0;
  std::string s = mpz_class(abs(r)).get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + s : s;
}

Ordering compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (auto av = a.exact_value()) {
    const int c = b.compare(*av);
    return c < 0 ? Ordering::greater : c > 0 ? Ordering::less : Ordering::equal;
  }
  if (auto bv = b.exact_value()) {
    const int c = a.compare(*bv);
    return c < 0 ? Ordering::less : c > 0 ? Ordering::greater : Ordering::equal;
  }
  bool equality_ruled_out = false;
  for (;;) {
    auto [alo, ahi] = a.interval();
    auto [blo, bhi] = b.interval();
    if (ahi <= blo) return Ordering::less;
    if (bhi <= alo) return Ordering::greater;
    if (!equality_ruled_out) {
      const IntPolynomial g = gcd(a.polynomial(), b.polynomial());
      if (g.degree() >= 1) {
        const mpq_class lo = std::max(alo, blo), hi = std::min(ahi, bhi);
        if (SturmSequence(g).count_roots(lo, hi) >= 1) return Ordering::equal;
      }
      equality_ruled_out = true;
    }
    a.refine((ahi - alo) / 2);
    b.refine((bhi - blo) / 2);
  }
}

IntPolynomial p_polynomial(const DigitString& v) {
  const std::size_t j = v.size();
  std::vector<mpz_class> c(j + 1, mpz_class(0));
  c[j] = (j % 2 == 0) ? 1 : -1;
  for (std::size_t k = 1; k <= j; ++k) {
    const std::size_t e = j - k;
    mpz_class term = v[k - 1] + 1;
    c[e] += (e % 2 == 0) ? term : mpz_class(-term);
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial char_polynomial(const EventuallyPeriodicWord& w) {
  const std::size_t q = w.preperiod_length();
  const std::size_t p = w.period_length();
  const DigitString digits = w.prefix(q + p);
  const IntPolynomial full = p_polynomial(digits);
  const IntPolynomial head = p_polynomial(DigitString(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(q)));
  return (full - head).sign_normalized();
}

std::optional<AlgebraicNumber> largest_root_gt1(const IntPolynomial& poly) {
  if (poly.is_zero()) throw std::invalid_argument("negbeta: largest root of the zero polynomial");
  const IntPolynomial sf = squarefree_part(poly);
  if (sf.degree() < 1) return std::nullopt;
  const SturmSequence sturm(sf);
  const mpq_class bound = cauchy_bound(sf);
  mpz_class top;
  mpz_cdiv_q(top.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  mpq_class lo = 1, hi = std::max(top, mpz_class(2));
  int count = sturm.count_roots(lo, hi);
  if (count == 0) return std::nullopt;
  while (count > 1) {
    const mpq_class mid = midpoint(lo, hi);
    const int upper = sturm.count_roots(mid, hi);
    if (upper >= 1) {
      lo = mid;
      count = upper;
    } else {
      hi = mid;
    }
  }
  return AlgebraicNumber(sf, lo, hi);
}

std::vector<AlgebraicNumber> real_roots_above_one(const IntPolynomial& poly) {
  if (poly.is_zero()) throw std::invalid_argument("negbeta: roots of the zero polynomial");
  const IntPolynomial sf = squarefree_part(poly);
  std::vector<AlgebraicNumber> out;
  if (sf.degree() < 1) return out;
  const SturmSequence sturm(sf);
  const mpq_class bound = cauchy_bound(sf);
  mpz_class top;
  mpz_cdiv_q(top.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  std::vector<std::pair<mpq_class, mpq_class>> pending{{mpq_class(1), mpq_class(std::max(top, mpz_class(2)))}};
  std::vector<std::pair<mpq_class, mpq_class>> isolated;
  while (!pending.empty()) {
    auto [lo, hi] = pending.back();
    pending.pop_back();
    const int count = sturm.count_roots(lo, hi);
    if (count == 0) continue;
    if (count == 1) {
      isolated.emplace_back(lo, hi);
      continue;
    }
    const mpq_class mid = midpoint(lo, hi);
    pending.emplace_back(lo, mid);
    pending.emplace_back(mid, hi);
  }
  std::sort(isolated.begin(), isolated.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [lo, hi] : isolated) out.emplace_back(sf, lo, hi);
  return out;
}

AlgebraicNumber b_of(const EventuallyPeriodicWord& w) {
  if (!is_sup_fixed(w)) {
    throw domain_error("sup-not-fixed", w.to_string() + " is not the supremum of its shifts");
  }
  if (compare_with_u(w) == Ordering::less) return AlgebraicNumber();
  auto root = largest_root_gt1(char_polynomial(w));
  NEGBETA_CHECK(root.has_value(), "no root above 1 for " + w.to_string());
  return *root;
}

}  // namespace negbeta
