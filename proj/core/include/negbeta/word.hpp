#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace negbeta {

// Digits are unbounded nonnegative integers in principle; 64 bits is far
// beyond anything a permutation of enumerable length produces.
using Digit = std::int64_t;
using DigitString = std::vector<Digit>;

enum class Ordering { less, equal, greater };

inline Ordering reverse(Ordering o) {
  return o == Ordering::less ? Ordering::greater
         : o == Ordering::greater ? Ordering::less
                                  : Ordering::equal;
}

const char* to_string(Ordering o);

// Alternating lexicographic comparison of the digits a and b found at the
// 1-based position k where two sequences first differ.
inline Ordering alt_lex_decide(Digit a, Digit b, std::size_t k) {
  bool less = (k % 2 == 1) ? a < b : a > b;
  return less ? Ordering::less : Ordering::greater;
}

// Compares two finite words of equal length in alternating lexicographic
// order.
Ordering alt_lex_compare(const DigitString& v, const DigitString& w);

// A sequence preperiod . (period)^inf kept in canonical form: the period is
// primitive and the preperiod does not end with the last period digit.
class EventuallyPeriodicWord {
 public:
  EventuallyPeriodicWord() : period_{0} {}
  EventuallyPeriodicWord(DigitString preperiod, DigitString period);

  static EventuallyPeriodicWord periodic(DigitString period) {
    return EventuallyPeriodicWord({}, std::move(period));
  }

  const DigitString& preperiod() const { return preperiod_; }
  const DigitString& period() const { return period_; }
  std::size_t preperiod_length() const { return preperiod_.size(); }
  std::size_t period_length() const { return period_.size(); }
  bool purely_periodic() const { return preperiod_.empty(); }

  // w_k, 1-based; total for every k >= 1.
  Digit at(std::size_t k) const;
  DigitString prefix(std::size_t length) const;
  // w_[k,inf), 1-based.
  EventuallyPeriodicWord tail(std::size_t k) const;
  EventuallyPeriodicWord prepend(const DigitString& head) const;
  Digit max_digit() const;

  // Number of distinct tails w_[k,inf), k >= 1.
  std::size_t distinct_tails() const { return preperiod_.size() + period_.size(); }

  std::string to_string() const;
  static EventuallyPeriodicWord parse(std::string_view literal);

  friend bool operator==(const EventuallyPeriodicWord&, const EventuallyPeriodicWord&) = default;

 private:
  DigitString preperiod_;
  DigitString period_;
};

// Same as the constructor; exists for symmetry with the other free operations.
EventuallyPeriodicWord canonicalize(DigitString preperiod, DigitString period);

// Normalization with q >= 1 and p minimal such that w_[p+q,inf) = w_[q,inf).
// head holds w_1..w_q and period holds w_{q+1}..w_{q+p}.
struct AnchoredForm {
  std::size_t q = 1;
  std::size_t p = 1;
  DigitString head;
  DigitString period;
  // w_1 .. w_{p+q}
  DigitString digits() const;
};
AnchoredForm anchored_form(const EventuallyPeriodicWord& w);

Ordering alt_lex_compare(const EventuallyPeriodicWord& v, const EventuallyPeriodicWord& w);

inline bool operator<(const EventuallyPeriodicWord& v, const EventuallyPeriodicWord& w) {
  return alt_lex_compare(v, w) == Ordering::less;
}

// sup over all tails w_[k,inf), k >= 1.
EventuallyPeriodicWord sup_of_shifts(const EventuallyPeriodicWord& w);
bool is_sup_fixed(const EventuallyPeriodicWord& w);

// v' : decrement the last digit and append 0, or drop a trailing 0 and
// increment the digit before it.
DigitString derived_word(const DigitString& v);

enum class Primitivity { primitive, almost_primitive_square, imprimitive };
const char* to_string(Primitivity p);
Primitivity primitivity_class(const DigitString& v);
// Shortest s with v = s^k.
DigitString primitive_root(const DigitString& v);

// phi(0) = 1, phi(1) = 100.
DigitString phi_power(unsigned k);
// Prefix of the fixed point u = phi(u).
DigitString u_prefix(std::size_t length);
// Compares w with the aperiodic fixed point u; never returns equal.
Ordering compare_with_u(const EventuallyPeriodicWord& w);

// Whether w is an infinite concatenation of v and v'. Requires w to be
// sup-fixed; decided through the order characterization.
bool in_vv_prime_star(const EventuallyPeriodicWord& w, const DigitString& v);
// Direct factorization check on the finite automaton of w's tails. Used to
// cross-validate in_vv_prime_star.
bool factorizes_over(const EventuallyPeriodicWord& w, const DigitString& v, const DigitString& v2);

std::string digits_to_string(const DigitString& d);
DigitString parse_digits(std::string_view text);

}  // namespace negbeta
