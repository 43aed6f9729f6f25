#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "negbeta/word.hpp"

namespace negbeta {

// A permutation of {1..n} in one-line notation. Positions and values are
// 1-based throughout, matching how ordinal patterns are usually written.
class Permutation {
 public:
  Permutation() = default;
  // Throws a malformed-permutation error unless image is a bijection of 1..n.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(image_.size()); }
  // pi(i), 1 <= i <= n
  int operator()(int i) const { return image_[static_cast<std::size_t>(i - 1)]; }
  // pi^{-1}(v), 1 <= v <= n
  int inverse(int v) const { return inverse_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& image() const { return image_; }

  // "3421" for n <= 9, "10,9,8,..." otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.image_ == b.image_; }
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

 private:
  std::vector<int> image_;
  std::vector<int> inverse_;
};

// tilde-pi with tilde-pi(pi(j)) = pi(j+1) and tilde-pi(pi(n)) = pi(1).
Permutation circular(const Permutation& pi);

struct Landmarks {
  int m = 0;                // pi^{-1}(n)
  std::optional<int> ell;   // pi^{-1}(pi(n) - 1), absent iff pi(n) = 1
  std::optional<int> r;     // pi^{-1}(pi(n) + 1), absent iff pi(n) = n
};
Landmarks landmarks(const Permutation& pi);

struct DigitVector {
  DigitString digits;                 // z_1 .. z_{n-1}
  std::optional<int> variant_index;   // i for z^(i), absent for z itself

  std::string to_string() const { return digits_to_string(digits); }
  friend bool operator==(const DigitVector&, const DigitVector&) = default;
};

DigitVector z_digits(const Permutation& pi);
// The two ways of counting z_j, exposed separately so they can be compared.
DigitString z_digits_direct(const Permutation& pi);
DigitString z_digits_circular(const Permutation& pi);

bool is_collapsed(const Permutation& pi);
bool is_collapsed(const Permutation& pi, const Landmarks& lm, const DigitString& z);
std::vector<DigitVector> z_variants(const Permutation& pi);

// The threshold word a together with the digit vector (z or the minimizing
// z^(i)) whose prefix z'_[1,m) precedes it in the natural realizing word.
struct ThresholdWord {
  EventuallyPeriodicWord a;
  DigitVector digits;
};
ThresholdWord threshold_word(const Permutation& pi);
EventuallyPeriodicWord a_sequence(const Permutation& pi);

// Number of ascents of tilde-pi after deleting the entry pi(1) from its
// one-line notation.
int circular_ascents_without_first(const Permutation& pi);

}  // namespace negbeta
