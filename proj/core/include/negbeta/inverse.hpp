#pragma once

#include <string>
#include <vector>

#include "negbeta/permutation.hpp"
#include "negbeta/word.hpp"

namespace negbeta {

// Ranks of the tails w_[1,inf) .. w_[p+q-1,inf) with the closing position
// p+q placed next to q. Throws degenerate-expansion if two tails coincide.
Permutation rho_of(const EventuallyPeriodicWord& w);

enum class EmptyRange { no_bonus, bonus };

// Gap sizes y_1 .. y_{p+q} from the case rules, processed in decreasing rank.
DigitString y_digits(const EventuallyPeriodicWord& w, const Permutation& rho, EmptyRange convention = EmptyRange::no_bonus);

// pi of length c + p + q with the last p + q values ordered by rho and
// spaced by y; the first c positions take the remaining values in order.
Permutation assemble(const Permutation& rho, const DigitString& y);

struct InverseResult {
  EventuallyPeriodicWord w;
  std::size_t q = 1;
  std::size_t p = 1;
  Permutation rho;
  DigitString y;
  std::int64_t c = 0;
  Permutation pi;
  bool verified = false;
  std::string method;  // "case-rules", "case-rules-bonus", or "gap-search"
};

// Requires w to be the expansion of 1 of some base. Returns pi whose
// threshold word is w, verified by recomputing it; throws construction-failed
// if no candidate verifies.
InverseResult construct_pi(const EventuallyPeriodicWord& w);

}  // namespace negbeta
