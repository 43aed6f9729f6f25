#include "negbeta/analysis.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "negbeta/error.hpp"
#include "negbeta/parallel.hpp"

namespace negbeta {

Permutation pat_of_word(const EventuallyPeriodicWord& w, int n) {
  if (n < 1) throw domain_error("pattern-undefined", "pattern length must be positive");
  std::vector<EventuallyPeriodicWord> tails;
  tails.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) tails.push_back(w.tail(static_cast<std::size_t>(k)));
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    return alt_lex_compare(tails[static_cast<std::size_t>(a)], tails[static_cast<std::size_t>(b)]) == Ordering::less;
  });
  for (int i = 0; i + 1 < n; ++i) {
    if (tails[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])] == tails[static_cast<std::size_t>(idx[static_cast<std::size_t>(i + 1)])]) {
      throw domain_error("pattern-undefined", "tails " + std::to_string(idx[static_cast<std::size_t>(i)] + 1) + " and " +
                                                  std::to_string(idx[static_cast<std::size_t>(i + 1)] + 1) + " of " + w.to_string() +
                                                  " coincide");
    }
  }
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int rank = 0; rank < n; ++rank) img[static_cast<std::size_t>(idx[static_cast<std::size_t>(rank)])] = rank + 1;
  return Permutation(std::move(img));
}

namespace {

bool prop1_raw(const EventuallyPeriodicWord& w, const Permutation& pi, bool periodized) {
  const int n = pi.size();
  if (n == 1) return true;
  const DigitString z = z_digits(pi).digits;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (pi(j) > pi(i) && w.at(static_cast<std::size_t>(j)) - w.at(static_cast<std::size_t>(i)) <
                               z[static_cast<std::size_t>(j - 1)] - z[static_cast<std::size_t>(i - 1)]) {
        return false;
      }
    }
  }
  const Landmarks lm = landmarks(pi);
  const EventuallyPeriodicWord tail_n = w.tail(static_cast<std::size_t>(n));
  auto reference = [&](int h) {
    if (!periodized) return w.tail(static_cast<std::size_t>(h));
    DigitString seg;
    for (int k = h; k < n; ++k) seg.push_back(w.at(static_cast<std::size_t>(k)));
    return EventuallyPeriodicWord::periodic(std::move(seg));
  };
  if (lm.ell && alt_lex_compare(tail_n, reference(*lm.ell)) != Ordering::greater) return false;
  if (lm.r && alt_lex_compare(tail_n, reference(*lm.r)) != Ordering::less) return false;
  return true;
}

}  // namespace

bool prop1_check(const EventuallyPeriodicWord& w, const Permutation& pi, bool periodized) {
  const bool result = prop1_raw(w, pi, periodized);
#ifndef NEGBETA_NO_INTERNAL_CHECKS
  bool direct = false;
  try {
    direct = pat_of_word(w, pi.size()) == pi;
  } catch (const Error&) {
    direct = false;
  }
  NEGBETA_CHECK(result == direct, "realizability test disagrees with the direct pattern for " + w.to_string() + " and " +
                                      pi.to_string());
#endif
  return result;
}

std::optional<unsigned> b1_exponent(const EventuallyPeriodicWord& a) {
  if (!a.purely_periodic()) return std::nullopt;
  for (unsigned k = 0;; ++k) {
    const DigitString phi = phi_power(k);
    if (phi.size() > a.period_length()) return std::nullopt;
    if (primitive_root(phi) == a.period()) return k;
  }
}

bool b_minus_is_one(const Permutation& pi) {
  if (pi.size() < 2) return true;
  return b1_exponent(a_sequence(pi)).has_value();
}

AnalysisReport analyze(const Permutation& pi, const AnalyzeOptions& options) {
  const int n = pi.size();
  if (n < 2) throw domain_error("undefined-landmarks", "analysis needs n >= 2");
  AnalysisReport rep;
  rep.pi = pi;
  rep.landmarks = landmarks(pi);
  rep.z = z_digits(pi);
  rep.collapsed = is_collapsed(pi, rep.landmarks, rep.z.digits);
  if (rep.collapsed) rep.variants = z_variants(pi);
  ThresholdWord tw = threshold_word(pi);
  rep.a = tw.a;
  rep.chosen = tw.digits;
  rep.b1_exponent = b1_exponent(rep.a);
  rep.b_minus = b_of(rep.a);
  NEGBETA_CHECK(rep.b1_exponent.has_value() == rep.b_minus.is_one(),
                "threshold-one test disagrees with b(a) for " + pi.to_string());
  if (!rep.b_minus.is_one()) rep.poly = char_polynomial(rep.a);
  rep.n_minus = rep.b_minus.floor().get_si() + 1;
  const Digit max_z = *std::max_element(rep.z.digits.begin(), rep.z.digits.end());
  const bool top_then_zero = rep.a == EventuallyPeriodicWord::periodic({max_z, 0});
  rep.epsilon = (rep.collapsed || top_then_zero) ? 1 : 0;
  rep.n_minus_formula = max_z + 1 + rep.epsilon;
  if (options.minimal_polynomial) rep.minimal_polynomial = minimal_polynomial(rep.b_minus);
  return rep;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

namespace {

void check_bound(int n) {
  if (n > kEnumerationBound) {
    throw resource_error("enumeration of S_" + std::to_string(n) + " exceeds the bound " + std::to_string(kEnumerationBound));
  }
}

// Visits S_n block by block, one block per leading entry, calling
// visit(block, image) for each permutation in lexicographic order.
template <class Visit>
void for_each_in_block(int n, int first, Visit visit) {
  std::vector<int> img;
  img.push_back(first);
  for (int v = 1; v <= n; ++v) {
    if (v != first) img.push_back(v);
  }
  do {
    visit(img);
  } while (std::next_permutation(img.begin() + 1, img.end()));
}

struct Classified {
  std::vector<Permutation> perms;
  std::vector<std::size_t> value_index;  // into the distinct list
  std::vector<EventuallyPeriodicWord> distinct_words;
  std::vector<AlgebraicNumber> values;
};

Classified classify_all(int n, unsigned jobs) {
  check_bound(n);
  std::vector<std::vector<std::pair<Permutation, EventuallyPeriodicWord>>> blocks(static_cast<std::size_t>(n));
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t b) {
    for_each_in_block(n, static_cast<int>(b) + 1, [&](const std::vector<int>& img) {
      Permutation pi(img);
      EventuallyPeriodicWord a = n >= 2 ? a_sequence(pi) : EventuallyPeriodicWord::periodic({0});
      blocks[b].emplace_back(std::move(pi), std::move(a));
    });
  });
  Classified out;
  std::map<std::string, std::size_t> seen;
  for (auto& block : blocks) {
    for (auto& [pi, a] : block) {
      const std::string key = a.to_string();
      auto [it, inserted] = seen.emplace(key, out.distinct_words.size());
      if (inserted) out.distinct_words.push_back(a);
      out.perms.push_back(std::move(pi));
      out.value_index.push_back(it->second);
    }
  }
  std::vector<std::optional<AlgebraicNumber>> values(out.distinct_words.size());
  parallel_for(values.size(), jobs, [&](std::size_t i) { values[i] = b_of(out.distinct_words[i]); });
  for (auto& v : values) out.values.push_back(std::move(*v));
  return out;
}

}  // namespace

std::vector<std::int64_t> count_b1(int n_max, unsigned jobs) {
  check_bound(n_max);
  std::vector<std::int64_t> out;
  for (int n = 2; n <= n_max; ++n) {
    std::vector<std::int64_t> per_block(static_cast<std::size_t>(n), 0);
    parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t b) {
      std::int64_t count = 0;
      for_each_in_block(n, static_cast<int>(b) + 1, [&](const std::vector<int>& img) {
        if (b_minus_is_one(Permutation(img))) ++count;
      });
      per_block[b] = count;
    });
    out.push_back(std::accumulate(per_block.begin(), per_block.end(), std::int64_t{0}));
  }
  return out;
}

std::vector<SpectrumGroup> spectrum(int n, unsigned jobs) {
  if (n < 2) throw domain_error("undefined-landmarks", "spectrum needs n >= 2");
  Classified c = classify_all(n, jobs);
  // Merge distinct words whose thresholds coincide exactly.
  std::vector<std::size_t> order(c.values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Ordering o = compare(c.values[a], c.values[b]);
    return o == Ordering::less || (o == Ordering::equal && a < b);
  });
  std::vector<std::size_t> group_of(c.values.size());
  std::vector<SpectrumGroup> groups;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t idx = order[k];
    if (groups.empty() || compare(groups.back().value, c.values[idx]) != Ordering::equal) {
      groups.push_back(SpectrumGroup{c.values[idx], IntPolynomial(), {}});
    }
    group_of[idx] = groups.size() - 1;
  }
  for (std::size_t i = 0; i < c.perms.size(); ++i) groups[group_of[c.value_index[i]]].members.push_back(c.perms[i]);
  parallel_for(groups.size(), jobs, [&](std::size_t g) {
    groups[g].minimal_polynomial = minimal_polynomial(groups[g].value);
    std::sort(groups[g].members.begin(), groups[g].members.end());
  });
  return groups;
}

namespace {

Permutation descending(int n) {
  std::vector<int> img;
  for (int v = n; v >= 1; --v) img.push_back(v);
  return Permutation(img);
}

Permutation descending_then_312(int n) {
  std::vector<int> img;
  for (int v = n; v >= 4; --v) img.push_back(v);
  img.push_back(3);
  img.push_back(1);
  img.push_back(2);
  return Permutation(img);
}

Permutation identity_with_last_swap(int n) {
  std::vector<int> img;
  for (int v = 1; v <= n - 2; ++v) img.push_back(v);
  img.push_back(n);
  img.push_back(n - 1);
  return Permutation(img);
}

}  // namespace

ExtremalReport extremal_report(int n, unsigned jobs) {
  if (n < 3) throw domain_error("extremal-undefined", "extremal report needs n >= 3");
  ExtremalReport rep;
  rep.n = n;
  DigitString pre;
  for (int d = n - 2; d >= 1; --d) pre.push_back(d);
  rep.max_word = EventuallyPeriodicWord(pre, {0});
  rep.max_value = b_of(rep.max_word);
  rep.in_range = rep.max_value.compare(mpq_class(n - 2)) > 0 && rep.max_value.compare(mpq_class(n - 1)) < 0;
  rep.expected_attaining = {n % 2 == 0 ? descending(n) : descending_then_312(n)};
  if (n >= 4) {
    rep.expected_top_alphabet = {Permutation::identity(n), identity_with_last_swap(n), descending(n), descending_then_312(n)};
    std::sort(rep.expected_top_alphabet.begin(), rep.expected_top_alphabet.end());
  }
  if (n > kEnumerationBound) return rep;
  rep.exhaustive = true;
  Classified c = classify_all(n, jobs);
  std::size_t best = 0;
  for (std::size_t i = 1; i < c.values.size(); ++i) {
    if (compare(c.values[i], c.values[best]) == Ordering::greater) best = i;
  }
  rep.observed_max = c.values[best];
  std::vector<bool> is_max(c.values.size()), is_top(c.values.size());
  for (std::size_t i = 0; i < c.values.size(); ++i) {
    is_max[i] = compare(c.values[i], c.values[best]) == Ordering::equal;
    is_top[i] = c.values[i].floor() + 1 == n - 1;
  }
  for (std::size_t i = 0; i < c.perms.size(); ++i) {
    if (is_max[c.value_index[i]]) rep.attaining.push_back(c.perms[i]);
    if (is_top[c.value_index[i]]) rep.top_alphabet.push_back(c.perms[i]);
  }
  rep.verified = rep.in_range && compare(*rep.observed_max, rep.max_value) == Ordering::equal &&
                 rep.attaining == rep.expected_attaining &&
                 (n < 4 || rep.top_alphabet == rep.expected_top_alphabet);
  return rep;
}

}  // namespace negbeta
