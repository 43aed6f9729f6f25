#include "negbeta/search.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "negbeta/analysis.hpp"
#include "negbeta/error.hpp"

namespace negbeta {

namespace {

// Tracks, for a growing prefix s, which pairs of tails (i, j), i < j <= n,
// have already been separated, and rejects prefixes that separate a pair in
// the wrong order or violate the digit-difference condition on w_[1,n).
class PairTracker {
 public:
  explicit PairTracker(const Permutation& pi) : pi_(pi), n_(pi.size()) {
    if (n_ > 11) throw resource_error("pair tracking supports n <= 11");
    z_ = n_ >= 2 ? z_digits(pi).digits : DigitString{};
    for (int i = 1; i <= n_; ++i) {
      for (int j = i + 1; j <= n_; ++j) pairs_.push_back({i, j, pi(i) < pi(j)});
    }
  }

  std::uint64_t all_open() const {
    return pairs_.size() == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << pairs_.size()) - 1);
  }

  // s holds the digits before the new one; returns false on a violation.
  bool push(const DigitString& s, Digit d, std::uint64_t& mask) const {
    const int k1 = static_cast<int>(s.size()) + 1;  // 1-based index of d
    if (k1 <= n_ - 1) {
      for (int i = 1; i < k1; ++i) {
        const Digit wi = s[static_cast<std::size_t>(i - 1)];
        const Digit zi = z_[static_cast<std::size_t>(i - 1)];
        const Digit zk = z_[static_cast<std::size_t>(k1 - 1)];
        if (pi_(k1) > pi_(i) && d - wi < zk - zi) return false;
        if (pi_(i) > pi_(k1) && wi - d < zi - zk) return false;
      }
    }
    std::uint64_t m = mask;
    while (m) {
      const int bit = __builtin_ctzll(m);
      m &= m - 1;
      const Pair& pr = pairs_[static_cast<std::size_t>(bit)];
      if (pr.j > k1) continue;
      const int t = k1 - pr.j;  // 0-based offset in both tails
      const Digit di = s[static_cast<std::size_t>(pr.i - 1 + t)];
      if (di == d) continue;
      const bool i_less = alt_lex_decide(di, d, static_cast<std::size_t>(t + 1)) == Ordering::less;
      if (i_less != pr.i_less) return false;
      mask &= ~(std::uint64_t{1} << bit);
    }
    return true;
  }

  int n() const { return n_; }

 private:
  struct Pair {
    int i, j;
    bool i_less;
  };
  Permutation pi_;
  int n_;
  DigitString z_;
  std::vector<Pair> pairs_;
};

class AlphabetSearch {
 public:
  AlphabetSearch(const PairTracker& tracker, int alphabet, int depth)
      : tracker_(tracker), alphabet_(alphabet), depth_(depth) {}

  bool run() { return dfs(tracker_.all_open()); }
  const DigitString& digits() const { return s_; }

 private:
  bool dfs(std::uint64_t mask) {
    if (mask == 0) return true;
    const int k = static_cast<int>(s_.size());
    if (k >= depth_) return false;
    const int n = tracker_.n();
    if (k >= n) {
      std::string key;
      key.push_back(static_cast<char>(k % 2));
      key.append(reinterpret_cast<const char*>(&mask), sizeof mask);
      for (int t = k - (n - 1); t < k; ++t) key.push_back(static_cast<char>(s_[static_cast<std::size_t>(t)]));
      const int remaining = depth_ - k;
      auto it = seen_.find(key);
      if (it != seen_.end() && it->second >= remaining) return false;
      seen_[key] = remaining;
    }
    for (Digit d = 0; d < alphabet_; ++d) {
      std::uint64_t next = mask;
      if (!tracker_.push(s_, d, next)) continue;
      s_.push_back(d);
      if (dfs(next)) return true;
      s_.pop_back();
    }
    return false;
  }

  const PairTracker& tracker_;
  int alphabet_;
  int depth_;
  DigitString s_;
  std::unordered_map<std::string, int> seen_;
};

EventuallyPeriodicWord word_from_prefix(const DigitString& s) {
  if (s.empty()) return EventuallyPeriodicWord::periodic({0});
  return EventuallyPeriodicWord(DigitString(s.begin(), s.end() - 1), {s.back()});
}

bool realizes(const EventuallyPeriodicWord& w, const Permutation& pi) {
  try {
    return pat_of_word(w, pi.size()) == pi;
  } catch (const Error&) {
    return false;
  }
}

class AdmissibleSearch {
 public:
  AdmissibleSearch(const Permutation& pi, LazyExpansion& d1, const SearchBounds& b)
      : pi_(pi), tracker_(pi), d1_(d1), bounds_(b) {
    top_ = d1_.digit(1);
  }

  std::optional<EventuallyPeriodicWord> run() {
    if (dfs(tracker_.all_open())) return found_;
    return std::nullopt;
  }

 private:
  bool try_candidates() {
    const int k = static_cast<int>(s_.size());
    for (int per = 1; per <= std::min(k, bounds_.max_period); ++per) {
      const int pre = k - per;
      if (pre > bounds_.max_prefix) continue;
      EventuallyPeriodicWord w(DigitString(s_.begin(), s_.begin() + pre), DigitString(s_.begin() + pre, s_.end()));
      if (!realizes(w, pi_)) continue;
      if (shift_membership(w, d1_)) {
        found_ = w;
        return true;
      }
    }
    return false;
  }

  bool dfs(std::uint64_t mask) {
    if (!s_.empty() && try_candidates()) return true;
    const int k = static_cast<int>(s_.size());
    if (k >= bounds_.max_prefix + bounds_.max_period) return false;
    for (Digit d = 0; d <= top_; ++d) {
      std::uint64_t next = mask;
      if (!tracker_.push(s_, d, next)) continue;
      // Tails starting at open positions still agree with the bounds.
      std::vector<int> saved_upper = upper_open_, saved_lower = lower_open_;
      upper_open_.push_back(k + 1);
      lower_open_.push_back(k + 1);
      if (!advance(d, k + 1)) {
        upper_open_ = std::move(saved_upper);
        lower_open_ = std::move(saved_lower);
        continue;
      }
      s_.push_back(d);
      if (dfs(next)) return true;
      s_.pop_back();
      upper_open_ = std::move(saved_upper);
      lower_open_ = std::move(saved_lower);
    }
    return false;
  }

  // d sits at 1-based index idx.
  bool advance(Digit d, int idx) {
    std::vector<int> keep;
    for (int start : upper_open_) {
      const std::size_t pos = static_cast<std::size_t>(idx - start + 1);
      const Digit e = d1_.digit(pos);
      if (d == e) {
        keep.push_back(start);
      } else if (alt_lex_decide(d, e, pos) == Ordering::greater) {
        return false;
      }
    }
    upper_open_ = std::move(keep);
    keep.clear();
    for (int start : lower_open_) {
      const std::size_t pos = static_cast<std::size_t>(idx - start + 1);
      const Digit e = d1_.lower_digit(pos);
      if (d == e) {
        keep.push_back(start);
      } else if (alt_lex_decide(d, e, pos) == Ordering::less) {
        return false;
      }
    }
    lower_open_ = std::move(keep);
    return true;
  }

  Permutation pi_;
  PairTracker tracker_;
  LazyExpansion& d1_;
  SearchBounds bounds_;
  Digit top_ = 0;
  DigitString s_;
  std::vector<int> upper_open_, lower_open_;
  std::optional<EventuallyPeriodicWord> found_;
};

SearchBounds resolve(const SearchBounds& b, int n) {
  SearchBounds d = SearchBounds::defaults(n);
  return {b.max_prefix > 0 ? b.max_prefix : d.max_prefix, b.max_period > 0 ? b.max_period : d.max_period};
}

mpq_class to_thousandths(const mpq_class& x, bool up) {
  mpq_class scaled = x * 1000;
  mpz_class r;
  if (up) {
    mpz_cdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    mpz_fdiv_q(r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  }
  mpq_class out(r, 1000);
  out.canonicalize();
  return out;
}

DigitString repeat(const DigitString& v, int times) {
  DigitString out;
  for (int t = 0; t < times; ++t) out.insert(out.end(), v.begin(), v.end());
  return out;
}

}  // namespace

AlphabetResult min_alphabet_bruteforce(const Permutation& pi, int max_prefix, int max_period, int max_alphabet) {
  const int n = pi.size();
  if (max_prefix <= 0) max_prefix = 2 * n;
  if (max_period <= 0) max_period = 2 * n;
  if (max_alphabet <= 0) max_alphabet = n;
  if (n == 1) return {1, EventuallyPeriodicWord::periodic({0})};
  const PairTracker tracker(pi);
  const int depth = max_prefix + max_period + n;
  for (int alphabet = 1; alphabet <= max_alphabet; ++alphabet) {
    AlphabetSearch search(tracker, alphabet, depth);
    if (search.run()) {
      EventuallyPeriodicWord w = word_from_prefix(search.digits());
      NEGBETA_CHECK(realizes(w, pi), "alphabet witness does not realize " + pi.to_string());
      return {alphabet, w};
    }
  }
  throw inconclusive_error("no realizing word over at most " + std::to_string(max_alphabet) + " letters within depth " +
                           std::to_string(depth) + " for " + pi.to_string());
}

std::optional<EventuallyPeriodicWord> find_admissible_realization(const Permutation& pi, LazyExpansion& d1,
                                                                  const SearchBounds& bounds) {
  AdmissibleSearch search(pi, d1, resolve(bounds, pi.size()));
  return search.run();
}

namespace {

// The margin as the nearest multiple of 10^-9, so 0.05 means exactly 1/20.
mpq_class margin_q(double margin) {
  mpq_class m(static_cast<long>(std::llround(margin * 1e9)), 1000000000);
  m.canonicalize();
  return m;
}

}  // namespace

mpq_class base_above(const AlgebraicNumber& b, double margin) {
  if (const auto v = b.exact_value()) return to_thousandths(*v + margin_q(margin), true);
  auto [lo, hi] = b.refine(mpq_class(1, 1000000));
  return to_thousandths(hi + margin_q(margin), true);
}

mpq_class base_below(const AlgebraicNumber& b, double margin) {
  if (const auto v = b.exact_value()) return to_thousandths(*v - margin_q(margin), false);
  auto [lo, hi] = b.refine(mpq_class(1, 1000000));
  return to_thousandths(lo - margin_q(margin), false);
}

Witness witness_word(const Permutation& pi, double margin, const SearchBounds& bounds) {
  if (margin <= 0) throw domain_error("bad-margin", "the margin must be positive");
  if (pi.size() < 2) throw domain_error("undefined-landmarks", "witness words need n >= 2");
  const ThresholdWord tw = threshold_word(pi);
  const EventuallyPeriodicWord& a = tw.a;
  const AlgebraicNumber b = b_of(a);
  const mpq_class beta = base_above(b, margin);
  LazyExpansion d1(BetaField::rational(beta));
  const int m = landmarks(pi).m;
  const DigitString head(tw.digits.digits.begin(), tw.digits.digits.begin() + (m - 1));

  auto accept = [&](const EventuallyPeriodicWord& w) { return realizes(w, pi) && shift_membership(w, d1); };

  const EventuallyPeriodicWord natural = a.prepend(head);
  if (accept(natural)) return {natural, beta, "threshold"};

  // Repeat the period a few times and close with a modified tail.
  std::vector<DigitString> tails;
  if (!(a.period().size() == 1 && a.period()[0] == 0)) tails.push_back(derived_word(a.period()));
  const Digit top = a.max_digit() + 1;
  for (Digit x = 0; x <= top; ++x) tails.push_back({x});
  for (Digit x = 0; x <= top; ++x) {
    for (Digit y = 0; y <= top; ++y) {
      if (x != y) tails.push_back({x, y});
    }
  }
  for (int k = 1; k <= 8; ++k) {
    DigitString pre = head;
    pre.insert(pre.end(), a.preperiod().begin(), a.preperiod().end());
    const DigitString body = repeat(a.period(), k);
    pre.insert(pre.end(), body.begin(), body.end());
    for (const auto& t : tails) {
      EventuallyPeriodicWord w(pre, t);
      if (accept(w)) return {w, beta, "perturbed"};
    }
  }
  if (auto w = find_admissible_realization(pi, d1, bounds)) return {*w, beta, "search"};
  throw inconclusive_error("no admissible realizing word found for " + pi.to_string());
}

SandwichReport verify_sandwich(const Permutation& pi, double margin, const SearchBounds& bounds) {
  SandwichReport rep;
  rep.b_minus = b_of(a_sequence(pi));
  rep.above = witness_word(pi, margin, bounds);
  bool ok = realizes(rep.above.word, pi);
  if (!rep.b_minus.is_one()) {
    rep.at_checked = true;
    LazyExpansion at(BetaField(rep.b_minus));
    rep.at_found = find_admissible_realization(pi, at, bounds);
    ok = ok && !rep.at_found;
    rep.below_beta = base_below(rep.b_minus, margin);
    if (rep.below_beta > 1) {
      rep.below_checked = true;
      LazyExpansion below(BetaField::rational(rep.below_beta));
      rep.below_found = find_admissible_realization(pi, below, bounds);
      ok = ok && !rep.below_found;
    }
  }
  rep.consistent = ok;
  return rep;
}

}  // namespace negbeta
