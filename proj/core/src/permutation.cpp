#include "negbeta/permutation.hpp"

#include <algorithm>
#include <charconv>

#include "negbeta/error.hpp"

namespace negbeta {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = static_cast<int>(image_.size());
  if (n == 0) throw domain_error("malformed-permutation", "permutation must have at least one entry");
  inverse_.assign(image_.size(), 0);
  for (int i = 1; i <= n; ++i) {
    const int v = image_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n) {
      throw domain_error("malformed-permutation", "entry " + std::to_string(v) + " is out of range 1.." + std::to_string(n));
    }
    if (inverse_[static_cast<std::size_t>(v - 1)] != 0) {
      throw domain_error("malformed-permutation", "entry " + std::to_string(v) + " occurs twice");
    }
    inverse_[static_cast<std::size_t>(v - 1)] = i;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(img));
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::vector<int> img;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw domain_error("malformed-permutation",
                           "compact permutation text takes digits 1-9 only; use commas for n > 9: '" + std::string(text) + "'");
      }
      img.push_back(c - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find(',', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view item = text.substr(start, end - start);
      while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
      while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
      if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
        throw domain_error("malformed-permutation", "bad entry '" + std::string(item) + "'");
      }
      img.push_back(v);
      start = end + 1;
    }
  }
  return Permutation(std::move(img));
}

std::string Permutation::to_string() const {
  std::string out;
  const bool compact = size() <= 9;
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(image_[i]);
  }
  return out;
}

Permutation circular(const Permutation& pi) {
  const int n = pi.size();
  std::vector<int> img(static_cast<std::size_t>(n));
  for (int j = 1; j < n; ++j) img[static_cast<std::size_t>(pi(j) - 1)] = pi(j + 1);
  img[static_cast<std::size_t>(pi(n) - 1)] = pi(1);
  return Permutation(std::move(img));
}

Landmarks landmarks(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2) throw domain_error("undefined-landmarks", "landmarks need n >= 2");
  Landmarks lm;
  lm.m = pi.inverse(n);
  if (pi(n) != 1) lm.ell = pi.inverse(pi(n) - 1);
  if (pi(n) != n) lm.r = pi.inverse(pi(n) + 1);
  return lm;
}

namespace {

DigitString counts_to_z(const Permutation& pi, const std::vector<int>& counted) {
  // counted[i] for 1 <= i < n says whether i contributes to every z_j with
  // pi(j) > i.
  const int n = pi.size();
  std::vector<int> prefix(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)] + (i < n ? counted[static_cast<std::size_t>(i)] : 0);
  }
  DigitString z(static_cast<std::size_t>(n - 1));
  for (int j = 1; j < n; ++j) z[static_cast<std::size_t>(j - 1)] = prefix[static_cast<std::size_t>(pi(j) - 1)];
  return z;
}

DigitString segment(const DigitString& digits, int from, int n) {
  // positions from .. n-1 (1-based)
  return DigitString(digits.begin() + (from - 1), digits.begin() + (n - 1));
}

}  // namespace

DigitString z_digits_direct(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2) throw domain_error("undefined-digits", "z digits need n >= 2");
  const int last = pi(n);
  std::optional<int> ell, r;
  if (last != 1) ell = pi.inverse(last - 1);
  if (last != n) r = pi.inverse(last + 1);
  std::vector<int> counted(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    bool c = false;
    if (i != last && i + 1 != last) {
      c = pi(pi.inverse(i) + 1) < pi(pi.inverse(i + 1) + 1);
    } else if (i + 1 == last && last != n) {
      c = pi(*ell + 1) < pi(*r + 1);
    }
    counted[static_cast<std::size_t>(i)] = c ? 1 : 0;
  }
  return counts_to_z(pi, counted);
}

DigitString z_digits_circular(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2) throw domain_error("undefined-digits", "z digits need n >= 2");
  const Permutation c = circular(pi);
  const int last = pi(n);
  std::vector<int> counted(static_cast<std::size_t>(n), 0);
  for (int i = 1; i < n; ++i) {
    bool hit = false;
    if (i != last && i + 1 != last) {
      hit = c(i) < c(i + 1);
    } else if (i + 1 == last && last != n) {
      hit = c(i) < c(i + 2);
    }
    counted[static_cast<std::size_t>(i)] = hit ? 1 : 0;
  }
  return counts_to_z(pi, counted);
}

DigitVector z_digits(const Permutation& pi) {
  DigitString z = z_digits_direct(pi);
  NEGBETA_CHECK(z == z_digits_circular(pi), "z digit formulas disagree for " + pi.to_string());
  return DigitVector{std::move(z), std::nullopt};
}

bool is_collapsed(const Permutation& pi, const Landmarks& lm, const DigitString& z) {
  const int n = pi.size();
  if (pi(n) == 1 || pi(n) == n) return false;
  const DigitString zl = segment(z, *lm.ell, n);
  const DigitString zr = segment(z, *lm.r, n);
  auto doubled = [](const DigitString& s) {
    DigitString d = s;
    d.insert(d.end(), s.begin(), s.end());
    return d;
  };
  return zl == doubled(zr) || zr == doubled(zl);
}

bool is_collapsed(const Permutation& pi) {
  if (pi.size() < 2) return false;
  return is_collapsed(pi, landmarks(pi), z_digits(pi).digits);
}

namespace {

std::vector<DigitVector> variants_of(const Permutation& pi, const Landmarks& lm, const DigitString& z) {
  const int n = pi.size();
  const int ell = *lm.ell, r = *lm.r;
  const int count = std::abs(r - ell);
  std::vector<DigitVector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int threshold = (i % 2 == 0) ? pi(r + i) : pi(ell + i);
    DigitVector v{z, i};
    for (int j = 1; j < n; ++j) {
      if (pi(j) >= threshold) v.digits[static_cast<std::size_t>(j - 1)] += 1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<DigitVector> z_variants(const Permutation& pi) {
  if (pi.size() < 2) throw domain_error("variant-undefined", "variants need n >= 2");
  const Landmarks lm = landmarks(pi);
  const DigitString z = z_digits(pi).digits;
  if (!is_collapsed(pi, lm, z)) {
    throw domain_error("variant-undefined", pi.to_string() + " is not collapsed");
  }
  return variants_of(pi, lm, z);
}

ThresholdWord threshold_word(const Permutation& pi) {
  const int n = pi.size();
  if (n < 2) throw domain_error("undefined-threshold", "the threshold word needs n >= 2");
  const Landmarks lm = landmarks(pi);
  DigitVector z = z_digits(pi);
  const bool collapsed = is_collapsed(pi, lm, z.digits);
  const int m = lm.m;
  const bool even = (n - m) % 2 == 0;

  if (!collapsed) {
    EventuallyPeriodicWord a;
    if (even && pi(n) == 1) {
      DigitString period = segment(z.digits, m, n);
      period.push_back(0);
      a = EventuallyPeriodicWord::periodic(std::move(period));
    } else {
      const int h = even ? *lm.ell : *lm.r;
      a = EventuallyPeriodicWord(segment(z.digits, m, n), segment(z.digits, h, n));
      // z_[m,n) (z_[h,n))^inf rewritten with the period starting at m or h.
      if (h < m) {
        DigitString period = segment(z.digits, m, n);
        DigitString rest(z.digits.begin() + (h - 1), z.digits.begin() + (m - 1));
        period.insert(period.end(), rest.begin(), rest.end());
        NEGBETA_CHECK(a == EventuallyPeriodicWord::periodic(period), "threshold tail identity (h < m) fails");
      } else if (h > m) {
        DigitString pre(z.digits.begin() + (m - 1), z.digits.begin() + (h - 1));
        NEGBETA_CHECK(a == EventuallyPeriodicWord(pre, segment(z.digits, h, n)), "threshold tail identity (h > m) fails");
      }
    }
    NEGBETA_CHECK(is_sup_fixed(a), "threshold word is not sup-fixed for " + pi.to_string());
    return ThresholdWord{std::move(a), std::move(z)};
  }

  std::vector<DigitVector> vars = variants_of(pi, lm, z.digits);
  const int h = even ? *lm.ell : *lm.r;
  std::optional<ThresholdWord> best;
  for (auto& v : vars) {
    EventuallyPeriodicWord cand(segment(v.digits, m, n), segment(v.digits, h, n));
    if (!best || alt_lex_compare(cand, best->a) == Ordering::less) {
      best = ThresholdWord{std::move(cand), v};
    }
  }
  NEGBETA_CHECK(is_sup_fixed(best->a), "threshold word is not sup-fixed for " + pi.to_string());
  return *best;
}

EventuallyPeriodicWord a_sequence(const Permutation& pi) { return threshold_word(pi).a; }

int circular_ascents_without_first(const Permutation& pi) {
  const Permutation c = circular(pi);
  std::vector<int> seq;
  for (int v : c.image()) {
    if (v != pi(1)) seq.push_back(v);
  }
  int ascents = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) ascents += seq[i] < seq[i + 1] ? 1 : 0;
  return ascents;
}

}  // namespace negbeta
