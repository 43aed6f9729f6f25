#include "negbeta/inverse.hpp"

#include <algorithm>
#include <numeric>

#include "negbeta/dynamics.hpp"
#include "negbeta/error.hpp"

namespace negbeta {

namespace {

struct Indexed {
  std::size_t q, p;
  DigitString w;  // w_1 .. w_{p+q}, 0-based storage
  Digit at(std::size_t k) const { return w[k - 1]; }
};

Indexed indexed(const EventuallyPeriodicWord& word) {
  const AnchoredForm f = anchored_form(word);
  return {f.q, f.p, f.digits()};
}

// rho(k) with rho(p+q+1) read as rho(q+1).
int rank(const Permutation& rho, std::size_t q, std::size_t k) {
  const std::size_t total = static_cast<std::size_t>(rho.size());
  return rho(static_cast<int>(k == total + 1 ? q + 1 : k));
}

bool verify(const EventuallyPeriodicWord& w, const Permutation& pi, const Permutation& rho, std::size_t q,
            std::size_t p, std::int64_t c) {
  if (pi.size() < 2) return false;
  if (!(threshold_word(pi).a == w)) return false;
  const int n = pi.size();
  const int top = rho.inverse(static_cast<int>(p + q));
  if (landmarks(pi).m != static_cast<int>(c) + top) return false;
  const int sign = (p + q) % 2 == 0 ? 1 : -1;
  return pi(n) == pi(static_cast<int>(c + static_cast<std::int64_t>(q))) - sign;
}

// Gap sizes chosen so that the z-digit differences implied by the spacing
// match w_j - w_i directly, instead of going through the case table.
DigitString y_from_relations(const Indexed& w, const Permutation& rho) {
  const std::size_t total = w.p + w.q;
  DigitString y(total, 0);
  auto any_positive = [&](int lo, int hi) {
    for (int v = lo + 1; v <= hi; ++v) {
      if (y[static_cast<std::size_t>(rho.inverse(v) - 1)] >= 1) return true;
    }
    return false;
  };
  for (int v = static_cast<int>(total); v >= 2; --v) {
    const std::size_t j = static_cast<std::size_t>(rho.inverse(v));
    const std::size_t i = static_cast<std::size_t>(rho.inverse(v - 1));
    const Digit d = w.at(j) - w.at(i);
    const int after_i = rank(rho, w.q, i + 1);
    const int after_j = rank(rho, w.q, j + 1);
    const int s = any_positive(v, after_j) ? 1 : 0;
    const int none_between = any_positive(v, after_i) ? 0 : 1;
    Digit out;
    if (d == (after_i > after_j ? 1 : 0)) {
      out = 0;
    } else if (d == none_between + s) {
      out = 1;
    } else {
      out = d + 1 - s - (after_i < v ? 1 : 0);
      if (out < 2) throw domain_error("invalid-expansion", "no gap size fits at position " + std::to_string(j));
    }
    y[j - 1] = out;
  }
  const std::size_t j = static_cast<std::size_t>(rho.inverse(1));
  y[j - 1] = w.at(j) + (any_positive(1, rank(rho, w.q, j + 1)) ? 0 : 1);
  return y;
}

}  // namespace

Permutation rho_of(const EventuallyPeriodicWord& word) {
  const Indexed w = indexed(word);
  const std::size_t total = w.p + w.q;
  std::vector<std::size_t> order(total - 1);
  std::iota(order.begin(), order.end(), 1);
  std::vector<EventuallyPeriodicWord> tails;
  for (std::size_t i = 1; i < total; ++i) tails.push_back(word.tail(i));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return tails[a - 1] < tails[b - 1]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (tails[order[k - 1] - 1] == tails[order[k] - 1]) {
      throw domain_error("degenerate-expansion", "tails " + std::to_string(order[k - 1]) + " and " +
                                                     std::to_string(order[k]) + " of " + word.to_string() + " coincide");
    }
  }
  std::vector<int> r(total - 1);
  for (std::size_t k = 0; k < order.size(); ++k) r[order[k] - 1] = static_cast<int>(k) + 1;
  const int rq = r[w.q - 1];
  const bool even = total % 2 == 0;
  std::vector<int> image(total);
  for (std::size_t i = 0; i + 1 < total; ++i) {
    image[i] = r[i] + (even ? (r[i] >= rq) : (r[i] > rq));
  }
  image[total - 1] = even ? rq : rq + 1;
  return Permutation(std::move(image));
}

DigitString y_digits(const EventuallyPeriodicWord& word, const Permutation& rho, EmptyRange convention) {
  const Indexed w = indexed(word);
  const std::size_t total = w.p + w.q;
  NEGBETA_CHECK(static_cast<std::size_t>(rho.size()) == total, "rank permutation has the wrong size");
  DigitString y(total, 0);
  // Some y_k >= 1 with lo < rho(k) <= hi; ranks above lo are already set.
  auto some_positive = [&](int lo, int hi) {
    for (int v = lo + 1; v <= hi; ++v) {
      if (y[static_cast<std::size_t>(rho.inverse(v) - 1)] >= 1) return true;
    }
    return false;
  };
  for (int v = static_cast<int>(total); v >= 2; --v) {
    const std::size_t j = static_cast<std::size_t>(rho.inverse(v));
    const std::size_t i = static_cast<std::size_t>(rho.inverse(v - 1));
    const Digit d = w.at(j) - w.at(i);
    const int after_i = rank(rho, w.q, i + 1);
    const int after_j = rank(rho, w.q, j + 1);
    const bool s = some_positive(v, after_j);
    Digit out;
    if (d == 0 || (d == 1 && after_i < after_j)) {
      out = 0;
    } else if (d == 1 && after_i > after_j && (after_i < v || s)) {
      out = 1;
    } else if (d == 1 && after_i > after_j && after_i > v && !s) {
      out = 2;
    } else if (d == 2 && after_i < v && s) {
      out = 1;
    } else if (d >= 2 && (after_i < v || s)) {
      out = d;
    } else if (d >= 2 && after_i > v && s) {
      out = d + 1;
    } else if (d >= 3 && after_i < v && !s) {
      out = d - 1;
    } else {
      throw domain_error("invalid-expansion", "no gap rule applies at position " + std::to_string(j) + " of " +
                                                  word.to_string());
    }
    y[j - 1] = out;
  }
  const std::size_t j = static_cast<std::size_t>(rho.inverse(1));
  const int hi = rank(rho, w.q, j + 1);
  bool all_zero = true;
  bool any = false;
  for (int v = 2; v <= hi; ++v) {
    any = true;
    if (y[static_cast<std::size_t>(rho.inverse(v) - 1)] != 0) all_zero = false;
  }
  const bool bonus = all_zero && (any || convention == EmptyRange::bonus);
  y[j - 1] = w.at(j) + (bonus ? 1 : 0);
  return y;
}

Permutation assemble(const Permutation& rho, const DigitString& y) {
  const int total = rho.size();
  const std::int64_t c = std::accumulate(y.begin(), y.end(), std::int64_t{0});
  const std::int64_t n = c + total;
  if (n > 1000000) throw resource_error("assembled permutation would have " + std::to_string(n) + " entries");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int j = 1; j <= total; ++j) {
    std::int64_t value = rho(j);
    for (int k = 1; k <= total; ++k) {
      if (rho(k) <= rho(j)) value += y[static_cast<std::size_t>(k - 1)];
    }
    image[static_cast<std::size_t>(c + j - 1)] = static_cast<int>(value);
    used[static_cast<std::size_t>(value)] = true;
  }
  std::size_t slot = 0;
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) image[slot++] = v;
  }
  return Permutation(std::move(image));
}

InverseResult construct_pi(const EventuallyPeriodicWord& word) {
  if (!validate_expansion(word)) {
    throw domain_error("invalid-expansion", word.to_string() + " is not the expansion of 1 of any base above 1");
  }
  const Indexed w = indexed(word);
  InverseResult res;
  res.w = word;
  res.q = w.q;
  res.p = w.p;
  res.rho = rho_of(word);
  const std::size_t total = w.p + w.q;

  auto attempt = [&](const DigitString& y, const char* method) {
    const Permutation pi = assemble(res.rho, y);
    const std::int64_t c = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    if (!verify(word, pi, res.rho, w.q, w.p, c)) return false;
    res.y = y;
    res.c = c;
    res.pi = pi;
    res.verified = true;
    res.method = method;
    return true;
  };

  std::vector<std::string> tried;
  for (EmptyRange conv : {EmptyRange::no_bonus, EmptyRange::bonus}) {
    try {
      const DigitString y = y_digits(word, res.rho, conv);
      if (attempt(y, conv == EmptyRange::no_bonus ? "case-rules" : "case-rules-bonus")) return res;
      tried.push_back(assemble(res.rho, y).to_string());
    } catch (const Error& e) {
      tried.push_back(e.reason());
    }
  }

  try {
    const DigitString y = y_from_relations(w, res.rho);
    if (attempt(y, "relations")) return res;
    tried.push_back(assemble(res.rho, y).to_string());
  } catch (const Error& e) {
    tried.push_back(e.reason());
  }

  // Bounded search over gap vectors near the case values.
  if (total <= 8) {
    std::vector<DigitString> options(total);
    const std::size_t closing = static_cast<std::size_t>(res.rho.inverse(1));
    for (int v = 2; v <= static_cast<int>(total); ++v) {
      const std::size_t j = static_cast<std::size_t>(res.rho.inverse(v));
      const std::size_t i = static_cast<std::size_t>(res.rho.inverse(v - 1));
      const Digit d = w.at(j) - w.at(i);
      DigitString& opt = options[j - 1];
      for (Digit x : {Digit{0}, Digit{1}, Digit{2}, d - 1, d, d + 1}) {
        if (x >= 0 && std::find(opt.begin(), opt.end(), x) == opt.end()) opt.push_back(x);
      }
    }
    options[closing - 1] = {w.at(closing), w.at(closing) + 1};
    DigitString y(total, 0);
    std::vector<std::size_t> idx(total, 0);
    for (;;) {
      for (std::size_t k = 0; k < total; ++k) y[k] = options[k][idx[k]];
      if (attempt(y, "gap-search")) return res;
      std::size_t k = 0;
      while (k < total && ++idx[k] == options[k].size()) idx[k++] = 0;
      if (k == total) break;
    }
  }
  std::string joined;
  for (const auto& t : tried) joined += (joined.empty() ? "" : ", ") + t;
  throw Error(ErrorCategory::inconclusive, "construction-failed",
              "no candidate for " + word.to_string() + " verifies (case-rule candidates: " + joined + ")");
}

}  // namespace negbeta
