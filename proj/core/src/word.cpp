#include "negbeta/word.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "negbeta/error.hpp"

namespace negbeta {

const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::less: return "less";
    case Ordering::equal: return "equal";
    case Ordering::greater: return "greater";
  }
  return "?";
}

const char* to_string(Primitivity p) {
  switch (p) {
    case Primitivity::primitive: return "primitive";
    case Primitivity::almost_primitive_square: return "almost_primitive_square";
    case Primitivity::imprimitive: return "imprimitive";
  }
  return "?";
}

Ordering alt_lex_compare(const DigitString& v, const DigitString& w) {
  if (v.size() != w.size()) {
    throw domain_error("length-mismatch", "finite words must have equal length to be compared");
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] != w[k]) return alt_lex_decide(v[k], w[k], k + 1);
  }
  return Ordering::equal;
}

DigitString primitive_root(const DigitString& v) {
  const std::size_t n = v.size();
  for (std::size_t len = 1; len < n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = v[i] == v[i - len];
    if (ok) return DigitString(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len));
  }
  return v;
}

EventuallyPeriodicWord::EventuallyPeriodicWord(DigitString preperiod, DigitString period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  if (period_.empty()) throw domain_error("empty-period", "period of an eventually periodic word must be nonempty");
  auto negative = [](Digit d) { return d < 0; };
  if (std::any_of(preperiod_.begin(), preperiod_.end(), negative) ||
      std::any_of(period_.begin(), period_.end(), negative)) {
    throw domain_error("negative-digit", "digits must be nonnegative");
  }
  period_ = primitive_root(period_);
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
    preperiod_.pop_back();
  }
}

EventuallyPeriodicWord canonicalize(DigitString preperiod, DigitString period) {
  return EventuallyPeriodicWord(std::move(preperiod), std::move(period));
}

Digit EventuallyPeriodicWord::at(std::size_t k) const {
  if (k == 0) throw domain_error("bad-index", "word positions are 1-based");
  if (k <= preperiod_.size()) return preperiod_[k - 1];
  return period_[(k - preperiod_.size() - 1) % period_.size()];
}

DigitString EventuallyPeriodicWord::prefix(std::size_t length) const {
  DigitString out;
  out.reserve(length);
  for (std::size_t k = 1; k <= length; ++k) out.push_back(at(k));
  return out;
}

EventuallyPeriodicWord EventuallyPeriodicWord::tail(std::size_t k) const {
  if (k == 0) throw domain_error("bad-index", "word positions are 1-based");
  if (k <= preperiod_.size()) {
    return EventuallyPeriodicWord(DigitString(preperiod_.begin() + static_cast<std::ptrdiff_t>(k - 1), preperiod_.end()),
                                  period_);
  }
  DigitString rotated = period_;
  std::rotate(rotated.begin(),
              rotated.begin() + static_cast<std::ptrdiff_t>((k - preperiod_.size() - 1) % period_.size()),
              rotated.end());
  return EventuallyPeriodicWord({}, std::move(rotated));
}

EventuallyPeriodicWord EventuallyPeriodicWord::prepend(const DigitString& head) const {
  DigitString pre = head;
  pre.insert(pre.end(), preperiod_.begin(), preperiod_.end());
  return EventuallyPeriodicWord(std::move(pre), period_);
}

Digit EventuallyPeriodicWord::max_digit() const {
  Digit m = *std::max_element(period_.begin(), period_.end());
  for (Digit d : preperiod_) m = std::max(m, d);
  return m;
}

namespace {

bool all_single_char(const DigitString& d) {
  return std::all_of(d.begin(), d.end(), [](Digit x) { return x <= 9; });
}

std::string join(const DigitString& d, bool compact) {
  std::string out;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(d[i]);
  }
  return out;
}

}  // namespace

std::string digits_to_string(const DigitString& d) {
  return join(d, all_single_char(d));
}

DigitString parse_digits(std::string_view text) {
  DigitString out;
  if (text.find(',') == std::string_view::npos) {
    for (char c : text) {
      if (c == ' ') continue;
      if (c < '0' || c > '9') {
        throw domain_error("malformed-word", "unexpected character '" + std::string(1, c) + "' in digit string");
      }
      out.push_back(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) {
      Digit value = 0;
      auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
      if (ec != std::errc() || ptr != item.data() + item.size() || value < 0) {
        throw domain_error("malformed-word", "bad digit '" + std::string(item) + "'");
      }
      out.push_back(value);
    } else if (end != text.size()) {
      throw domain_error("malformed-word", "empty digit in comma list");
    }
    start = end + 1;
  }
  return out;
}

std::string EventuallyPeriodicWord::to_string() const {
  const bool compact = all_single_char(preperiod_) && all_single_char(period_);
  std::string out = join(preperiod_, compact);
  out += '(';
  out += join(period_, compact);
  // Comma mode must be recognizable from the literal itself.
  if (!compact && out.find(',') == std::string::npos) out += ',';
  out += ')';
  return out;
}

EventuallyPeriodicWord EventuallyPeriodicWord::parse(std::string_view literal) {
  while (!literal.empty() && literal.front() == ' ') literal.remove_prefix(1);
  while (!literal.empty() && literal.back() == ' ') literal.remove_suffix(1);
  const auto open = literal.find('(');
  if (open == std::string_view::npos || literal.empty() || literal.back() != ')') {
    throw domain_error("malformed-word", "word literal must look like PREFIX(PERIOD): '" + std::string(literal) + "'");
  }
  std::string_view pre = literal.substr(0, open);
  std::string_view per = literal.substr(open + 1, literal.size() - open - 2);
  if (per.find('(') != std::string_view::npos || per.find(')') != std::string_view::npos) {
    throw domain_error("malformed-word", "nested parentheses in word literal");
  }
  const bool comma_mode = literal.find(',') != std::string_view::npos;
  auto parse_part = [&](std::string_view part) {
    if (!comma_mode) return parse_digits(part);
    while (!part.empty() && part.back() == ',') part.remove_suffix(1);
    if (part.empty()) return DigitString{};
    if (part.find(',') == std::string_view::npos) {
      // single entry in comma mode is a whole number
      return parse_digits(std::string(part) + ",");
    }
    return parse_digits(part);
  };
  DigitString period = parse_part(per);
  if (period.empty()) throw domain_error("malformed-word", "empty period in word literal");
  return EventuallyPeriodicWord(parse_part(pre), std::move(period));
}

DigitString AnchoredForm::digits() const {
  DigitString out = head;
  out.insert(out.end(), period.begin(), period.end());
  return out;
}

AnchoredForm anchored_form(const EventuallyPeriodicWord& w) {
  AnchoredForm f;
  f.q = w.preperiod_length() + 1;
  f.p = w.period_length();
  f.head = w.prefix(f.q);
  DigitString all = w.prefix(f.q + f.p);
  f.period.assign(all.begin() + static_cast<std::ptrdiff_t>(f.q), all.end());
  return f;
}

Ordering alt_lex_compare(const EventuallyPeriodicWord& v, const EventuallyPeriodicWord& w) {
  const std::size_t horizon = std::max(v.preperiod_length(), w.preperiod_length()) +
                              std::lcm(v.period_length(), w.period_length());
  for (std::size_t k = 1; k <= horizon; ++k) {
    Digit a = v.at(k), b = w.at(k);
    if (a != b) return alt_lex_decide(a, b, k);
  }
  return Ordering::equal;
}

EventuallyPeriodicWord sup_of_shifts(const EventuallyPeriodicWord& w) {
  EventuallyPeriodicWord best = w;
  for (std::size_t k = 2; k <= w.distinct_tails(); ++k) {
    EventuallyPeriodicWord t = w.tail(k);
    if (alt_lex_compare(t, best) == Ordering::greater) best = std::move(t);
  }
  return best;
}

bool is_sup_fixed(const EventuallyPeriodicWord& w) { return sup_of_shifts(w) == w; }

DigitString derived_word(const DigitString& v) {
  if (v.empty()) throw domain_error("empty-word", "derived word of the empty word is undefined");
  DigitString out = v;
  if (v.back() != 0) {
    out.back() -= 1;
    out.push_back(0);
    return out;
  }
  if (v.size() == 1) throw domain_error("derived-undefined", "derived word of \"0\" is undefined");
  out.pop_back();
  out.back() += 1;
  return out;
}

Primitivity primitivity_class(const DigitString& v) {
  if (v.empty()) throw domain_error("empty-word", "primitivity of the empty word is undefined");
  const std::size_t root = primitive_root(v).size();
  const std::size_t k = v.size() / root;
  if (k == 1) return Primitivity::primitive;
  if (k == 2 && root % 2 == 1) return Primitivity::almost_primitive_square;
  return Primitivity::imprimitive;
}

DigitString phi_power(unsigned k) {
  constexpr std::size_t kMaxLength = std::size_t{1} << 26;
  DigitString cur{0};
  for (unsigned step = 0; step < k; ++step) {
    DigitString next;
    for (Digit d : cur) {
      if (d == 0) {
        next.push_back(1);
      } else {
        next.insert(next.end(), {1, 0, 0});
      }
      if (next.size() > kMaxLength) throw resource_error("phi^" + std::to_string(k) + "(0) is too long");
    }
    cur = std::move(next);
  }
  return cur;
}

DigitString u_prefix(std::size_t length) {
  // phi^k(0) is a prefix of u for k >= 1 and its length grows geometrically.
  DigitString cur{1};
  while (cur.size() < length) {
    DigitString next;
    next.reserve(cur.size() * 2 + 2);
    for (Digit d : cur) {
      if (d == 0) {
        next.push_back(1);
      } else {
        next.insert(next.end(), {1, 0, 0});
      }
    }
    cur = std::move(next);
  }
  cur.resize(length);
  return cur;
}

Ordering compare_with_u(const EventuallyPeriodicWord& w) {
  std::size_t length = 64;
  std::size_t checked = 0;
  for (;;) {
    const DigitString u = u_prefix(length);
    for (std::size_t k = checked + 1; k <= length; ++k) {
      if (w.at(k) != u[k - 1]) return alt_lex_decide(w.at(k), u[k - 1], k);
    }
    checked = length;
    if (length > (std::size_t{1} << 24)) {
      throw std::logic_error("negbeta: eventually periodic word agrees with u on a very long prefix");
    }
    length *= 2;
  }
}

bool factorizes_over(const EventuallyPeriodicWord& w, const DigitString& v, const DigitString& v2) {
  const std::size_t q = w.preperiod_length();
  const std::size_t p = w.period_length();
  const std::size_t states = q + p;
  auto normalize = [&](std::size_t pos) { return pos < q ? pos : q + (pos - q) % p; };
  std::vector<std::vector<std::size_t>> next(states);
  for (std::size_t s = 0; s < states; ++s) {
    for (const DigitString* x : {&v, &v2}) {
      bool match = true;
      for (std::size_t i = 0; i < x->size() && match; ++i) match = w.at(s + 1 + i) == (*x)[i];
      if (match) next[s].push_back(normalize(s + x->size()));
    }
  }
  // An infinite factorization exists iff a cycle is reachable from state 0.
  std::vector<int> color(states, 0);
  bool cycle = false;
  auto dfs = [&](auto&& self, std::size_t s) -> void {
    color[s] = 1;
    for (std::size_t t : next[s]) {
      if (cycle) return;
      if (color[t] == 1) {
        cycle = true;
        return;
      }
      if (color[t] == 0) self(self, t);
    }
    color[s] = 2;
  };
  dfs(dfs, 0);
  return cycle;
}

bool in_vv_prime_star(const EventuallyPeriodicWord& w, const DigitString& v) {
  if (!is_sup_fixed(w)) {
    throw domain_error("sup-not-fixed", "word " + w.to_string() + " is not the supremum of its shifts");
  }
  const DigitString vp = derived_word(v);
  bool result = false;
  if (v.size() % 2 == 0) {
    auto low = EventuallyPeriodicWord::periodic(v);
    auto high = EventuallyPeriodicWord::periodic(v).prepend(vp);
    result = alt_lex_compare(low, w) != Ordering::greater && alt_lex_compare(w, high) != Ordering::greater;
  } else {
    auto low = EventuallyPeriodicWord::periodic(vp);
    auto high = EventuallyPeriodicWord::periodic(vp).prepend(v);
    result = alt_lex_compare(low, w) != Ordering::greater && alt_lex_compare(w, high) != Ordering::greater;
  }
  NEGBETA_CHECK(result == factorizes_over(w, v, vp),
                "order characterization of {v,v'}^inf disagrees with direct factorization for " + w.to_string());
  return result;
}

}  // namespace negbeta
