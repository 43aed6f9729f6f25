#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "negbeta/algebraic.hpp"
#include "negbeta/analysis.hpp"
#include "negbeta/dynamics.hpp"
#include "negbeta/error.hpp"
#include "negbeta/inverse.hpp"
#include "negbeta/search.hpp"
#include "oracles.hpp"

using namespace negbeta;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  // Failures listed here are reported as FAIL but do not fail the run; each
  // one is explained in the README.
  bool documented_deviation;
  std::function<Outcome()> body;
};

AlgebraicNumber golden() { return *largest_root_gt1(IntPolynomial::from_descending({1, -1, -1})); }

bool near(const AlgebraicNumber& x, double printed, double tol = 5e-4) { return std::abs(x.to_double() - printed) <= tol; }

struct TableRow {
  double value;
  std::string polynomial;
  std::set<std::string> members;
};

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = {
      {1.0, "x - 1", {"12", "21", "123", "132", "213", "231", "321", "1324", "1342", "1432", "2134", "2143", "2314",
                      "2431", "3142", "3214", "3241", "3421", "4213"}},
      {1.618, "x^2 - x - 1", {"312", "1423", "3412", "4231"}},
      {1.755, "x^3 - 2x^2 + x - 1", {"2341", "2413", "3124", "4123"}},
      {1.839, "x^3 - x^2 - x - 1", {"4132"}},
      {2.0, "x - 2", {"1234", "1243", "4312"}},
      {2.247, "x^3 - 2x^2 - x + 1", {"4321"}},
  };
  return rows;
}

Outcome table_reproduction() {
  std::ostringstream why;
  int groups = 0;
  for (int n = 2; n <= 4; ++n) {
    std::map<std::string, std::set<std::string>> expected;
    for (const auto& row : table_rows()) {
      for (const auto& m : row.members) {
        if (static_cast<int>(m.size()) == n) expected[row.polynomial].insert(m);
      }
    }
    const auto by_value = spectrum(n);
    std::size_t seen_groups = 0;
    for (const auto& g : by_value) {
      ++groups;
      const std::string poly = g.minimal_polynomial.to_string();
      const TableRow* row = nullptr;
      for (const auto& r : table_rows()) {
        if (r.polynomial == poly) row = &r;
      }
      if (!row) {
        why << "n=" << n << " unexpected polynomial " << poly;
        return {false, why.str()};
      }
      if (!near(g.value, row->value)) {
        why << "n=" << n << " value " << g.value.decimal(6) << " vs " << row->value;
        return {false, why.str()};
      }
      std::set<std::string> members;
      for (const auto& p : g.members) members.insert(p.to_string());
      if (members != expected[poly]) {
        why << "n=" << n << " group " << poly << " members differ";
        return {false, why.str()};
      }
      ++seen_groups;
    }
    if (seen_groups != expected.size()) {
      why << "n=" << n << " has " << seen_groups << " groups, table has " << expected.size();
      return {false, why.str()};
    }
  }
  why << groups << " groups over n=2..4 match";
  return {true, why.str()};
}

Outcome worked_examples() {
  std::ostringstream why;
  bool ok = true;
  auto fail = [&](const std::string& s) {
    ok = false;
    why << s << "; ";
  };
  const auto r1 = analyze(Permutation::parse("3421"));
  if (!(r1.a == EventuallyPeriodicWord::parse("(100)")) || !r1.b_minus.is_one()) fail("3421");
  const auto r2 = analyze(Permutation::parse("892364157"));
  if (!r2.poly || r2.poly->to_string() != "x^8 - 4x^7 + x^6 - 2x^5 + 3x^4 - 2x^3 + x^2 - 3x + 3" ||
      !near(r2.b_minus, 3.831))
    fail("892364157");
  const auto r3 = analyze(Permutation::parse("453261"));
  if (!r3.b_minus.exact_value() || *r3.b_minus.exact_value() != 2) fail("453261");
  const auto r4 = analyze(Permutation::parse("7325416"));
  if (!(r4.a == EventuallyPeriodicWord::parse("211(210)")) || !r4.poly ||
      r4.poly->to_string() != "x^6 - 3x^5 + 2x^4 - x^3 - 1" || !near(r4.b_minus, 2.343))
    fail("7325416");
  const AlgebraicNumber phi = golden();
  const auto c1 = analyze(Permutation::parse("1423"));
  if (!(c1.a == EventuallyPeriodicWord::parse("1(0)")) || !(c1.b_minus == phi)) fail("1423");
  const auto c2 = analyze(Permutation::parse("3142"));
  if (!(c2.a == EventuallyPeriodicWord::parse("(100)")) || !c2.b_minus.is_one()) fail("3142");
  const auto c3 = analyze(Permutation::parse("2314"));
  if (!(c3.a == EventuallyPeriodicWord::parse("(0)")) || !c3.b_minus.is_one()) fail("2314");
  const auto c4 = analyze(Permutation::parse("4231"));
  if (!(c4.a == EventuallyPeriodicWord::parse("1(0)")) || !(c4.b_minus == phi)) fail("4231");
  for (const char* p : {"1423", "3142", "2314", "4231"}) {
    if (circular(Permutation::parse(p)).to_string() != "4312") fail(std::string("circular of ") + p);
  }
  if (ok) why << "all five examples match";
  return {ok, why.str()};
}

Outcome b1_counts() {
  const std::vector<std::int64_t> printed = {2, 5, 12, 19, 34, 57, 82, 115};
  const auto counts = count_b1(9);
  std::ostringstream why;
  for (std::size_t i = 0; i < counts.size(); ++i) why << (i ? " " : "") << counts[i];
  why << " (printed: 2 5 12 19 34 57 82 115)";
  return {counts == printed, why.str()};
}

Outcome extremes() {
  std::ostringstream why;
  for (int n = 4; n <= 7; ++n) {
    const auto r = extremal_report(n);
    if (!r.verified) {
      why << "n=" << n << " not verified";
      return {false, why.str()};
    }
  }
  why << "n=4..7 verified exhaustively";
  return {true, why.str()};
}

Outcome alphabet_oracle() {
  int mismatches = 0, total = 0;
  std::ostringstream why;
  for (int n = 4; n <= 5; ++n) {
    for (const auto& pi : all_permutations(n)) {
      ++total;
      const auto found = min_alphabet_bruteforce(pi);
      if (found.alphabet != analyze(pi).n_minus) {
        if (mismatches++ < 3) why << pi.to_string() << " ";
      }
    }
  }
  why << mismatches << " mismatches over " << total << " permutations";
  return {mismatches == 0, why.str()};
}

Outcome sandwich() {
  int checked = 0, bad = 0;
  std::ostringstream why;
  for (const auto& pi : all_permutations(4)) {
    if (b_minus_is_one(pi)) continue;
    ++checked;
    const auto r = verify_sandwich(pi, 0.05);
    if (!r.consistent || !r.at_checked) {
      if (bad++ < 3) why << pi.to_string() << " ";
    }
  }
  why << checked << " permutations with threshold above 1, " << bad << " inconsistent";
  return {bad == 0, why.str()};
}

Outcome round_trip() {
  const auto corpus = testing::expansion_corpus(3, 5);
  int failures = 0, by_search = 0, by_relations = 0;
  std::ostringstream why;
  for (const auto& w : corpus) {
    try {
      const InverseResult r = construct_pi(w);
      const AnalysisReport rep = analyze(r.pi);
      if (!(rep.a == w) || !(rep.b_minus == b_of(w)) || !rep.poly || !(*rep.poly == char_polynomial(w))) {
        if (failures++ < 3) why << w.to_string() << " ";
      }
      if (r.method == "gap-search") ++by_search;
      if (r.method == "relations") ++by_relations;
    } catch (const Error& e) {
      if (failures++ < 3) why << w.to_string() << "(" << e.reason() << ") ";
    }
  }
  why << corpus.size() << " expansions, " << failures << " failures, " << by_relations << " solved by the z-difference relations, " << by_search
      << " needed the gap search";
  return {failures == 0 && !corpus.empty(), why.str()};
}

Outcome pisot_spot_check() {
  std::ostringstream why;
  for (int n = 4; n <= 8; ++n) {
    DigitString pre;
    for (int d = n - 2; d >= 1; --d) pre.push_back(d);
    const auto rep = classify_perron_pisot(b_of(EventuallyPeriodicWord(pre, {0})));
    if (rep.classification != PisotClass::pisot || rep.margin < 1e-6) {
      why << "n=" << n << " classified " << to_string(rep.classification) << " margin " << rep.margin;
      return {false, why.str()};
    }
    why << "n=" << n << " margin " << rep.margin << "; ";
  }
  return {true, why.str()};
}

Outcome property_suites() {
  std::mt19937_64 rng(20240531);
  std::ostringstream why;
  // Order laws on random triples.
  for (int t = 0; t < 10000; ++t) {
    const auto a = testing::random_word(rng, 3, 4, 4);
    const auto b = testing::random_word(rng, 3, 4, 4);
    const auto c = testing::random_word(rng, 3, 4, 4);
    const Ordering ab = alt_lex_compare(a, b), ba = alt_lex_compare(b, a);
    if (ab != reverse(ba) || ((ab == Ordering::equal) != (a == b))) return {false, "antisymmetry " + a.to_string()};
    if (alt_lex_compare(a, a) != Ordering::equal) return {false, "reflexivity " + a.to_string()};
    if (a < b && b < c && !(a < c)) return {false, "transitivity " + a.to_string()};
  }
  // Partial sums of expansions converge to x.
  std::uniform_int_distribution<long> num(1, 999);
  const std::size_t K = 40;
  for (int t = 0; t < 1000; ++t) {
    mpq_class beta(1000 + num(rng) * 3, 1000);
    beta.canonicalize();
    mpq_class x(num(rng), 1000);
    x.canonicalize();
    const BetaField field = BetaField::rational(beta);
    ExpansionState s = initial_state(field, field.constant(x));
    for (std::size_t k = 0; k < K; ++k) s = step(field, s);
    const mpq_class err = abs(x - testing::partial_sum(beta, s.digits));
    mpq_class bound = 2;
    for (std::size_t k = 0; k < K; ++k) bound /= beta;
    if (err >= bound) return {false, "expansion identity at beta=" + beta.get_str() + " x=" + x.get_str()};
  }
  // Order embedding on random pairs.
  for (int t = 0; t < 1000; ++t) {
    mpq_class beta(1000 + num(rng) * 3, 1000);
    beta.canonicalize();
    mpq_class x(num(rng), 1000), y(num(rng), 1000);
    x.canonicalize();
    y.canonicalize();
    if (x == y) continue;
    const BetaField field = BetaField::rational(beta);
    ExpansionState sx = initial_state(field, field.constant(x)), sy = initial_state(field, field.constant(y));
    Ordering o = Ordering::equal;
    for (std::size_t k = 0; k < 200 && o == Ordering::equal; ++k) {
      sx = step(field, sx);
      sy = step(field, sy);
      if (sx.digits.back() != sy.digits.back()) o = alt_lex_decide(sx.digits.back(), sy.digits.back(), k + 1);
    }
    if (o == Ordering::equal) return {false, "expansions agree for 200 digits"};
    if ((x < y) != (o == Ordering::less)) return {false, "order embedding at x=" + x.get_str() + " y=" + y.get_str()};
  }
  // z monotonicity through S_7.
  long checked = 0;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& pi : all_permutations(n)) {
      const DigitString z = z_digits(pi).digits;
      for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
          if (pi(i) >= pi(j)) continue;
          const Digit zi = z[static_cast<std::size_t>(i - 1)], zj = z[static_cast<std::size_t>(j - 1)];
          if (zi > zj || (zi == zj && !(pi(i + 1) > pi(j + 1)))) return {false, "z monotonicity at " + pi.to_string()};
          ++checked;
        }
      }
    }
  }
  why << "10000 order triples, 1000 expansion sums, 1000 order pairs, " << checked << " z pairs";
  return {true, why.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "table reproduction", 5, false, table_reproduction},
      {2, "worked examples", 2, false, worked_examples},
      {3, "threshold-one counts", 60, true, b1_counts},
      {4, "extremal permutations", 600, false, extremes},
      {5, "alphabet oracle", 0, false, alphabet_oracle},
      {6, "sandwich", 0, false, sandwich},
      {7, "expansion round trip", 0, false, round_trip},
      {8, "pisot spot check", 0, false, pisot_spot_check},
      {9, "property suites", 0, false, property_suites},
  };
  int blocking = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.budget_seconds > 0 && secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " (over the time budget)";
    }
    std::string status = o.pass ? "PASS" : "FAIL";
    if (!o.pass && c.documented_deviation) status += " [documented deviation]";
    std::printf("criterion %d %s: %s (%s, %.2fs)\n", c.id, c.name.c_str(), status.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass && !c.documented_deviation) ++blocking;
  }
  return blocking == 0 ? 0 : 1;
}
