#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "negbeta/algebraic.hpp"
#include "negbeta/analysis.hpp"
#include "negbeta/dynamics.hpp"
#include "negbeta/error.hpp"
#include "negbeta/inverse.hpp"
#include "negbeta/search.hpp"

namespace negbeta::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "negbeta-cli/1";

struct Globals {
  std::string format = "text";
  unsigned precision = kDefaultMaxBits;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  bool timing = false;
};

using Row = std::vector<std::string>;

struct Output {
  json inputs = json::object();
  json result = json::object();
  std::string text;
  Row csv_header;
  std::vector<Row> csv_rows;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_csv_row(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
  out << "\n";
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Integer values print exactly, everything else with three decimals.
std::string short_value(const AlgebraicNumber& x) {
  if (auto v = x.exact_value(); v && v->get_den() == 1) return v->get_num().get_str();
  return x.decimal(3);
}

// Ascending degree; integers beyond 64 bits are written as strings.
json coefficients_json(const IntPolynomial& p) {
  json arr = json::array();
  for (const mpz_class& c : p.coefficients()) {
    if (c.fits_slong_p()) {
      arr.push_back(c.get_si());
    } else {
      arr.push_back(c.get_str());
    }
  }
  return arr;
}

json value_json(const AlgebraicNumber& x) {
  json j;
  j["rounded"] = short_value(x);
  j["decimal"] = x.decimal(30);
  if (auto v = x.exact_value()) {
    j["exact"] = v->get_str();
  } else {
    j["exact"] = nullptr;
  }
  j["polynomial"] = x.polynomial().to_string();
  j["coefficients"] = coefficients_json(x.polynomial());
  return j;
}

std::string digits_or_dash(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

json digits_json(const DigitString& d) {
  json a = json::array();
  for (Digit x : d) a.push_back(x);
  return a;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::vector<std::string> perm_strings(const std::vector<Permutation>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.to_string());
  return out;
}

class Table {
 public:
  void add(const std::string& key, const std::string& value) { rows_.emplace_back(key, value); }
  std::string str() const {
    std::size_t w = 0;
    for (const auto& r : rows_) w = std::max(w, r.first.size());
    std::ostringstream os;
    for (const auto& [k, v] : rows_) os << std::left << std::setw(static_cast<int>(w + 2)) << k << v << "\n";
    return os.str();
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

// "p/q", an integer, or "poly:c_d,...,c_0:k" for the k-th real root above 1.
BetaField parse_beta(const std::string& text, unsigned max_bits, json& echo) {
  if (text.rfind("poly:", 0) == 0) {
    const std::string rest = text.substr(5);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw domain_error("bad-beta", "expected poly:coefficients:k");
    std::vector<long> coeffs;
    std::stringstream ss(rest.substr(0, colon));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        coeffs.push_back(std::stol(item));
      } catch (const std::exception&) {
        throw domain_error("bad-beta", "bad coefficient '" + item + "'");
      }
    }
    int k = 0;
    try {
      k = std::stoi(rest.substr(colon + 1));
    } catch (const std::exception&) {
      throw domain_error("bad-beta", "bad root index in " + text);
    }
    const IntPolynomial poly = IntPolynomial::from_descending(coeffs);
    if (poly.degree() < 1) throw domain_error("bad-beta", "the polynomial must be nonconstant");
    const auto roots = real_roots_above_one(poly);
    if (k < 1 || static_cast<std::size_t>(k) > roots.size()) {
      throw domain_error("bad-beta", poly.to_string() + " has " + std::to_string(roots.size()) +
                                         " real roots above 1; index " + std::to_string(k) + " is out of range");
    }
    echo = {{"polynomial", poly.to_string()}, {"root_index", k}};
    return BetaField(roots[static_cast<std::size_t>(k - 1)], max_bits);
  }
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0) {
    throw domain_error("bad-beta", "cannot read '" + text + "' as p/q or poly:coeffs:k");
  }
  q.canonicalize();
  echo = {{"rational", q.get_str()}};
  return BetaField::rational(q, max_bits);
}

Permutation parse_perm(const std::string& s) { return Permutation::parse(s); }
EventuallyPeriodicWord parse_word(const std::string& s) { return EventuallyPeriodicWord::parse(s); }

Output do_analyze(const std::string& perm_text, bool minpoly) {
  Output o;
  const Permutation pi = parse_perm(perm_text);
  o.inputs["pi"] = pi.to_string();
  o.csv_header = {"pi", "m", "ell", "r", "z", "collapsed", "chosen", "a", "polynomial", "b_minus", "n_minus",
                  "epsilon"};
  if (pi.size() == 1) {
    o.result = {{"pi", "1"}, {"b_minus", value_json(AlgebraicNumber())}, {"n_minus", 1}};
    Table t;
    t.add("pi", "1");
    t.add("B-", "1");
    t.add("N-", "1");
    o.text = t.str();
    o.csv_rows.push_back({"1", "1", "-", "-", "", "no", "", "", "", "1", "1", "0"});
    return o;
  }
  const AnalysisReport r = analyze(pi, AnalyzeOptions{minpoly});
  const std::string poly = r.poly ? r.poly->to_string() : "-";
  json variants = json::array();
  std::vector<std::string> vtext;
  for (const auto& v : r.variants) {
    variants.push_back({{"index", *v.variant_index}, {"digits", v.to_string()}});
    vtext.push_back(std::to_string(*v.variant_index) + ":" + v.to_string());
  }
  o.result = {{"pi", pi.to_string()},
              {"circular", circular(pi).to_string()},
              {"m", r.landmarks.m},
              {"ell", r.landmarks.ell ? json(*r.landmarks.ell) : json(nullptr)},
              {"r", r.landmarks.r ? json(*r.landmarks.r) : json(nullptr)},
              {"z", r.z.to_string()},
              {"collapsed", r.collapsed},
              {"variants", variants},
              {"chosen", r.chosen.to_string()},
              {"a", r.a.to_string()},
              {"polynomial", r.poly ? json(poly) : json(nullptr)},
              {"b_minus", value_json(r.b_minus)},
              {"n_minus", r.n_minus},
              {"n_minus_formula", r.n_minus_formula},
              {"epsilon", r.epsilon},
              {"b1_exponent", r.b1_exponent ? json(*r.b1_exponent) : json(nullptr)}};
  if (r.minimal_polynomial) o.result["minimal_polynomial"] = r.minimal_polynomial->to_string();
  Table t;
  t.add("pi", pi.to_string());
  t.add("circular", circular(pi).to_string());
  t.add("m", std::to_string(r.landmarks.m));
  t.add("ell", digits_or_dash(r.landmarks.ell));
  t.add("r", digits_or_dash(r.landmarks.r));
  t.add("z", r.z.to_string());
  t.add("collapsed", yes_no(r.collapsed));
  if (r.collapsed) t.add("variants", join(vtext, " "));
  t.add("chosen", r.chosen.to_string());
  t.add("a", r.a.to_string());
  t.add("polynomial", poly);
  t.add("B-", short_value(r.b_minus));
  t.add("N-", std::to_string(r.n_minus));
  t.add("N- formula", std::to_string(r.n_minus_formula) + " (epsilon " + std::to_string(r.epsilon) + ")");
  if (r.minimal_polynomial) t.add("minimal", r.minimal_polynomial->to_string());
  o.text = t.str();
  o.csv_rows.push_back({pi.to_string(), std::to_string(r.landmarks.m), digits_or_dash(r.landmarks.ell),
                        digits_or_dash(r.landmarks.r), r.z.to_string(), yes_no(r.collapsed), r.chosen.to_string(),
                        r.a.to_string(), r.poly ? poly : "", r.b_minus.decimal(12), std::to_string(r.n_minus),
                        std::to_string(r.epsilon)});
  return o;
}

Output do_spectrum(int n, unsigned jobs) {
  Output o;
  o.inputs["n"] = n;
  o.csv_header = {"n", "value", "polynomial", "pi"};
  std::vector<SpectrumGroup> groups;
  if (n == 1) {
    groups.push_back({AlgebraicNumber(), IntPolynomial::from_descending({1, -1}), {Permutation::identity(1)}});
  } else {
    groups = spectrum(n, jobs);
  }
  json arr = json::array();
  std::vector<std::string> values, polys;
  std::size_t vw = 4, pw = 7;
  for (const auto& g : groups) {
    values.push_back(short_value(g.value));
    polys.push_back(g.minimal_polynomial.to_string());
    vw = std::max(vw, values.back().size());
    pw = std::max(pw, polys.back().size());
  }
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(vw + 2)) << "beta" << std::setw(static_cast<int>(pw + 2)) << "root of"
     << "permutations\n";
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const auto members = perm_strings(groups[g].members);
    arr.push_back({{"value", value_json(groups[g].value)},
                   {"minimal_polynomial", polys[g]},
                   {"members", members}});
    for (std::size_t k = 0; k < members.size(); k += 4) {
      const std::vector<std::string> chunk(members.begin() + static_cast<std::ptrdiff_t>(k),
                                           members.begin() + static_cast<std::ptrdiff_t>(std::min(k + 4, members.size())));
      os << std::left << std::setw(static_cast<int>(vw + 2)) << (k == 0 ? values[g] : "")
         << std::setw(static_cast<int>(pw + 2)) << (k == 0 ? polys[g] : "") << join(chunk, ", ") << "\n";
    }
    for (const auto& m : members) o.csv_rows.push_back({std::to_string(n), groups[g].value.decimal(12), polys[g], m});
  }
  o.text = os.str();
  o.result = {{"n", n}, {"groups", arr}};
  return o;
}

Output do_count_b1(int n_max, unsigned jobs) {
  Output o;
  o.inputs["n_max"] = n_max;
  o.csv_header = {"n", "count"};
  if (n_max < 2) throw domain_error("bad-size", "count-b1 needs n_max >= 2");
  const auto counts = count_b1(n_max, jobs);
  json arr = json::array();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const int n = static_cast<int>(i) + 2;
    arr.push_back({{"n", n}, {"count", counts[i]}});
    parts.push_back(std::to_string(counts[i]));
    o.csv_rows.push_back({std::to_string(n), std::to_string(counts[i])});
  }
  o.result = {{"counts", arr}};
  o.text = join(parts, " ") + "\n";
  return o;
}

Output do_extremal(int n, unsigned jobs) {
  Output o;
  o.inputs["n"] = n;
  const ExtremalReport r = extremal_report(n, jobs);
  const auto attaining = perm_strings(r.attaining);
  const auto expected_attaining = perm_strings(r.expected_attaining);
  const auto top = perm_strings(r.top_alphabet);
  const auto expected_top = perm_strings(r.expected_top_alphabet);
  o.result = {{"n", n},
              {"max_word", r.max_word.to_string()},
              {"max_value", value_json(r.max_value)},
              {"in_range", r.in_range},
              {"exhaustive", r.exhaustive},
              {"observed_max", r.observed_max ? value_json(*r.observed_max) : json(nullptr)},
              {"attaining", attaining},
              {"expected_attaining", expected_attaining},
              {"top_alphabet", top},
              {"expected_top_alphabet", expected_top},
              {"verified", r.verified}};
  Table t;
  t.add("n", std::to_string(n));
  t.add("max word", r.max_word.to_string());
  t.add("max value", short_value(r.max_value));
  t.add("in range", yes_no(r.in_range));
  t.add("exhaustive", yes_no(r.exhaustive));
  t.add("observed max", r.observed_max ? short_value(*r.observed_max) : "-");
  t.add("attaining", join(attaining, " "));
  t.add("expected", join(expected_attaining, " "));
  t.add("N- = n-1", join(top, " "));
  t.add("expected", join(expected_top, " "));
  t.add("verified", yes_no(r.verified));
  o.text = t.str();
  o.csv_header = {"n", "max_word", "max_value", "in_range", "exhaustive", "attaining", "top_alphabet", "verified"};
  o.csv_rows.push_back({std::to_string(n), r.max_word.to_string(), r.max_value.decimal(12), yes_no(r.in_range),
                        yes_no(r.exhaustive), join(attaining, " "), join(top, " "), yes_no(r.verified)});
  return o;
}

Output do_invert(const std::string& word_text) {
  Output o;
  const EventuallyPeriodicWord w = parse_word(word_text);
  o.inputs["word"] = w.to_string();
  const InverseResult r = construct_pi(w);
  const AlgebraicNumber b = b_of(w);
  o.result = {{"pi", r.pi.to_string()},
              {"n", r.pi.size()},
              {"q", r.q},
              {"p", r.p},
              {"c", r.c},
              {"rho", r.rho.to_string()},
              {"y", digits_json(r.y)},
              {"verified", r.verified},
              {"method", r.method},
              {"b_minus", value_json(b)}};
  Table t;
  t.add("word", w.to_string());
  t.add("q p", std::to_string(r.q) + " " + std::to_string(r.p));
  t.add("rho", r.rho.to_string());
  t.add("y", digits_to_string(r.y));
  t.add("c", std::to_string(r.c));
  t.add("pi", r.pi.to_string());
  t.add("verified", r.verified ? "true" : "false");
  t.add("method", r.method);
  t.add("B-", short_value(b));
  o.text = t.str();
  o.csv_header = {"word", "q", "p", "rho", "y", "c", "pi", "verified", "method", "b_minus"};
  o.csv_rows.push_back({w.to_string(), std::to_string(r.q), std::to_string(r.p), r.rho.to_string(),
                        digits_to_string(r.y), std::to_string(r.c), r.pi.to_string(),
                        r.verified ? "true" : "false", r.method, b.decimal(12)});
  return o;
}

Output do_expansion(const std::string& beta_text, std::size_t digits, unsigned bits) {
  Output o;
  json echo;
  const BetaField field = parse_beta(beta_text, bits, echo);
  o.inputs["beta"] = echo;
  o.inputs["digits"] = digits;
  const Expansion e = expansion_of_one(field, digits, true);
  o.result = {{"beta", value_json(field.beta())},
              {"digits", digits_json(e.digits)},
              {"periodic", e.word.has_value()},
              {"word", e.word ? json(e.word->to_string()) : json(nullptr)}};
  Table t;
  t.add("beta", field.beta().decimal(12));
  t.add("digits", digits_to_string(e.digits));
  t.add("expansion", e.word ? e.word->to_string() : "prefix only");
  o.text = t.str();
  o.csv_header = {"beta", "digits", "word"};
  o.csv_rows.push_back({field.beta().decimal(12), digits_to_string(e.digits), e.word ? e.word->to_string() : ""});
  return o;
}

Output do_member(const std::string& word_text, const std::string& beta_text, unsigned bits) {
  Output o;
  json echo;
  const EventuallyPeriodicWord w = parse_word(word_text);
  LazyExpansion d1(parse_beta(beta_text, bits, echo));
  o.inputs = {{"word", w.to_string()}, {"beta", echo}};
  const bool member = shift_membership(w, d1);
  o.result = {{"member", member}};
  o.text = std::string(member ? "true" : "false") + "\n";
  o.csv_header = {"word", "member"};
  o.csv_rows.push_back({w.to_string(), member ? "true" : "false"});
  return o;
}

Output do_pat(const std::string& word_text, int n) {
  Output o;
  const EventuallyPeriodicWord w = parse_word(word_text);
  o.inputs = {{"word", w.to_string()}, {"n", n}};
  const Permutation pi = pat_of_word(w, n);
  o.result = {{"pi", pi.to_string()}};
  o.text = pi.to_string() + "\n";
  o.csv_header = {"word", "n", "pi"};
  o.csv_rows.push_back({w.to_string(), std::to_string(n), pi.to_string()});
  return o;
}

Output do_realize(const std::string& perm_text, int max_prefix, int max_period, int max_alphabet) {
  Output o;
  const Permutation pi = parse_perm(perm_text);
  o.inputs = {{"pi", pi.to_string()}, {"max_prefix", max_prefix}, {"max_period", max_period},
              {"max_alphabet", max_alphabet}};
  const AlphabetResult r = min_alphabet_bruteforce(pi, max_prefix, max_period, max_alphabet);
  const std::int64_t formula = pi.size() >= 2 ? analyze(pi).n_minus : 1;
  o.result = {{"alphabet", r.alphabet},
              {"witness", r.witness.to_string()},
              {"formula", formula},
              {"agree", formula == r.alphabet}};
  Table t;
  t.add("pi", pi.to_string());
  t.add("alphabet", std::to_string(r.alphabet));
  t.add("witness", r.witness.to_string());
  t.add("formula", std::to_string(formula));
  t.add("agree", yes_no(formula == r.alphabet));
  o.text = t.str();
  o.csv_header = {"pi", "alphabet", "witness", "formula", "agree"};
  o.csv_rows.push_back({pi.to_string(), std::to_string(r.alphabet), r.witness.to_string(), std::to_string(formula),
                        yes_no(formula == r.alphabet)});
  return o;
}

Output do_verify(const std::string& perm_text, double margin) {
  Output o;
  const Permutation pi = parse_perm(perm_text);
  o.inputs = {{"pi", pi.to_string()}, {"margin", margin}};
  const SandwichReport r = verify_sandwich(pi, margin);
  auto opt_word = [](const std::optional<EventuallyPeriodicWord>& w) { return w ? json(w->to_string()) : json(nullptr); };
  o.result = {{"b_minus", value_json(r.b_minus)},
              {"above", {{"beta", r.above.beta.get_str()},
                         {"word", r.above.word.to_string()},
                         {"construction", r.above.construction}}},
              {"below_checked", r.below_checked},
              {"below_beta", r.below_checked ? json(r.below_beta.get_str()) : json(nullptr)},
              {"below_found", opt_word(r.below_found)},
              {"at_checked", r.at_checked},
              {"at_found", opt_word(r.at_found)},
              {"consistent", r.consistent}};
  auto side = [](bool checked, const std::optional<EventuallyPeriodicWord>& w) {
    if (!checked) return std::string("skipped");
    return w ? "realized by " + w->to_string() : std::string("not realized");
  };
  Table t;
  t.add("pi", pi.to_string());
  t.add("B-", short_value(r.b_minus));
  t.add("above", r.above.beta.get_str() + " realized by " + r.above.word.to_string() + " (" + r.above.construction + ")");
  t.add("at", side(r.at_checked, r.at_found));
  t.add("below", (r.below_checked ? r.below_beta.get_str() + " " : std::string()) + side(r.below_checked, r.below_found));
  t.add("consistent", yes_no(r.consistent));
  o.text = t.str();
  o.csv_header = {"pi", "b_minus", "above_beta", "above_word", "at", "below", "consistent"};
  o.csv_rows.push_back({pi.to_string(), r.b_minus.decimal(12), r.above.beta.get_str(), r.above.word.to_string(),
                        side(r.at_checked, r.at_found), side(r.below_checked, r.below_found), yes_no(r.consistent)});
  return o;
}

int exit_code_for(const Error& e) {
  switch (e.category()) {
    case ErrorCategory::undecidable:
      return undecidable;
    case ErrorCategory::inconclusive:
      return inconclusive;
    default:
      return domain;
  }
}

const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::domain:
      return "domain";
    case ErrorCategory::undecidable:
      return "undecidable";
    case ErrorCategory::inconclusive:
      return "inconclusive";
    case ErrorCategory::resource:
      return "resource";
  }
  return "domain";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  if (const char* env = std::getenv("NEGBETA_PRECISION")) {
    try {
      g.precision = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      err << "negbeta: ignoring unreadable NEGBETA_PRECISION\n";
    }
  }

  CLI::App app{"Threshold bases of negative beta-shifts for ordinal patterns", "negbeta"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--precision", g.precision, "Bit cap for certified interval refinement")->check(CLI::Range(64u, 1u << 20));
  app.add_option("--jobs", g.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));
  app.add_option("--seed", g.seed, "Seed recorded in the output envelope");
  app.add_flag("--timing", g.timing, "Report elapsed time");

  std::string perm, word, beta;
  int size = 0;
  bool minpoly = false;
  std::size_t digits = 40;
  int max_prefix = 0, max_period = 0, max_alphabet = 0;
  double margin = 0.05;
  std::function<Output()> action;
  std::string command;

  auto* analyze_cmd = app.add_subcommand("analyze", "Threshold data for one permutation");
  analyze_cmd->add_option("perm", perm, "Permutation, e.g. 4321 or 10,9,8,...")->required();
  analyze_cmd->add_flag("--minpoly", minpoly, "Also report the minimal polynomial of B-");
  analyze_cmd->callback([&] { action = [&] { return do_analyze(perm, minpoly); }; });

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Group S_n by threshold value");
  spectrum_cmd->add_option("n", size)->required()->check(CLI::Range(1, kEnumerationBound));
  spectrum_cmd->callback([&] { action = [&] { return do_spectrum(size, g.jobs); }; });

  auto* count_cmd = app.add_subcommand("count-b1", "Count permutations with threshold 1 for n = 2..nmax");
  count_cmd->add_option("nmax", size)->required()->check(CLI::Range(2, kEnumerationBound));
  count_cmd->callback([&] { action = [&] { return do_count_b1(size, g.jobs); }; });

  auto* extremal_cmd = app.add_subcommand("extremal", "Check the extremal permutations of S_n");
  extremal_cmd->add_option("n", size)->required()->check(CLI::Range(3, 64));
  extremal_cmd->callback([&] { action = [&] { return do_extremal(size, g.jobs); }; });

  auto* invert_cmd = app.add_subcommand("invert", "Build a permutation whose threshold has the given expansion of 1");
  invert_cmd->add_option("word", word, "Word literal, e.g. \"(2)\" or \"21(0)\"")->required();
  invert_cmd->callback([&] { action = [&] { return do_invert(word); }; });

  auto* expansion_cmd = app.add_subcommand("expansion", "Expansion of 1 in base -beta");
  expansion_cmd->add_option("--beta", beta, "p/q or poly:coeffs:k")->required();
  expansion_cmd->add_option("--digits", digits, "Digit budget")->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
  expansion_cmd->callback([&] { action = [&] { return do_expansion(beta, digits, g.precision); }; });

  auto* member_cmd = app.add_subcommand("member", "Whether a word lies in the (-beta)-shift");
  member_cmd->add_option("word", word)->required();
  member_cmd->add_option("--beta", beta, "p/q or poly:coeffs:k")->required();
  member_cmd->callback([&] { action = [&] { return do_member(word, beta, g.precision); }; });

  auto* pat_cmd = app.add_subcommand("pat", "Ordinal pattern of the first n tails of a word");
  pat_cmd->add_option("word", word)->required();
  pat_cmd->add_option("n", size)->required()->check(CLI::Range(1, 1000000));
  pat_cmd->callback([&] { action = [&] { return do_pat(word, size); }; });

  auto* realize_cmd = app.add_subcommand("realize", "Smallest alphabet realizing a permutation, by search");
  realize_cmd->add_option("perm", perm)->required();
  realize_cmd->add_option("--max-prefix", max_prefix, "Preperiod bound (default 2n)")->check(CLI::NonNegativeNumber);
  realize_cmd->add_option("--max-period", max_period, "Period bound (default 2n)")->check(CLI::NonNegativeNumber);
  realize_cmd->add_option("--max-alphabet", max_alphabet, "Alphabet bound (default n)")->check(CLI::NonNegativeNumber);
  realize_cmd->callback([&] { action = [&] { return do_realize(perm, max_prefix, max_period, max_alphabet); }; });

  auto* verify_cmd = app.add_subcommand("verify", "Check realizability just above, at, and just below B-");
  verify_cmd->add_option("perm", perm)->required();
  verify_cmd->add_option("--margin", margin, "Distance from B-")->check(CLI::Range(1e-3, 10.0));
  verify_cmd->callback([&] { action = [&] { return do_verify(perm, margin); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "negbeta: " << e.what() << "\n";
    return domain;
  }
  command = app.get_subcommands().front()->get_name();

  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    o = action();
  } catch (const Error& e) {
    err << "negbeta: " << e.reason() << ": " << e.what() << "\n";
    if (g.format == "json") {
      json env = {{"schema", kSchema},
                  {"command", command},
                  {"error", {{"category", category_name(e.category())}, {"reason", e.reason()}, {"message", e.what()}}}};
      out << env.dump(2) << "\n";
    }
    return exit_code_for(e);
  } catch (const std::invalid_argument& e) {
    err << "negbeta: invalid-argument: " << e.what() << "\n";
    return domain;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (g.format == "json") {
    json env = {{"schema", kSchema},
                {"command", command},
                {"inputs", o.inputs},
                {"precision", g.precision},
                {"seed", g.seed},
                {"result", o.result}};
    if (g.timing) env["timing_ms"] = elapsed;
    out << env.dump(2) << "\n";
  } else if (g.format == "csv") {
    write_csv_row(out, o.csv_header);
    for (const auto& row : o.csv_rows) write_csv_row(out, row);
  } else {
    out << o.text;
  }
  if (g.timing && g.format != "json") err << "elapsed " << std::fixed << std::setprecision(1) << elapsed << " ms\n";
  return ok;
}

}  // namespace negbeta::cli
