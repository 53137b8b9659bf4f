#include "commands.hpp"

#include "tourney/canonical.hpp"
#include "tourney/entropy.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/io.hpp"
#include "tourney/order.hpp"
#include "tourney/spectral.hpp"
#include "tourney/walks.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace tourney::cli {

namespace {

class Checks {
 public:
  void add(std::string name, bool pass, std::string detail = {}) {
    results_.push_back({std::move(name), pass, std::move(detail)});
  }

  template <class A, class B>
  void equal(std::string name, const A& expected, const B& got) {
    std::ostringstream d;
    d << "expected=" << expected << " got=" << got;
    add(std::move(name), expected == got, d.str());
  }

  void near(std::string name, double expected, double got, double tol) {
    std::ostringstream d;
    d.precision(12);
    d << "expected=" << expected << " got=" << got << " tol=" << tol;
    add(std::move(name), std::abs(expected - got) <= tol, d.str());
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

struct Row5 {
  const char* label;
  std::int64_t raw2, raw3, raw4;
};

constexpr Row5 kTable5[] = {{"R5", 20, 25, -20},   {"UR1", 22, 40, 46}, {"UR2", 22, 40, 46}, {"UR3", 22, 40, 50},
                            {"U1", 24, 55, 116},   {"U2", 24, 55, 120}, {"E", 26, 76, 258},  {"D", 26, 64, 138},
                            {"C", 28, 79, 208},    {"B", 28, 85, 280},  {"A", 28, 91, 328},  {"TT5", 30, 100, 354}};

struct Row4 {
  const char* label;
  std::int64_t raw2, raw3;
};

constexpr Row4 kTable4[] = {{"TS4", 10, 12}, {"TK4", 12, 21}, {"TO4", 12, 27}, {"TT4", 14, 36}};

// Index n - 2, n = 2..10.
constexpr std::int64_t kScoreCounts[] = {1, 2, 4, 9, 22, 59, 167, 490, 1486};
constexpr std::int64_t kH2Counts[] = {1, 2, 3, 6, 9, 15, 21, 31, 41};

std::int64_t h2_formula(int n) {
  if (n % 2 == 1) return binomial(n + 1, 3) / 4 + 1;
  return 2 * binomial(n / 2 + 1, 3) + 1;
}

// Classes of an order as "A,B|C|..." from the bottom up, labels sorted inside a class.
std::string class_chain(const EntropyOrder& order) {
  std::string s;
  for (const auto& c : order.classes()) {
    std::vector<std::string> labels;
    for (int i : c) labels.push_back(order.elements[i].label);
    std::sort(labels.begin(), labels.end());
    if (!s.empty()) s += '|';
    for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? "," : "") + labels[i];
  }
  return s;
}

EntropyOrder five_order(int alpha) {
  std::vector<Tournament> ts;
  std::vector<std::string> labels;
  for (auto& [l, t] : five_tournament_table()) {
    labels.push_back(l);
    ts.push_back(t);
  }
  return build_order(ts, alpha, labels);
}

std::vector<CheckResult> verify_small_tables() {
  Checks c;
  for (const auto& [label, t] : four_tournament_table()) {
    const auto& ref = *std::find_if(std::begin(kTable4), std::end(kTable4),
                                    [&](const Row4& r) { return label == r.label; });
    const PowerSums p = power_sums(t);
    c.equal("table4." + label + ".raw2", ref.raw2, p.raw2);
    c.equal("table4." + label + ".raw3", ref.raw3, p.raw3);
  }
  const auto table = five_tournament_table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto& [label, t] = table[i];
    const PowerSums p = power_sums(t);
    c.equal("table5." + label + ".raw2", kTable5[i].raw2, p.raw2);
    c.equal("table5." + label + ".raw3", kTable5[i].raw3, p.raw3);
    c.equal("table5." + label + ".raw4", kTable5[i].raw4, p.raw4);
  }
  const auto o2 = five_order(2), o3 = five_order(3), o4 = five_order(4);
  c.equal<std::string>("hasse.alpha2.chain", "TT5|A,B,C|D,E|U1,U2|UR1,UR2,UR3|R5", class_chain(o2));
  c.equal<std::string>("hasse.alpha3.chain", "TT5|A|B|C|E|D|U1,U2|UR1,UR2,UR3|R5", class_chain(o3));
  c.equal<std::string>("hasse.alpha4.chain", "TT5|A|B|E|C|D|U2|U1|UR3|UR1,UR2|R5", class_chain(o4));
  auto idx = [&](const EntropyOrder& o, const char* l) {
    for (std::size_t i = 0; i < o.elements.size(); ++i)
      if (o.elements[i].label == l) return i;
    throw std::logic_error("missing label");
  };
  c.add("hasse.non_refinement.C<2E", o2.less(idx(o2, "C"), idx(o2, "E")));
  c.add("hasse.non_refinement.C<3E", o3.less(idx(o3, "C"), idx(o3, "E")));
  c.add("hasse.non_refinement.E<4C", o4.less(idx(o4, "E"), idx(o4, "C")));
  return c.take();
}

std::vector<CheckResult> verify_counts() {
  Checks c;
  for (int n = 2; n <= 10; ++n) {
    c.equal("score_sequences.n" + std::to_string(n), kScoreCounts[n - 2], count_score_sequences(n));
    const std::int64_t h = distinct_entropy_value_count(n, 2);
    c.equal("distinct_h2.n" + std::to_string(n), kH2Counts[n - 2], h);
    if (n >= 3) c.equal("distinct_h2_formula.n" + std::to_string(n), h2_formula(n), h);
  }
  return c.take();
}

std::vector<CheckResult> verify_extremal23() {
  Checks c;
  for (int n = 4; n <= 7; ++n) {
    const auto ts = enumerate_tournaments(n);
    for (int alpha : {2, 3}) {
      std::vector<Rational> f;
      for (const auto& t : ts) f.push_back(power_sum(t, alpha));
      const Rational lo = *std::min_element(f.begin(), f.end());
      const Rational hi = *std::max_element(f.begin(), f.end());
      bool min_ok = true, max_ok = true;
      for (std::size_t i = 0; i < ts.size(); ++i) {
        const bool reg = n % 2 ? is_regular(ts[i]) : is_nearly_regular(ts[i]);
        min_ok = min_ok && ((f[i] == lo) == reg);
        max_ok = max_ok && ((f[i] == hi) == is_transitive(ts[i]));
      }
      const std::string base = "alpha" + std::to_string(alpha) + ".n" + std::to_string(n);
      c.add(base + ".max_entropy_iff_" + (n % 2 ? "regular" : "nearly_regular"), min_ok);
      c.add(base + ".min_entropy_iff_transitive", max_ok);
    }
  }
  return c.take();
}

std::vector<CheckResult> verify_regular_h4() {
  Checks c;
  const std::map<int, std::size_t> counts = {{5, 1}, {7, 3}, {9, 15}, {11, 1223}};
  for (const auto& [n, expected] : counts) {
    const auto rs = enumerate_regular(n);
    const std::string base = "regular.n" + std::to_string(n);
    c.equal(base + ".count", expected, rs.size());
    std::vector<std::int64_t> raw4;
    for (const auto& t : rs) raw4.push_back(power_sums(t).raw4);
    const std::int64_t lo = *std::min_element(raw4.begin(), raw4.end());
    const std::int64_t hi = *std::max_element(raw4.begin(), raw4.end());
    const Tournament cr = consecutive_rotational(n);
    const int k = n % 4 == 3 ? (n - 3) / 4 : (n - 1) / 4;
    const int m = (n - 1) / 2;
    const std::int64_t t4_bound = n % 4 == 3 ? static_cast<std::int64_t>(n) * m * binomial(k, 2)
                                             : static_cast<std::int64_t>(n) * k * (k - 1) * (k - 1);
    bool min_ok = true, max_ok = true, t4_ok = true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const bool dr = n % 4 == 3 ? is_doubly_regular(rs[i]) : is_quasi_doubly_regular(rs[i]);
      min_ok = min_ok && ((raw4[i] == lo) == dr);
      max_ok = max_ok && ((raw4[i] == hi) == is_isomorphic(rs[i], cr));
      const std::int64_t t4 = count_c4_t4(rs[i]).t4;
      t4_ok = t4_ok && t4 >= t4_bound && ((t4 == t4_bound) == dr);
    }
    const std::string dr_name = n % 4 == 3 ? "doubly_regular" : "quasi_doubly_regular";
    c.add(base + ".f4_min_iff_" + dr_name, min_ok);
    c.add(base + ".f4_max_iff_consecutive_rotational", max_ok);
    c.add(base + ".t4_bound_tight_iff_" + dr_name, t4_ok, "bound=" + std::to_string(t4_bound));
    // C(n,2)^4 H*_4 = -raw4.
    const std::int64_t nn = n;
    const std::int64_t lower = -nn * (nn - 1) * (3 * nn * nn * nn - 17 * nn * nn + nn - 3) / 48;
    const std::int64_t upper = n % 4 == 3 ? -nn * nn * (nn - 1) * (nn * nn - 6 * nn + 1) / 16
                                          : -nn * (nn - 1) * (nn - 1) * (nn * nn - 5 * nn - 4) / 16;
    c.equal(base + ".scaled_hstar4_lower_bound", lower, -hi);
    c.equal(base + ".scaled_hstar4_upper_bound", upper, -lo);
  }
  const auto r7 = enumerate_regular(7);
  const Tournament cr7 = consecutive_rotational(7), qr7 = quadratic_residue_tournament(7);
  const auto b7 = std::find_if(r7.begin(), r7.end(),
                               [&](const Tournament& t) { return !is_isomorphic(t, cr7) && !is_isomorphic(t, qr7); });
  const auto h_r = renyi_exact(cr7, 4), h_b = renyi_exact(*b7, 4), h_q = renyi_exact(qr7, 4);
  c.add("regular.n7.h4_chain", h_r.defined() && h_b.defined() && h_q.defined() && h_star(qr7, 4) > h_star(*b7, 4) &&
                                    h_star(*b7, 4) > h_star(cr7, 4) && *h_r.value < *h_b.value && *h_b.value < *h_q.value);
  return c.take();
}

double match_distance(std::vector<std::complex<double>> a, std::vector<std::complex<double>> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (const auto& z : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](const auto& x, const auto& y) { return std::abs(x - z) < std::abs(y - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

std::vector<CheckResult> verify_spectra() {
  Checks c;
  for (int p : {7, 11}) {
    const Spectrum s = normalized_spectrum(quadratic_residue_tournament(p));
    const double d = match_distance(s.eigenvalues, doubly_regular_spectrum(p).eigenvalues);
    std::ostringstream detail;
    detail << "max_distance=" << d;
    c.add("doubly_regular_spectrum.QR" + std::to_string(p), d <= 1e-8, detail.str());
  }
  const Tournament c3 = consecutive_rotational(3), tt3 = transitive(3);
  for (double a : {2.0, 2.5, 12.0, 24.0}) {
    const auto x = renyi_numeric(c3, a), y = closed_form_C3(a);
    c.add("C3.closed_form.alpha" + std::to_string(a).substr(0, 4),
          x.defined() && y.defined() && std::abs(*x.value - *y.value) <= 1e-10);
  }
  c.add("C3.alpha3_undefined", !renyi_numeric(c3, 3.0).defined() && !closed_form_C3(3.0).defined());
  const double limit = std::log2(std::sqrt(3.0));
  bool monotone = true;
  double prev = -INFINITY;
  for (int k = 1; k <= 10; ++k) {
    const auto v = closed_form_C3(12.0 * k);
    monotone = monotone && v.defined() && *v.value > prev - 1e-6 && *v.value < limit;
    if (v.defined()) prev = *v.value;
  }
  c.add("C3.alpha12k_increasing_below_log2_sqrt3", monotone);
  c.near("TT3.alpha2", std::log2(9.0 / 5.0), renyi_numeric(tt3, 2.0).value.value_or(NAN), 1e-12);
  c.near("TT3.alpha50.closed_form", *closed_form_TT3(50.0).value, renyi_numeric(tt3, 50.0).value.value_or(NAN), 1e-10);
  c.near("TT3.alpha2000.limit", std::log2(3.0) - 1.0, *closed_form_TT3(2000.0).value, 1e-3);
  bool oracle = true;
  for (int n = 2; n <= 6; ++n)
    for (const auto& t : enumerate_tournaments(n)) {
      const Spectrum s = normalized_spectrum(t);
      for (int a : {2, 3, 4}) {
        const double exact = to_double(power_sum(t, a));
        oracle = oracle && std::abs(s.power_sum(a).real() - exact) <= 1e-8 && power_sum(t, a) == power_sum_trace(t, a);
      }
    }
  c.add("power_sums.exact_vs_trace_vs_eigen.n2_6", oracle);
  return c.take();
}

std::vector<CheckResult> verify_walks() {
  Checks c;
  const Digraph c3 = Digraph::from_tournament(consecutive_rotational(3));
  const double series = von_neumann_series(c3, 1e-7);
  c.near("C3.series_vs_eigen", von_neumann_eigen_complex(c3), series, 1e-6);
  const double eps = 0.05;
  const WalkEstimate w = von_neumann_walk(c3, WalkConfig{200000, 1 << 20, 12345}, eps);
  const double truncated = von_neumann_series(c3, eps);
  std::ostringstream d;
  d << "walk=" << w.estimate << " stderr=" << w.standard_error << " series=" << truncated << " J=" << w.length;
  c.add("C3.walk_vs_series_3sigma", std::abs(w.estimate - truncated) <= 3 * w.standard_error, d.str());
  for (int n : {3, 4, 5}) {
    const Digraph tt = Digraph::from_tournament(transitive(n));
    const auto b = entropy_upper_bounds(tt);
    c.near("TT" + std::to_string(n) + ".equals_degree_bound", b.degree_bound, von_neumann_series(tt, 1e-11), 1e-9);
  }
  const auto b3 = entropy_upper_bounds(c3);
  c.add("C3.strictly_below_degree_bound", series < b3.degree_bound - 1e-9);
  c.add("C3.below_log2n", series < b3.log_bound);
  return c.take();
}

using Suite = std::function<std::vector<CheckResult>()>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> s = {
      {"small-tables", verify_small_tables}, {"extremal-23", verify_extremal23}, {"regular-h4", verify_regular_h4},
      {"spectra", verify_spectra},           {"walks", verify_walks},           {"counts", verify_counts}};
  return s;
}

std::string table4_csv() {
  std::ostringstream os;
  os << "label,raw2,raw3,source\n";
  for (const auto& [label, t] : four_tournament_table()) {
    const PowerSums p = power_sums(t);
    os << label << ',' << p.raw2 << ',' << p.raw3 << ",reference\n";
  }
  return os.str();
}

std::string table5_csv() {
  std::ostringstream os;
  os << "label,scores,raw2,raw3,raw4,source\n";
  for (const auto& [label, t] : five_tournament_table()) {
    const PowerSums p = power_sums(t);
    std::string s;
    for (int x : score_sequence(t).scores) s += std::to_string(x);
    os << label << ',' << s << ',' << p.raw2 << ',' << p.raw3 << ',' << p.raw4 << ",reference\n";
  }
  return os.str();
}

std::string score_counts_csv() {
  std::ostringstream os;
  os << "n,score_sequences,distinct_h2,distinct_h2_formula,source\n";
  for (int n = 2; n <= 12; ++n)
    os << n << ',' << count_score_sequences(n) << ',' << distinct_entropy_value_count(n, 2) << ','
       << (n >= 3 ? std::to_string(h2_formula(n)) : "") << ',' << (n <= 10 ? "reference" : "computed") << '\n';
  return os.str();
}

std::string conjecture_table_csv() { return conjecture_csv(conjecture_table(8, 6)); }

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && p == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<Tournament> named_tournament(std::string_view s) {
  int n = 0;
  if (s.starts_with("QR") && parse_int(s.substr(2), n)) return quadratic_residue_tournament(n);
  if (s.starts_with("TT") && parse_int(s.substr(2), n)) return transitive(n);
  if (s.starts_with("R") && parse_int(s.substr(1), n)) return consecutive_rotational(n);
  if (s == "C3") return consecutive_rotational(3);
  for (const auto& [l, t] : four_tournament_table())
    if (s == l) return t;
  static const char* const kFive[] = {"UR1", "UR2", "UR3", "U1", "U2", "A", "B", "C", "D", "E"};
  if (std::find(std::begin(kFive), std::end(kFive), s) != std::end(kFive))
    for (const auto& [l, t] : five_tournament_table())
      if (s == l) return t;
  return std::nullopt;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : suites()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<CheckResult> run_verify(const std::string& suite) {
  const auto it = suites().find(suite);
  if (it == suites().end()) throw std::invalid_argument("unknown verify suite: " + suite);
  return it->second();
}

bool all_passed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

std::string format_report(const std::string& suite, const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.pass;
    os << (c.pass ? "PASS " : "FAIL ") << suite << '/' << c.name;
    if (!c.detail.empty()) os << ' ' << c.detail;
    os << '\n';
  }
  os << suite << ": " << passed << '/' << checks.size() << " passed\n";
  return os.str();
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids = {"table4", "table5", "score-counts", "conjecture"};
  return ids;
}

std::string run_tables(const std::string& id) {
  if (id == "table4") return table4_csv();
  if (id == "table5") return table5_csv();
  if (id == "score-counts") return score_counts_csv();
  if (id == "conjecture") return conjecture_table_csv();
  throw std::invalid_argument("unknown table: " + id);
}

Tournament parse_tournament(std::string_view spec) {
  const std::string_view s = trim(spec);
  if (auto t = named_tournament(s)) return *t;
  if (s.starts_with("n=")) return tournament_from_text(s);
  if (s.starts_with("{")) return tournament_from_json(nlohmann::json::parse(s));
  throw std::invalid_argument("cannot read a tournament from '" + std::string(s) + "'");
}

Digraph parse_digraph(std::string_view spec) {
  const std::string_view s = trim(spec);
  if (s.starts_with("u:") && s.size() > 3) {
    int n = 0;
    if (!parse_int(s.substr(3), n) || n < 1 || n > Tournament::kMaxVertices)
      throw std::invalid_argument("bad undirected graph name");
    std::vector<std::pair<int, int>> edges;
    switch (s[2]) {
      case 'P':
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
      case 'C':
        for (int i = 0; i < n; ++i)
          if (n > 2 || i == 0) edges.emplace_back(i, (i + 1) % n);
        break;
      case 'K':
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        break;
      default: throw std::invalid_argument("undirected names are u:P<n>, u:C<n>, u:K<n>");
    }
    return Digraph::undirected(n, edges);
  }
  if (auto t = named_tournament(s)) return Digraph::from_tournament(*t);
  return digraph_from_string(s);
}

}  // namespace tourney::cli
