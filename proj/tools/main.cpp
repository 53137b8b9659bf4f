#include "commands.hpp"

#include "tourney/canonical.hpp"
#include "tourney/entropy.hpp"
#include "tourney/enumeration.hpp"
#include "tourney/io.hpp"
#include "tourney/order.hpp"
#include "tourney/spectral.hpp"
#include "tourney/walks.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

using namespace tourney;

namespace {

struct Common {
  std::string out;
  std::string format;
};

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

std::vector<std::string> read_inputs(const std::vector<std::string>& args, const std::string& file) {
  std::vector<std::string> lines = args;
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw std::runtime_error("cannot open " + file);
    for (std::string l; std::getline(f, l);)
      if (!l.empty() && l[0] != '#') lines.push_back(l);
  }
  if (lines.size() == 1 && lines[0] == "-") {
    lines.clear();
    for (std::string l; std::getline(std::cin, l);)
      if (!l.empty() && l[0] != '#') lines.push_back(l);
  }
  if (lines.empty()) throw std::runtime_error("no input given");
  return lines;
}

void emit(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw std::runtime_error("cannot write " + c.out);
  f << text;
}

std::string tournament_list(const std::vector<Tournament>& ts, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& t : ts) arr.push_back(to_json(t));
    os << arr.dump() << '\n';
  } else {
    for (const auto& t : ts) os << to_text(t) << '\n';
  }
  return os.str();
}

Tournament random_tournament(int n, std::mt19937_64& rng) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) arcs.push_back(rng() & 1 ? Arc{i, j} : Arc{j, i});
  return Tournament::from_arcs(n, arcs);
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> v;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) v.push_back(std::stoi(item));
  return v;
}

std::string entropy_rows(const std::vector<std::string>& inputs, const std::string& alpha_text, bool exact, bool raw,
                         const std::string& format) {
  const double alpha = std::stod(alpha_text);
  int alpha_int = 0;
  if (exact) {
    if (alpha != std::floor(alpha) || alpha < 2 || alpha > 4)
      throw std::invalid_argument("--exact needs alpha in {2,3,4}");
    alpha_int = static_cast<int>(alpha);
  }
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream csv;
  csv << "input,n,alpha,method,value,reason" << (exact ? ",power_sum" : "") << (raw ? ",raw2,raw3,raw4" : "") << '\n';
  for (const auto& in : inputs) {
    const Tournament t = cli::parse_tournament(in);
    const EntropyValue v = exact ? renyi_exact(t, alpha_int) : renyi_numeric(t, alpha);
    const std::string value = v.defined() ? fmt(*v.value) : "UNDEFINED";
    nlohmann::json row = {{"input", in},        {"n", t.size()},   {"alpha", alpha_text},
                          {"method", exact ? "exact" : "spectrum"}, {"value", value}, {"reason", to_string(v.reason)}};
    csv << '"' << in << "\"," << t.size() << ',' << alpha_text << ',' << (exact ? "exact" : "spectrum") << ',' << value
        << ',' << to_string(v.reason);
    if (exact) {
      const std::string f = to_string(power_sum(t, alpha_int));
      row["power_sum"] = f;
      csv << ',' << f;
    }
    if (raw) {
      const PowerSums p = power_sums(t);
      row["raw2"] = p.raw2;
      row["raw3"] = p.raw3;
      row["raw4"] = p.raw4;
      csv << ',' << p.raw2 << ',' << p.raw3 << ',' << p.raw4;
    }
    csv << '\n';
    arr.push_back(row);
  }
  return format == "json" ? arr.dump(2) + "\n" : csv.str();
}

std::string spectrum_rows(const std::vector<std::string>& inputs, const std::string& format) {
  nlohmann::json arr = nlohmann::json::array();
  std::ostringstream csv;
  csv << "input,index,re,im\n";
  for (const auto& in : inputs) {
    const Digraph g = cli::parse_digraph(in);
    const CharPoly p = char_poly(laplacian(g));
    const Spectrum s = normalized_spectrum(g);
    nlohmann::json coeffs = nlohmann::json::array(), eig = nlohmann::json::array();
    for (const auto& c : p.coeffs) coeffs.push_back(c.str());
    for (std::size_t i = 0; i < s.size(); ++i) {
      eig.push_back({s.eigenvalues[i].real(), s.eigenvalues[i].imag()});
      csv << '"' << in << "\"," << i << ',' << fmt(s.eigenvalues[i].real()) << ',' << fmt(s.eigenvalues[i].imag())
          << '\n';
    }
    arr.push_back({{"input", in},
                   {"laplacian_charpoly_ascending", coeffs},
                   {"normalization", g.total_out_degree()},
                   {"normalized_eigenvalues", eig},
                   {"relative_residual", relative_residual(p, roots(p))}});
  }
  return format == "csv" ? csv.str() : arr.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tournament entropy toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cli::kVersion));
  Common common;
  std::uint64_t seed = 1;
  std::map<CLI::App*, std::string> default_format;
  auto add_common = [&](CLI::App* sub, const std::string& format) {
    default_format[sub] = format;
    sub->add_option("--out", common.out, "Write output to this file");
    sub->add_option("--format", common.format, "Output format");
  };

  // gen
  auto* gen = app.add_subcommand("gen", "Build tournaments from a family");
  std::string family = "transitive";
  int gen_n = 3, gen_count = 1;
  std::string symbol;
  bool gen_canonical = false;
  gen->add_option("family", family, "transitive | consecutive | rotational | qr | random")->required();
  gen->add_option("--n", gen_n, "Number of vertices")->required();
  gen->add_option("--symbol", symbol, "Comma separated symbol for the rotational family");
  gen->add_option("--count", gen_count, "How many random tournaments");
  gen->add_option("--seed", seed, "Seed for the random family");
  gen->add_flag("--canonical", gen_canonical, "Relabel to the canonical form");
  add_common(gen, "text");

  // enum
  auto* en = app.add_subcommand("enum", "Enumerate isomorphism classes");
  int enum_n = 4, shards = 1;
  bool regular = false, scores = false, long_run = false;
  std::string checkpoint;
  std::size_t max_count = 0;
  en->add_option("--n", enum_n, "Number of vertices")->required();
  en->add_flag("--regular", regular, "Regular tournaments only (odd n)");
  en->add_flag("--scores", scores, "Score sequences instead of tournaments");
  en->add_flag("--long", long_run, "Allow long runs (regular n >= 11, general n > 8)");
  en->add_option("--shards", shards, "Parallel shards");
  en->add_option("--checkpoint", checkpoint, "Directory for resumable shard files");
  en->add_option("--max-count", max_count, "Keep only the first results");
  add_common(en, "text");

  // entropy
  auto* ent = app.add_subcommand("entropy", "Renyi entropy of tournaments");
  std::vector<std::string> inputs;
  std::string in_file, alpha_text = "2";
  bool exact = false, raw = false;
  ent->add_option("inputs", inputs, "Tournaments (names, text form, JSON, or - for stdin)");
  ent->add_option("--in", in_file, "File with one tournament per line");
  ent->add_option("--alpha", alpha_text, "Order alpha (real > 0, != 1)");
  ent->add_flag("--exact", exact, "Exact power sums (alpha in {2,3,4})");
  ent->add_flag("--raw", raw, "Also print raw2, raw3, raw4");
  add_common(ent, "csv");

  // spectrum
  auto* spec = app.add_subcommand("spectrum", "Laplacian characteristic polynomial and normalized spectrum");
  spec->add_option("inputs", inputs, "Digraphs or tournaments");
  spec->add_option("--in", in_file, "File with one input per line");
  add_common(spec, "json");

  // vn
  auto* vn = app.add_subcommand("vn", "Von Neumann entropy of a digraph");
  std::string method = "series", vn_input;
  double epsilon = 1e-7;
  std::int64_t trials = 100000, max_length = 1 << 20;
  vn->add_option("input", vn_input, "Digraph or tournament")->required();
  vn->add_option("--method", method, "eigen | series | walk")->check(CLI::IsMember({"eigen", "series", "walk"}));
  vn->add_option("--epsilon", epsilon, "Series tail bound");
  vn->add_option("--trials", trials, "Monte Carlo trials");
  vn->add_option("--max-length", max_length, "Upper limit on the walk length");
  vn->add_option("--seed", seed, "Monte Carlo seed");
  add_common(vn, "json");

  // hasse
  auto* hasse = app.add_subcommand("hasse", "Entropy order and Hasse diagram");
  int hasse_n = 5, alpha = 2;
  bool merge = false;
  hasse->add_option("inputs", inputs, "Tournaments (default: all classes on --n vertices)");
  hasse->add_option("--in", in_file, "File with one tournament per line");
  hasse->add_option("--n", hasse_n, "Use every class on n <= 8 vertices");
  hasse->add_option("--alpha", alpha, "2, 3 or 4")->check(CLI::Range(2, 4));
  hasse->add_flag("--merge", merge, "One node per value class");
  add_common(hasse, "dot");

  // verify
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  std::string suite;
  ver->add_option("suite", suite, "small-tables | extremal-23 | regular-h4 | spectra | walks | counts | all")
      ->required();
  add_common(ver, "text");

  // tables
  auto* tab = app.add_subcommand("tables", "Reproduce a table as CSV");
  std::string table_id;
  tab->add_option("id", table_id, "table4 | table5 | score-counts | conjecture")->required();
  add_common(tab, "csv");

  CLI11_PARSE(app, argc, argv);
  if (common.format.empty())
    for (const auto& [sub, format] : default_format)
      if (sub->parsed()) common.format = format;

  {
    std::string flags;
    for (int i = 1; i < argc; ++i) flags += (i > 1 ? " " : "") + std::string(argv[i]);
    std::cerr << "tourney " << cli::kVersion << " seed=" << seed << " flags: " << flags << '\n';
  }

  try {
    if (gen->parsed()) {
      std::vector<Tournament> ts;
      std::mt19937_64 rng(seed);
      if (family == "transitive") ts.push_back(transitive(gen_n));
      else if (family == "consecutive") ts.push_back(consecutive_rotational(gen_n));
      else if (family == "rotational") ts.push_back(rotational(RotationalSymbol{gen_n, parse_list(symbol)}));
      else if (family == "qr") ts.push_back(quadratic_residue_tournament(gen_n));
      else if (family == "random")
        for (int i = 0; i < gen_count; ++i) ts.push_back(random_tournament(gen_n, rng));
      else throw std::invalid_argument("unknown family: " + family);
      if (gen_canonical)
        for (auto& t : ts) t = canonical_tournament(t);
      emit(common, tournament_list(ts, common.format));
    } else if (en->parsed()) {
      if (scores) {
        std::ostringstream os;
        for_each_score_sequence(enum_n, [&](const std::vector<int>& s) {
          for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
          os << '\n';
        });
        emit(common, os.str());
        return 0;
      }
      std::vector<Tournament> ts;
      if (regular) {
        RegularEnumerationOptions opt;
        opt.allow_long = long_run;
        opt.parallel_shards = shards;
        if (!checkpoint.empty()) opt.checkpoint_dir = checkpoint;
        if (enum_n >= 11 && !long_run)
          throw std::invalid_argument("regular enumeration for n >= 11 needs --long");
        opt.on_shard_done = [](const ShardProgress& p) {
          std::cerr << "shard " << p.shard + 1 << '/' << p.shards << " done: " << p.found << " classes"
                    << (p.from_checkpoint ? " (checkpoint)" : "") << '\n';
        };
        ts = enumerate_regular(enum_n, opt);
      } else {
        EnumerationBudget budget;
        budget.parallel_shards = shards;
        if (long_run) budget.max_n = 10;
        ts = enumerate_tournaments(enum_n, budget);
      }
      if (max_count && ts.size() > max_count) ts.erase(ts.begin() + static_cast<std::ptrdiff_t>(max_count), ts.end());
      std::cerr << ts.size() << " classes\n";
      emit(common, tournament_list(ts, common.format));
    } else if (ent->parsed()) {
      emit(common, entropy_rows(read_inputs(inputs, in_file), alpha_text, exact, raw, common.format));
    } else if (spec->parsed()) {
      emit(common, spectrum_rows(read_inputs(inputs, in_file), common.format));
    } else if (vn->parsed()) {
      const Digraph g = cli::parse_digraph(vn_input);
      const auto bounds = entropy_upper_bounds(g);
      nlohmann::json j = {{"input", vn_input}, {"method", method}, {"epsilon", epsilon}};
      if (method == "eigen") {
        j["estimate"] = von_neumann_eigen(g);
      } else if (method == "series") {
        j["estimate"] = von_neumann_series(g, epsilon);
        j["terms"] = series_length(g.size(), epsilon);
      } else {
        const auto w = von_neumann_walk(g, WalkConfig{trials, max_length, seed}, epsilon);
        j["estimate"] = w.estimate;
        j["stderr"] = w.standard_error;
        j["terms"] = w.length;
        j["trials"] = trials;
        j["seed"] = seed;
        j["series_same_terms"] = von_neumann_series_terms(g, w.length);
      }
      j["degree_bound"] = bounds.degree_bound;
      j["log_bound"] = bounds.log_bound;
      j["acyclic"] = bounds.is_acyclic;
      emit(common, j.dump(2) + "\n");
    } else if (hasse->parsed()) {
      std::vector<Tournament> ts;
      if (inputs.empty() && in_file.empty()) {
        ts = enumerate_tournaments(hasse_n);
      } else {
        for (const auto& in : read_inputs(inputs, in_file)) ts.push_back(cli::parse_tournament(in));
      }
      const EntropyOrder order = build_order(ts, alpha);
      if (common.format == "csv") emit(common, power_sum_csv(order));
      else emit(common, to_dot(order, merge ? HasseMode::MergedClasses : HasseMode::TwinNodes));
    } else if (ver->parsed()) {
      const std::vector<std::string> names = suite == "all" ? cli::verify_suites() : std::vector<std::string>{suite};
      bool ok = true;
      std::string report;
      for (const auto& name : names) {
        const auto checks = cli::run_verify(name);
        ok = ok && cli::all_passed(checks);
        report += cli::format_report(name, checks);
      }
      emit(common, report);
      return ok ? 0 : 1;
    } else if (tab->parsed()) {
      emit(common, cli::run_tables(table_id));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
