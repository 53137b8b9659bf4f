#pragma once

#include "tourney/digraph.hpp"
#include "tourney/tournament.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace tourney::cli {

inline constexpr std::string_view kVersion = "1.0.0";

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Suites: small-tables, extremal-23, regular-h4, spectra, walks, counts.
/// Throws std::invalid_argument for an unknown suite.
std::vector<CheckResult> run_verify(const std::string& suite);
const std::vector<std::string>& verify_suites();

/// One "PASS|FAIL <name> <detail>" line per check, then a summary line.
std::string format_report(const std::string& suite, const std::vector<CheckResult>& checks);
bool all_passed(const std::vector<CheckResult>& checks);

/// CSV for table4, table5, score-counts or conjecture.
std::string run_tables(const std::string& id);
const std::vector<std::string>& table_ids();

/// Named tournaments (TT<n>, R<n>, QR<p>, C3, TS4 ... TT5 table labels), the text form,
/// or JSON. Throws std::invalid_argument when nothing matches.
Tournament parse_tournament(std::string_view spec);
/// Digraph forms accepted by digraph_from_string, plus the tournament names above and
/// P<n>, K<n>, C<n> prefixed with "u:" for undirected paths, cliques and cycles.
Digraph parse_digraph(std::string_view spec);

}  // namespace tourney::cli
