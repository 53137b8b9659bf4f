#include "commands.hpp"

#include "tourney/io.hpp"
#include "tourney/order.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace tourney;

TEST_CASE("every verify suite passes") {
  for (const auto& suite : cli::verify_suites()) {
    CAPTURE(suite);
    const auto checks = cli::run_verify(suite);
    CHECK_FALSE(checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.pass);
    }
    CHECK(cli::all_passed(checks));
    const std::string report = cli::format_report(suite, checks);
    CHECK(std::count(report.begin(), report.end(), '\n') == static_cast<long>(checks.size()) + 1);
  }
  CHECK_THROWS_AS(cli::run_verify("nope"), std::invalid_argument);
}

TEST_CASE("report format") {
  const std::vector<cli::CheckResult> checks = {{"a", true, ""}, {"b", false, "got 1"}};
  CHECK(cli::format_report("s", checks) == "PASS s/a\nFAIL s/b got 1\ns: 1/2 passed\n");
  CHECK_FALSE(cli::all_passed(checks));
}

TEST_CASE("tables") {
  const std::string t5 = cli::run_tables("table5");
  CHECK(t5.rfind("label,scores,raw2,raw3,raw4,source\n", 0) == 0);
  CHECK(std::count(t5.begin(), t5.end(), '\n') == 13);
  CHECK(t5.find("UR3,") != std::string::npos);
  const std::string t4 = cli::run_tables("table4");
  CHECK(std::count(t4.begin(), t4.end(), '\n') == 5);
  const std::string sc = cli::run_tables("score-counts");
  CHECK(sc.find("10,1486,") != std::string::npos);
  for (const auto& id : cli::table_ids()) CHECK_FALSE(cli::run_tables(id).empty());
  CHECK_THROWS_AS(cli::run_tables("table9"), std::invalid_argument);
}

TEST_CASE("tournament and digraph arguments") {
  CHECK(cli::parse_tournament("TT4") == transitive(4));
  CHECK(cli::parse_tournament("R7") == consecutive_rotational(7));
  CHECK(is_doubly_regular(cli::parse_tournament("QR11")));
  CHECK(standard_label(cli::parse_tournament("UR3")) == "UR3");
  CHECK(cli::parse_tournament(" n=3 bits=e ") == tournament_from_text("n=3 bits=e"));
  const Tournament r5 = consecutive_rotational(5);
  CHECK(cli::parse_tournament(to_json(r5).dump()) == r5);
  CHECK_THROWS_AS(cli::parse_tournament("XYZ"), std::invalid_argument);

  const Digraph p3 = cli::parse_digraph("u:P3");
  CHECK(p3.size() == 3);
  CHECK(p3.total_out_degree() == 4);
  CHECK(p3.is_symmetric());
  CHECK(cli::parse_digraph("u:K4").total_out_degree() == 12);
  CHECK(cli::parse_digraph("u:C5").total_out_degree() == 10);
  CHECK(cli::parse_digraph("C3") == Digraph::from_tournament(consecutive_rotational(3)));
  CHECK_THROWS_AS(cli::parse_digraph("u:Q3"), std::invalid_argument);
}
