#include "tourney/io.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace tourney {

namespace {

[[noreturn]] void parse_error(const std::string& msg) {
  throw TournamentError(TournamentErrorKind::InvalidArgument, "parse error: " + msg);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) parse_error("bad integer '" + std::string(s) + "'");
  return v;
}

// Splits "key=value key2=value2" on whitespace.
std::string_view field(std::string_view line, std::string_view key) {
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end]))) ++end;
    std::string_view tok = line.substr(pos, end - pos);
    if (tok.size() > key.size() && tok.substr(0, key.size()) == key && tok[key.size()] == '=') {
      return tok.substr(key.size() + 1);
    }
    if (tok == std::string(key) + "=") return {};
    pos = end;
  }
  parse_error("missing field '" + std::string(key) + "'");
}

bool has_field(std::string_view line, std::string_view key) {
  const std::string k = std::string(key) + "=";
  return line.find(k) != std::string_view::npos;
}

}  // namespace

std::string to_text(const Tournament& t) {
  static constexpr char kHex[] = "0123456789abcdef";
  const int n = t.size();
  std::string hex;
  int nibble = 0;
  int filled = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      nibble = (nibble << 1) | (t.beats(i, j) ? 1 : 0);
      if (++filled == 4) {
        hex.push_back(kHex[nibble]);
        nibble = 0;
        filled = 0;
      }
    }
  if (filled > 0) hex.push_back(kHex[nibble << (4 - filled)]);
  return "n=" + std::to_string(n) + " bits=" + hex;
}

Tournament tournament_from_text(std::string_view line) {
  line = trim(line);
  const int n = parse_int(field(line, "n"));
  if (n < 1 || n > Tournament::kMaxVertices) parse_error("n out of range");
  const std::string_view hex = field(line, "bits");
  const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (hex.size() != (pairs + 3) / 4) {
    parse_error("expected " + std::to_string((pairs + 3) / 4) + " hex digits for n=" + std::to_string(n));
  }
  std::vector<std::uint64_t> out(n, 0);
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(hex[bit / 4])));
      int v = 0;
      if (c >= '0' && c <= '9') {
        v = c - '0';
      } else if (c >= 'a' && c <= 'f') {
        v = c - 'a' + 10;
      } else {
        parse_error("bad hex digit");
      }
      if ((v >> (3 - bit % 4)) & 1) {
        out[i] |= std::uint64_t{1} << j;
      } else {
        out[j] |= std::uint64_t{1} << i;
      }
    }
  if (pairs % 4 != 0) {
    const char c = hex.back();
    const int v = std::isdigit(static_cast<unsigned char>(c)) ? c - '0' : std::tolower(c) - 'a' + 10;
    if (v & ((1 << (4 - pairs % 4)) - 1)) parse_error("nonzero padding bits");
  }
  return Tournament::from_out_masks(std::move(out));
}

nlohmann::json to_json(const Tournament& t) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : t.arcs()) arcs.push_back({a.tail, a.head});
  return {{"n", t.size()}, {"arcs", arcs}};
}

namespace {

std::vector<Arc> arcs_from_json(const nlohmann::json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) parse_error("arc must be a [tail, head] pair");
    arcs.push_back({a[0].get<int>(), a[1].get<int>()});
  }
  return arcs;
}

}  // namespace

Tournament tournament_from_json(const nlohmann::json& j) {
  try {
    return Tournament::from_arcs(j.at("n").get<int>(), arcs_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

nlohmann::json to_json(const Digraph& g) {
  nlohmann::json arcs = nlohmann::json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head});
  return {{"n", g.size()}, {"arcs", arcs}};
}

Digraph digraph_from_json(const nlohmann::json& j) {
  try {
    return Digraph::from_arcs(j.at("n").get<int>(), arcs_from_json(j));
  } catch (const nlohmann::json::exception& e) {
    parse_error(e.what());
  }
}

Digraph digraph_from_string(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '{') {
    try {
      return digraph_from_json(nlohmann::json::parse(s));
    } catch (const nlohmann::json::parse_error& e) {
      parse_error(e.what());
    }
  }
  if (has_field(s, "bits")) return Digraph::from_tournament(tournament_from_text(s));
  const int n = parse_int(field(s, "n"));
  std::vector<Arc> arcs;
  std::string_view list = field(s, "arcs");
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    std::string_view item = list.substr(0, comma);
    const std::size_t dash = item.find('-');
    if (dash == std::string_view::npos) parse_error("arc must look like u-v");
    arcs.push_back({parse_int(item.substr(0, dash)), parse_int(item.substr(dash + 1))});
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return Digraph::from_arcs(n, arcs);
}

}  // namespace tourney
