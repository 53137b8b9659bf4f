#include "tourney/order.hpp"

#include "tourney/canonical.hpp"
#include "tourney/entropy.hpp"
#include "tourney/enumeration.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace tourney {

std::vector<std::pair<int, int>> EntropyOrder::relation() const {
  std::vector<std::pair<int, int>> r;
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j)
      if (less(i, j)) r.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return r;
}

std::vector<std::vector<int>> EntropyOrder::classes() const {
  std::vector<int> idx(elements.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return elements[a].value > elements[b].value; });
  std::vector<std::vector<int>> out;
  for (int i : idx) {
    if (out.empty() || elements[out.back().front()].value != elements[i].value) out.emplace_back();
    out.back().push_back(i);
  }
  return out;
}

EntropyOrder build_order(std::span<const Tournament> ts, int alpha, std::span<const std::string> labels) {
  if (ts.empty()) throw std::invalid_argument("an order needs at least one tournament");
  if (alpha < 2 || alpha > 4) throw std::invalid_argument("alpha must be 2, 3 or 4");
  if (!labels.empty() && labels.size() != ts.size()) throw std::invalid_argument("one label per tournament");
  EntropyOrder order;
  order.alpha = alpha;
  const int n = ts.front().size();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].size() != n) throw std::invalid_argument("all tournaments must have the same order");
    std::string label;
    if (!labels.empty()) label = labels[i];
    else label = standard_label(ts[i]).value_or("T" + std::to_string(i));
    order.elements.push_back({label, ts[i], power_sum(ts[i], alpha)});
  }
  return order;
}

std::vector<std::pair<int, int>> hasse_class_edges(const EntropyOrder& order) {
  // Exact values are totally ordered, so the quotient is a chain.
  std::vector<std::pair<int, int>> e;
  const auto cls = order.classes();
  for (std::size_t c = 0; c + 1 < cls.size(); ++c) e.emplace_back(static_cast<int>(c), static_cast<int>(c + 1));
  return e;
}

std::vector<std::pair<int, int>> hasse_edges(const EntropyOrder& order) {
  std::vector<std::pair<int, int>> e;
  const auto cls = order.classes();
  for (std::size_t c = 0; c + 1 < cls.size(); ++c)
    for (int lo : cls[c])
      for (int hi : cls[c + 1]) e.emplace_back(lo, hi);
  return e;
}

namespace {

std::string quoted(const std::string& s) {
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '\n') {
      q += "\\n";
      continue;
    }
    if (ch == '"' || ch == '\\') q += '\\';
    q += ch;
  }
  return q + "\"";
}

}  // namespace

std::string to_dot(const EntropyOrder& order, HasseMode mode) {
  std::ostringstream os;
  os << "digraph hasse_alpha" << order.alpha << " {\n";
  os << "  rankdir=BT;\n  edge [dir=none];\n";
  const auto cls = order.classes();
  if (mode == HasseMode::TwinNodes) {
    for (const auto& c : cls)
      for (int i : c)
        os << "  " << quoted(order.elements[i].label) << " [label="
           << quoted(order.elements[i].label + "\n" + to_string(order.elements[i].value)) << "];\n";
    for (const auto& [lo, hi] : hasse_edges(order))
      os << "  " << quoted(order.elements[lo].label) << " -> " << quoted(order.elements[hi].label) << ";\n";
  } else {
    std::vector<std::string> names;
    for (const auto& c : cls) {
      std::string name;
      for (int i : c) name += (name.empty() ? "" : ",") + order.elements[i].label;
      names.push_back(name);
      os << "  " << quoted(name) << " [label=" << quoted(name + "\n" + to_string(order.elements[c.front()].value))
         << "];\n";
    }
    for (const auto& [lo, hi] : hasse_class_edges(order))
      os << "  " << quoted(names[lo]) << " -> " << quoted(names[hi]) << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string power_sum_csv(const EntropyOrder& order) {
  std::ostringstream os;
  os << "label,raw2,raw3,raw4\n";
  for (const auto& e : order.elements) {
    const PowerSums p = power_sums(e.tournament);
    os << e.label << ',' << p.raw2 << ',' << p.raw3 << ',' << p.raw4 << '\n';
  }
  return os.str();
}

namespace {

std::string label_by_scores(const Tournament& t) {
  const auto s = score_sequence(t).scores;
  const auto is = [&](std::initializer_list<int> v) { return std::equal(s.begin(), s.end(), v.begin(), v.end()); };
  switch (t.size()) {
    case 3: return is({1, 1, 1}) ? "C3" : "TT3";
    case 4:
      if (is({1, 1, 2, 2})) return "TS4";
      if (is({0, 2, 2, 2})) return "TK4";
      if (is({1, 1, 1, 3})) return "TO4";
      return "TT4";
    case 5:
      if (is({2, 2, 2, 2, 2})) return "R5";
      if (is({1, 2, 2, 2, 3})) return power_sums(t).raw4 == 50 ? "UR3" : "UR";
      if (is({1, 1, 2, 3, 3})) return power_sums(t).raw4 == 116 ? "U1" : "U2";
      // A..E follow the rows of the power-sum table; these are out-degree sequences.
      if (is({1, 1, 2, 2, 4})) return "E";
      if (is({0, 2, 2, 3, 3})) return "D";
      if (is({0, 1, 3, 3, 3})) return "C";
      if (is({0, 2, 2, 2, 4})) return "B";
      if (is({1, 1, 1, 3, 4})) return "A";
      return "TT5";
    default: return "";
  }
}

const std::map<std::string, std::string>& five_labels() {
  static const std::map<std::string, std::string> labels = [] {
    std::map<std::string, std::string> m;
    int ur = 0;
    // The enumeration is sorted by canonical form, which fixes UR1 before UR2.
    for (const auto& t : enumerate_tournaments(5)) {
      std::string l = label_by_scores(t);
      if (l == "UR") l = "UR" + std::to_string(++ur);
      m.emplace(canonical_form(t), l);
    }
    return m;
  }();
  return labels;
}

}  // namespace

std::optional<std::string> standard_label(const Tournament& t) {
  if (t.size() == 3 || t.size() == 4) return label_by_scores(t);
  if (t.size() == 5) return five_labels().at(canonical_form(t));
  return std::nullopt;
}

std::vector<std::pair<std::string, Tournament>> five_tournament_table() {
  static const char* const kOrder[] = {"R5", "UR1", "UR2", "UR3", "U1", "U2", "E", "D", "C", "B", "A", "TT5"};
  std::map<std::string, Tournament> by_label;
  for (const auto& t : enumerate_tournaments(5)) by_label.emplace(*standard_label(t), t);
  std::vector<std::pair<std::string, Tournament>> out;
  for (const char* l : kOrder) out.emplace_back(l, by_label.at(l));
  return out;
}

std::vector<std::pair<std::string, Tournament>> four_tournament_table() {
  static const char* const kOrder[] = {"TS4", "TK4", "TO4", "TT4"};
  std::map<std::string, Tournament> by_label;
  for (const auto& t : enumerate_tournaments(4)) by_label.emplace(*standard_label(t), t);
  std::vector<std::pair<std::string, Tournament>> out;
  for (const char* l : kOrder) out.emplace_back(l, by_label.at(l));
  return out;
}

}  // namespace tourney
