#pragma once

#include "tourney/numeric.hpp"
#include "tourney/tournament.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tourney {

struct OrderElement {
  std::string label;
  Tournament tournament;
  Rational value;  // f_alpha
};

/// T1 <_alpha T2 iff H_alpha(T1) < H_alpha(T2), decided on exact power sums: since
/// 1/(1-alpha) < 0 this is f_alpha(T1) > f_alpha(T2). Equal sums are incomparable.
struct EntropyOrder {
  int alpha = 2;
  std::vector<OrderElement> elements;

  bool less(std::size_t i, std::size_t j) const { return elements[i].value > elements[j].value; }
  /// All strict pairs (i, j) with i <_alpha j.
  std::vector<std::pair<int, int>> relation() const;
  /// Indices grouped by equal value, from the lowest class (largest f) up.
  std::vector<std::vector<int>> classes() const;
};

/// alpha in {2,3,4}. Labels default to standard_label, then to the element index.
/// Throws std::invalid_argument on empty input or mixed orders.
EntropyOrder build_order(std::span<const Tournament> ts, int alpha,
                         std::span<const std::string> labels = {});

/// Covering pairs (lower, upper) between individual elements: every member of a class
/// is joined to every member of the next class.
std::vector<std::pair<int, int>> hasse_edges(const EntropyOrder& order);

/// Covering pairs between value classes (indices into classes()).
std::vector<std::pair<int, int>> hasse_class_edges(const EntropyOrder& order);

enum class HasseMode { TwinNodes, MergedClasses };

std::string to_dot(const EntropyOrder& order, HasseMode mode = HasseMode::TwinNodes);

/// label,raw2,raw3,raw4 for each element in order.
std::string power_sum_csv(const EntropyOrder& order);

/// Names used in the tables for n = 3, 4, 5 (C3, TT3, TS4, ..., R5, UR1, ..., TT5).
/// UR1 and UR2 share all three power sums; UR1 is the one with the smaller canonical form.
std::optional<std::string> standard_label(const Tournament& t);

/// The twelve 5-tournaments in table order: R5, UR1, UR2, UR3, U1, U2, E, D, C, B, A, TT5.
std::vector<std::pair<std::string, Tournament>> five_tournament_table();
/// TS4, TK4, TO4, TT4.
std::vector<std::pair<std::string, Tournament>> four_tournament_table();

}  // namespace tourney
