#pragma once

#include "tourney/digraph.hpp"
#include "tourney/tournament.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace tourney {

// Text form of a tournament:
//   n=<n> bits=<hex>
// The bits list the upper triangle in pair order (0,1),(0,2),...,(0,n-1),(1,2),...,(n-2,n-1);
// a set bit means i -> j for the pair (i,j), i<j. Bits are packed most significant first
// into lowercase hex digits, the final digit zero-padded.
std::string to_text(const Tournament& t);
Tournament tournament_from_text(std::string_view line);

// JSON interchange form: {"n": 3, "arcs": [[0,1],[1,2],[2,0]]}
nlohmann::json to_json(const Tournament& t);
Tournament tournament_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Digraph& g);
Digraph digraph_from_json(const nlohmann::json& j);

/// Accepts the tournament text form, a JSON object (tournament or digraph), or
/// "n=<n> arcs=<u>-<v>,<u>-<v>,..." for a general digraph.
Digraph digraph_from_string(std::string_view s);

}  // namespace tourney
