#pragma once

#include "tourney/tournament.hpp"

#include <string>
#include <vector>

namespace tourney {

// Canonical labelling maximises the column-major arc string
//   col_1, col_2, ..., col_{n-1},  col_d = bits [p(0)->p(d)], ..., [p(d-1)->p(d)]
// over all n! orderings p, compared lexicographically with 1 > 0. The search is a
// branch-and-bound over positions and returns the exact maximum for every n.
// Because the first k vertices only influence the first k-1 columns, deleting the
// last vertex of a canonical tournament leaves a canonical tournament.

/// order[i] is the original vertex placed at position i of the canonical labelling.
std::vector<int> canonical_order(const Tournament& t);

Tournament canonical_tournament(const Tournament& t);

/// One length byte followed by the canonical column-major bits packed MSB first.
/// Equal strings iff the tournaments are isomorphic; byte order is the stream order
/// used by the enumerators.
std::string canonical_form(const Tournament& t);

/// True when the identity labelling already is the canonical one.
bool is_canonical(const Tournament& t);

bool is_isomorphic(const Tournament& a, const Tournament& b);

/// Column-major bit string of the tournament as labelled (same packing as canonical_form).
std::string labelled_code(const Tournament& t);

}  // namespace tourney
