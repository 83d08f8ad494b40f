#pragma once

// Reidemeister rewrites used by the invariance tests: kink insertion,
// finger poke, and the braid-relation form of the third move.

#include <vector>

#include "cp2/diagram.hpp"

namespace cp2 {

// R1: insert a kink of the given sign on an edge.
Diagram r1_add(const Diagram& d, int edge, bool positive);

// R2: push a finger of `over_edge` across `under_edge`, creating a
// cancelling pair of crossings; `flip` picks the poke direction.
Diagram r2_poke(const Diagram& d, int over_edge, int under_edge, bool flip);

// R3 as the braid relation: rewrite (j, j+1, j) -> (j+1, j, j+1) or its
// all-negative / reversed variants at position `pos` of a braid word.
std::vector<int> r3_rewrite(const std::vector<int>& word, std::size_t pos);

} // namespace cp2
