#pragma once

// Mutable arc-level view of a diagram for local rewrites (kinks, pokes,
// band surgery). Arcs are delimited by crossings or by pending junctions;
// emit() renumbers canonically and revalidates.

#include <map>
#include <vector>

#include "cp2/detail/assembler.hpp"

namespace cp2::detail {

struct Editable {
    int arcs = 0;
    std::map<int, int> succ;        // junction/circle links only
    std::vector<XRec> crossings;    // through-crossing links implied
    std::map<int, int> arc_of_edge; // original edge/circle label -> arc

    static Editable from(const Diagram& d);

    int new_arc() { return arcs++; }

    // Cut an arc: the given id keeps the tail role, the returned fresh id
    // takes over the head role (crossing slots and any outgoing junction).
    int cut(int arc);

    Diagram emit() const;
};

} // namespace cp2::detail
