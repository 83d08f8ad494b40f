#pragma once

// Internal working representation for diagram rewrites: abstract arcs with
// a successor relation plus crossing records; emits a validated Diagram
// with canonical consecutive numbering.

#include <map>
#include <vector>

#include "cp2/diagram.hpp"

namespace cp2::detail {

struct XRec {
    int u_in = -1, u_out = -1, o_in = -1, o_out = -1;
    bool positive = true; // geometric sign of the crossing
};

class Assembler {
  public:
    int new_arc();
    // Strand flow: `b` follows `a` (through a crossing or a silent junction).
    void set_succ(int a, int b);
    void add_crossing(const XRec& x);
    // Declare the two ids to be the same arc.
    void merge(int keep, int absorb);

    Diagram emit() const;

  private:
    int find(int a) const;

    mutable std::vector<int> parent_;
    std::map<int, int> succ_;
    std::vector<XRec> crossings_;
};

} // namespace cp2::detail
