#pragma once

// Oriented planar link diagrams as PD codes: parsing and validation,
// component analysis, linking numbers, Kauffman bracket and Jones
// polynomial by full state expansion.

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "cp2/laurent.hpp"

namespace cp2 {

namespace detail {
class Assembler;
}
class detail_assembler_access;

// (a,b,c,d) lists the incident edges counterclockwise starting from the
// incoming under-strand.
struct Crossing {
    std::array<int, 4> e;
    bool operator==(const Crossing&) const = default;
    int a() const { return e[0]; }
    int b() const { return e[1]; }
    int c() const { return e[2]; }
    int d() const { return e[3]; }
};

class Diagram {
  public:
    Diagram() = default;
    // Full validation: labels 1..2c each twice, per-component consecutive
    // numbering, orientation-consistent crossings with derivable signs.
    Diagram(std::vector<Crossing> crossings, std::vector<int> circles);

    // Whitespace-separated X(a,b,c,d) terms plus optional O(k) terms
    // declaring crossingless unknot components with circular edge label k.
    static Diagram parse(const std::string& text);
    std::string str() const;

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<int>& circles() const { return circles_; }

    int component_count() const { return static_cast<int>(components_.size()); }
    // Edge labels per component; crossingless circles come last.
    const std::vector<std::vector<int>>& components() const { return components_; }
    int component_of(int edge) const;

    int successor(int edge) const;
    // +1 when the over-strand runs from slot d to slot b.
    int sign(int crossing_index) const { return signs_[crossing_index]; }
    int writhe() const;

    bool operator==(const Diagram& o) const {
        return crossings_ == o.crossings_ && circles_ == o.circles_;
    }

  private:
    friend class detail_assembler_access;

    // For rewrite machinery: signs are given rather than solved, so
    // degenerate components whose orientation the PD text cannot express
    // (an all-over two-edge circle) keep their intended orientation.
    Diagram(std::vector<Crossing> crossings, std::vector<int> circles, std::vector<int> signs);

    void validate(const std::vector<int>* given_signs);

    std::vector<Crossing> crossings_;
    std::vector<int> circles_;
    std::vector<std::vector<int>> components_;
    std::map<int, int> edge_component_;
    std::map<int, int> succ_;
    std::vector<int> signs_;
};

// Half the signed count of crossings between the two components.
int linking_number(const Diagram& d, int comp1, int comp2);

// Sorted multiset of pairwise linking numbers.
std::vector<int> linking_multiset(const Diagram& d);

// Exact bracket via the 2^n state sum, loop value -A^2 - A^-2,
// normalized to 1 on the unknot. Crossing budget 16.
Laurent kauffman_bracket(const Diagram& d);

// (-A)^(-3w) * bracket; invariant of the oriented link.
Laurent jones(const Diagram& d);

// For knots the Jones exponents in A are multiples of 4; substitute
// t = A^-4.
Laurent jones_t(const Laurent& jones_in_a);

// All positive crossings become negative and vice versa.
Diagram mirror_diagram(const Diagram& d);

// String-orientation reversal of one component.
Diagram reverse_component(const Diagram& d, int comp);

// Trace closure of a braid word: generator j is written j (positive) or
// -j (negative), 1 <= |j| < strands.
Diagram braid_closure(int strands, const std::vector<int>& word);

struct OrientationVector {
    std::vector<int> signs; // one +-1 per torus-link component
};

// d_+ - d_-: the homological degree determined by capping orientations.
int tnn_degree(const OrientationVector& v);

} // namespace cp2
