#include "cp2/moves.hpp"

#include "cp2/detail/editable.hpp"
#include "cp2/errors.hpp"

namespace cp2 {

using detail::Editable;
using detail::XRec;

Diagram r1_add(const Diagram& d, int edge, bool positive) {
    Editable ed = Editable::from(d);
    auto it = ed.arc_of_edge.find(edge);
    if (it == ed.arc_of_edge.end())
        throw ContractError("r1_add: unknown edge " + std::to_string(edge));
    int tail = it->second;
    int head = ed.cut(tail);
    int loop = ed.new_arc();
    XRec x;
    if (positive) {
        x = {tail, loop, loop, head, true};
    } else {
        x = {loop, head, tail, loop, false};
    }
    ed.crossings.push_back(x);
    return ed.emit();
}

Diagram r2_poke(const Diagram& d, int over_edge, int under_edge, bool flip) {
    if (over_edge == under_edge)
        throw ContractError("r2_poke needs two distinct edges");
    Editable ed = Editable::from(d);
    if (!ed.arc_of_edge.count(over_edge) || !ed.arc_of_edge.count(under_edge))
        throw ContractError("r2_poke: unknown edge");
    int x0 = ed.arc_of_edge.at(over_edge);
    int x2 = ed.cut(x0);
    int x1 = ed.new_arc(); // finger tip
    int y0 = ed.arc_of_edge.at(under_edge);
    int y2 = ed.cut(y0);
    int y1 = ed.new_arc(); // segment under the finger
    ed.crossings.push_back({y0, y1, x0, x1, !flip});
    ed.crossings.push_back({y1, y2, x1, x2, flip});
    return ed.emit();
}

std::vector<int> r3_rewrite(const std::vector<int>& word, std::size_t pos) {
    if (pos + 3 > word.size())
        throw ContractError("r3_rewrite: position out of range");
    int a = word[pos], b = word[pos + 1], c = word[pos + 2];
    if (a != c || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1)
        throw ContractError("r3_rewrite: word does not match the braid relation here");
    std::vector<int> out = word;
    out[pos] = b;
    out[pos + 1] = a;
    out[pos + 2] = b;
    return out;
}

} // namespace cp2
