#include "cp2/diagram.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "cp2/detail/assembler.hpp"
#include "cp2/detail/editable.hpp"
#include "cp2/errors.hpp"

namespace cp2 {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<int> circles)
    : crossings_(std::move(crossings)), circles_(std::move(circles)) {
    validate(nullptr);
}

Diagram::Diagram(std::vector<Crossing> crossings, std::vector<int> circles, std::vector<int> signs)
    : crossings_(std::move(crossings)), circles_(std::move(circles)) {
    validate(&signs);
}

class detail_assembler_access {
  public:
    static Diagram make(std::vector<Crossing> xs, std::vector<int> circles,
                        std::vector<int> signs) {
        return Diagram(std::move(xs), std::move(circles), std::move(signs));
    }
};

void Diagram::validate(const std::vector<int>* given_signs) {
    int n = crossing_count();
    std::map<int, int> count;
    for (const auto& x : crossings_)
        for (int e : x.e) {
            if (e <= 0)
                throw ValidationError("edge labels must be positive");
            ++count[e];
        }
    for (const auto& [e, c] : count)
        if (c != 2)
            throw ValidationError("edge " + std::to_string(e) + " appears " + std::to_string(c) +
                                  " times; every edge must appear exactly twice");
    for (int e = 1; e <= 2 * n; ++e)
        if (!count.count(e))
            throw ValidationError("edge labels must be exactly 1..2c; missing " +
                                  std::to_string(e));
    if (static_cast<int>(count.size()) != 2 * n)
        throw ValidationError("edge labels must be exactly 1..2c");
    std::set<int> circle_set;
    for (int k : circles_) {
        if (k <= 0)
            throw ValidationError("circle labels must be positive");
        if (count.count(k) || !circle_set.insert(k).second)
            throw ValidationError("circle label " + std::to_string(k) + " collides");
    }

    // Components of crossing edges: strands pair a with c and b with d.
    if (n > 0) {
        UnionFind uf(2 * n + 1);
        for (const auto& x : crossings_) {
            uf.unite(x.a(), x.c());
            uf.unite(x.b(), x.d());
        }
        std::map<int, std::vector<int>> comps;
        for (int e = 1; e <= 2 * n; ++e)
            comps[uf.find(e)].push_back(e);
        for (auto& [root, edges] : comps) {
            std::sort(edges.begin(), edges.end());
            if (edges.back() - edges.front() + 1 != static_cast<int>(edges.size()))
                throw ValidationError("component containing edge " + std::to_string(edges.front()) +
                                      " is not numbered consecutively");
            components_.push_back(edges);
        }
        std::sort(components_.begin(), components_.end());
        for (std::size_t i = 0; i < components_.size(); ++i)
            for (int e : components_[i]) {
                edge_component_[e] = static_cast<int>(i);
                succ_[e] = e == components_[i].back() ? components_[i].front() : e + 1;
            }
    }
    for (int k : circles_) {
        edge_component_[k] = static_cast<int>(components_.size());
        components_.push_back({k});
        succ_[k] = k;
    }

    // Under-strand flow must match the numbering.
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        const auto& x = crossings_[i];
        if (succ_.at(x.a()) != x.c())
            throw ValidationError("crossing " + std::to_string(i + 1) +
                                  ": under-strand is not oriented a -> c");
    }

    if (given_signs) {
        if (given_signs->size() != crossings_.size())
            throw ContractError("sign vector size mismatch");
        signs_ = *given_signs;
        std::map<int, int> heads, tails;
        for (std::size_t i = 0; i < crossings_.size(); ++i) {
            const auto& x = crossings_[i];
            int over_in = signs_[i] > 0 ? x.d() : x.b();
            int over_out = signs_[i] > 0 ? x.b() : x.d();
            if (succ_.at(over_in) != over_out)
                throw ValidationError("crossing " + std::to_string(i + 1) +
                                      ": over-strand flow contradicts the numbering");
            ++heads[x.a()];
            ++heads[over_in];
            ++tails[x.c()];
            ++tails[over_out];
        }
        for (const auto& [e, cnt] : heads)
            if (cnt != 1 || tails[e] != 1)
                throw ValidationError("edge " + std::to_string(e) +
                                      ": inconsistent strand roles");
        return;
    }

    // Solve in/out roles of the over slots: slot a is an incoming end and
    // slot c an outgoing end; an edge's two ends have opposite roles, as do
    // the two over slots of one crossing.
    enum Role { UNKNOWN = 0, IN, OUT };
    // occurrence key: 4*crossing + slot
    std::map<int, std::array<int, 2>> occ; // edge -> two occurrence keys
    for (std::size_t i = 0; i < crossings_.size(); ++i)
        for (int s = 0; s < 4; ++s) {
            int e = crossings_[i].e[s];
            auto [it, fresh] = occ.emplace(e, std::array<int, 2>{-1, -1});
            it->second[fresh || it->second[0] < 0 ? 0 : 1] = static_cast<int>(4 * i + s);
        }
    std::map<int, Role> role;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        role[static_cast<int>(4 * i + 0)] = IN;
        role[static_cast<int>(4 * i + 2)] = OUT;
        role[static_cast<int>(4 * i + 1)] = UNKNOWN;
        role[static_cast<int>(4 * i + 3)] = UNKNOWN;
        // Numbering forces the flow when only one over direction is consistent.
        const auto& x = crossings_[i];
        bool d_to_b = succ_.at(x.d()) == x.b();
        bool b_to_d = succ_.at(x.b()) == x.d();
        if (!d_to_b && !b_to_d)
            throw ValidationError("crossing " + std::to_string(i + 1) +
                                  ": over-strand edges are not consecutive");
        if (d_to_b && !b_to_d) {
            role[static_cast<int>(4 * i + 3)] = IN;
            role[static_cast<int>(4 * i + 1)] = OUT;
        } else if (b_to_d && !d_to_b) {
            role[static_cast<int>(4 * i + 1)] = IN;
            role[static_cast<int>(4 * i + 3)] = OUT;
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [e, keys] : occ) {
            Role r0 = role.at(keys[0]), r1 = role.at(keys[1]);
            if (r0 != UNKNOWN && r1 == UNKNOWN) {
                role[keys[1]] = r0 == IN ? OUT : IN;
                changed = true;
            } else if (r1 != UNKNOWN && r0 == UNKNOWN) {
                role[keys[0]] = r1 == IN ? OUT : IN;
                changed = true;
            } else if (r0 != UNKNOWN && r0 == r1) {
                throw ValidationError("edge " + std::to_string(e) +
                                      ": both ends flow the same way");
            }
        }
        for (std::size_t i = 0; i < crossings_.size(); ++i) {
            Role rb = role.at(static_cast<int>(4 * i + 1));
            Role rd = role.at(static_cast<int>(4 * i + 3));
            if (rb != UNKNOWN && rd == UNKNOWN) {
                role[static_cast<int>(4 * i + 3)] = rb == IN ? OUT : IN;
                changed = true;
            } else if (rd != UNKNOWN && rb == UNKNOWN) {
                role[static_cast<int>(4 * i + 1)] = rd == IN ? OUT : IN;
                changed = true;
            } else if (rb != UNKNOWN && rb == rd) {
                throw ValidationError("crossing " + std::to_string(i + 1) +
                                      ": over slots flow the same way");
            }
        }
    }
    signs_.resize(crossings_.size());
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        Role rd = role.at(static_cast<int>(4 * i + 3));
        if (rd == UNKNOWN)
            throw ValidationError("crossing " + std::to_string(i + 1) +
                                  ": over-strand orientation is ambiguous");
        const auto& x = crossings_[i];
        int over_in = rd == IN ? x.d() : x.b();
        int over_out = rd == IN ? x.b() : x.d();
        if (succ_.at(over_in) != over_out)
            throw ValidationError("crossing " + std::to_string(i + 1) +
                                  ": over-strand flow contradicts the numbering");
        signs_[i] = rd == IN ? 1 : -1;
    }
}

Diagram Diagram::parse(const std::string& text) {
    std::vector<Crossing> crossings;
    std::vector<int> circles;
    std::istringstream is(text);
    std::string tok;
    while (is >> tok) {
        auto read_args = [&](char kind) {
            std::size_t open = tok.find('(');
            if (open == std::string::npos || tok.back() != ')')
                throw ParseError(std::string("bad PD term '") + tok + "'");
            std::string args = tok.substr(open + 1, tok.size() - open - 2);
            std::vector<int> vals;
            std::istringstream as(args);
            std::string piece;
            while (std::getline(as, piece, ','))
                try {
                    std::size_t pos = 0;
                    vals.push_back(std::stoi(piece, &pos));
                    if (pos != piece.size())
                        throw std::invalid_argument(piece);
                } catch (const std::exception&) {
                    throw ParseError(std::string("bad integer in PD term '") + tok + "'");
                }
            std::size_t want = kind == 'X' ? 4 : 1;
            if (vals.size() != want)
                throw ParseError(std::string("PD term '") + tok + "' expects " +
                                 std::to_string(want) + " arguments");
            return vals;
        };
        if (tok[0] == 'X') {
            auto v = read_args('X');
            crossings.push_back(Crossing{{v[0], v[1], v[2], v[3]}});
        } else if (tok[0] == 'O') {
            circles.push_back(read_args('O')[0]);
        } else {
            throw ParseError("unknown PD term '" + tok + "'");
        }
    }
    return Diagram(std::move(crossings), std::move(circles));
}

std::string Diagram::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& x : crossings_) {
        os << (first ? "" : " ") << "X(" << x.a() << "," << x.b() << "," << x.c() << "," << x.d()
           << ")";
        first = false;
    }
    for (int k : circles_) {
        os << (first ? "" : " ") << "O(" << k << ")";
        first = false;
    }
    return os.str();
}

int Diagram::component_of(int edge) const {
    auto it = edge_component_.find(edge);
    if (it == edge_component_.end())
        throw ContractError("unknown edge " + std::to_string(edge));
    return it->second;
}

int Diagram::successor(int edge) const {
    auto it = succ_.find(edge);
    if (it == succ_.end())
        throw ContractError("unknown edge " + std::to_string(edge));
    return it->second;
}

int Diagram::writhe() const {
    int w = 0;
    for (int s : signs_)
        w += s;
    return w;
}

int linking_number(const Diagram& d, int comp1, int comp2) {
    int nc = d.component_count();
    if (comp1 < 0 || comp1 >= nc || comp2 < 0 || comp2 >= nc)
        throw ContractError("unknown component id");
    if (comp1 == comp2)
        throw ContractError("linking number needs two distinct components");
    int sum = 0;
    for (int i = 0; i < d.crossing_count(); ++i) {
        const auto& x = d.crossings()[i];
        int cu = d.component_of(x.a());
        int co = d.component_of(x.b());
        if ((cu == comp1 && co == comp2) || (cu == comp2 && co == comp1))
            sum += d.sign(i);
    }
    if (sum % 2 != 0)
        throw ValidationError("odd inter-component crossing sum");
    return sum / 2;
}

std::vector<int> linking_multiset(const Diagram& d) {
    std::vector<int> out;
    for (int i = 0; i < d.component_count(); ++i)
        for (int j = i + 1; j < d.component_count(); ++j)
            out.push_back(linking_number(d, i, j));
    std::sort(out.begin(), out.end());
    return out;
}

Laurent kauffman_bracket(const Diagram& d) {
    int n = d.crossing_count();
    if (n > 16)
        throw ResourceError("state-sum budget is 16 crossings; diagram has " + std::to_string(n));
    int labels = 2 * n;
    std::vector<int> circle_ids;
    for (int k : d.circles())
        circle_ids.push_back(k);
    int total_nodes = labels + static_cast<int>(circle_ids.size());
    if (total_nodes == 0)
        return Laurent(1, "A");

    Laurent delta = Laurent::monomial(-1, 2, "A") + Laurent::monomial(-1, -2, "A");
    std::vector<Laurent> delta_pow(total_nodes + 1);
    delta_pow[0] = Laurent(1, "A");
    for (int i = 1; i <= total_nodes; ++i)
        delta_pow[i] = delta_pow[i - 1] * delta;

    // Exponent of A ranges over [-n, n] step 2; tally delta powers per exponent.
    std::map<int, std::vector<long long>> tally; // A-exponent -> count per loop count

    std::vector<int> parent(total_nodes);
    // Circle labels may exceed 2n; remap all labels to dense node ids once.
    std::map<int, int> node_of;
    for (int e = 1; e <= labels; ++e)
        node_of[e] = e - 1;
    for (std::size_t i = 0; i < circle_ids.size(); ++i)
        node_of[circle_ids[i]] = labels + static_cast<int>(i);

    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };

    for (unsigned s = 0; s < (1u << n); ++s) {
        std::iota(parent.begin(), parent.end(), 0);
        auto unite = [&](int x, int y) { parent[find(x)] = find(y); };
        int b_count = 0;
        for (int i = 0; i < n; ++i) {
            const auto& x = d.crossings()[i];
            if (s & (1u << i)) {
                ++b_count; // B-smoothing joins (a,d) and (b,c)
                unite(node_of[x.a()], node_of[x.d()]);
                unite(node_of[x.b()], node_of[x.c()]);
            } else {
                unite(node_of[x.a()], node_of[x.b()]);
                unite(node_of[x.c()], node_of[x.d()]);
            }
        }
        int loops = 0;
        for (int v = 0; v < total_nodes; ++v)
            if (find(v) == v)
                ++loops;
        int exp = n - 2 * b_count;
        auto& t = tally[exp];
        if (t.size() < static_cast<std::size_t>(loops))
            t.resize(loops, 0);
        ++t[loops - 1];
    }

    Laurent result(0, "A");
    for (const auto& [exp, counts] : tally)
        for (std::size_t l = 0; l < counts.size(); ++l)
            if (counts[l] != 0)
                result += Laurent::monomial(counts[l], 0, "A") * delta_pow[l] *
                          Laurent::monomial(1, exp, "A");
    return result;
}

Laurent jones(const Diagram& d) {
    int w = d.writhe();
    Laurent factor = Laurent::monomial((w % 2 == 0) ? 1 : -1, -3 * w, "A");
    return factor * kauffman_bracket(d);
}

Laurent jones_t(const Laurent& jones_in_a) {
    Laurent out(0, "t");
    for (const auto& [e, c] : jones_in_a.terms()) {
        if (e % 4 != 0)
            throw ContractError("Jones exponents are not multiples of 4 (link, not knot)");
        out += Laurent::monomial(c, -e / 4, "t");
    }
    return out;
}

Diagram mirror_diagram(const Diagram& d) {
    std::vector<Crossing> out;
    for (int i = 0; i < d.crossing_count(); ++i) {
        const auto& x = d.crossings()[i];
        if (d.sign(i) > 0)
            out.push_back(Crossing{{x.d(), x.a(), x.b(), x.c()}});
        else
            out.push_back(Crossing{{x.b(), x.c(), x.d(), x.a()}});
    }
    return Diagram(std::move(out), d.circles());
}

Diagram reverse_component(const Diagram& d, int comp) {
    if (comp < 0 || comp >= d.component_count())
        throw ContractError("unknown component id");
    const auto& edges = d.components()[comp];
    int lo = edges.front(), hi = edges.back();
    auto relabel = [&](int e) { return (e >= lo && e <= hi) ? lo + hi - e : e; };
    std::vector<Crossing> out;
    for (const auto& x : d.crossings()) {
        Crossing y = x;
        if (x.a() >= lo && x.a() <= hi)
            y = Crossing{{x.c(), x.d(), x.a(), x.b()}};
        for (int& e : y.e)
            e = relabel(e);
        out.push_back(y);
    }
    return Diagram(std::move(out), d.circles());
}

Diagram braid_closure(int strands, const std::vector<int>& word) {
    if (strands < 1)
        throw ContractError("braid_closure needs at least one strand");
    detail::Assembler asmb;
    std::vector<int> init(strands), cur(strands);
    for (int p = 0; p < strands; ++p)
        init[p] = cur[p] = asmb.new_arc();
    for (int g : word) {
        int j = std::abs(g);
        if (j < 1 || j >= strands)
            throw ContractError("braid generator out of range");
        int left = cur[j - 1], right = cur[j];
        int new_left = asmb.new_arc(), new_right = asmb.new_arc();
        detail::XRec x;
        if (g > 0) {
            // over-strand from lower-left to upper-right
            x.o_in = left;
            x.o_out = new_right;
            x.u_in = right;
            x.u_out = new_left;
            x.positive = true;
        } else {
            x.o_in = right;
            x.o_out = new_left;
            x.u_in = left;
            x.u_out = new_right;
            x.positive = false;
        }
        asmb.add_crossing(x);
        cur[j - 1] = new_left;
        cur[j] = new_right;
    }
    for (int p = 0; p < strands; ++p) {
        if (cur[p] == init[p])
            asmb.set_succ(init[p], init[p]); // untouched strand closes to a circle
        else
            asmb.merge(init[p], cur[p]);
    }
    return asmb.emit();
}

int tnn_degree(const OrientationVector& v) {
    if (v.signs.empty())
        throw ContractError("orientation vector must be nonempty");
    int d = 0;
    for (int s : v.signs) {
        if (s != 1 && s != -1)
            throw ContractError("orientation entries must be +-1");
        d += s;
    }
    return d;
}

} // namespace cp2

// ---------------------------------------------------------------------------
// Assembler and the editable arc view

namespace cp2::detail {

Editable Editable::from(const Diagram& d) {
    Editable ed;
    for (const auto& comp : d.components())
        for (int e : comp)
            ed.arc_of_edge[e] = ed.new_arc();
    for (int k : d.circles())
        ed.succ[ed.arc_of_edge.at(k)] = ed.arc_of_edge.at(k);
    for (int i = 0; i < d.crossing_count(); ++i) {
        const auto& x = d.crossings()[i];
        XRec r;
        r.u_in = ed.arc_of_edge.at(x.a());
        r.u_out = ed.arc_of_edge.at(x.c());
        r.positive = d.sign(i) > 0;
        r.o_in = ed.arc_of_edge.at(r.positive ? x.d() : x.b());
        r.o_out = ed.arc_of_edge.at(r.positive ? x.b() : x.d());
        ed.crossings.push_back(r);
    }
    return ed;
}

int Editable::cut(int arc) {
    int head = new_arc();
    for (auto& x : crossings) {
        if (x.u_in == arc)
            x.u_in = head;
        if (x.o_in == arc)
            x.o_in = head;
    }
    auto it = succ.find(arc);
    if (it != succ.end()) {
        succ[head] = it->second == arc ? arc : it->second;
        succ.erase(arc);
    }
    return head;
}

Diagram Editable::emit() const {
    Assembler a;
    for (int i = 0; i < arcs; ++i)
        a.new_arc();
    for (const auto& [s, t] : succ)
        a.set_succ(s, t);
    for (const auto& x : crossings)
        a.add_crossing(x);
    return a.emit();
}

int Assembler::new_arc() {
    int id = static_cast<int>(parent_.size());
    parent_.push_back(id);
    return id;
}

int Assembler::find(int a) const {
    while (parent_[a] != a)
        a = parent_[a] = parent_[parent_[a]];
    return a;
}

void Assembler::set_succ(int a, int b) {
    succ_[a] = b;
}

void Assembler::add_crossing(const XRec& x) {
    succ_[x.u_in] = x.u_out;
    succ_[x.o_in] = x.o_out;
    crossings_.push_back(x);
}

void Assembler::merge(int keep, int absorb) {
    parent_[find(absorb)] = find(keep);
}

Diagram Assembler::emit() const {
    // Resolve merged ids.
    std::map<int, int> succ;
    for (const auto& [a, b] : succ_) {
        int ra = find(a), rb = find(b);
        auto [it, fresh] = succ.emplace(ra, rb);
        if (!fresh && it->second != rb)
            throw ContractError("assembler: arc has two successors");
    }
    std::vector<XRec> xs = crossings_;
    for (auto& x : xs) {
        x.u_in = find(x.u_in);
        x.u_out = find(x.u_out);
        x.o_in = find(x.o_in);
        x.o_out = find(x.o_out);
    }
    // Where each arc meets a crossing.
    struct Slot {
        int crossing = -1;
        bool under = false;
    };
    std::map<int, Slot> head_at, tail_at; // arc -> crossing where it ends/starts
    for (std::size_t i = 0; i < xs.size(); ++i) {
        auto put = [&](std::map<int, Slot>& m, int arc, bool under) {
            auto [it, fresh] = m.emplace(arc, Slot{static_cast<int>(i), under});
            if (!fresh)
                throw ContractError("assembler: arc used twice in the same role");
        };
        put(head_at, xs[i].u_in, true);
        put(head_at, xs[i].o_in, false);
        put(tail_at, xs[i].u_out, true);
        put(tail_at, xs[i].o_out, false);
    }
    // Predecessor map and sanity: succ must be a bijection on its domain.
    std::map<int, int> pred;
    for (const auto& [a, b] : succ)
        if (!pred.emplace(b, a).second)
            throw ContractError("assembler: arc has two predecessors");
    for (const auto& [a, b] : succ) {
        (void)b;
        if (!pred.count(a))
            throw ContractError("assembler: open strand at arc " + std::to_string(a));
    }

    // PD edges: maximal succ-chains from a crossing output to the next
    // crossing input. Chains not meeting any crossing are circles.
    struct Edge {
        int start_crossing, end_crossing;
        bool start_under, end_under;
        int key; // smallest arc id on the chain, for canonical numbering
    };
    std::vector<Edge> edges;
    std::map<int, int> edge_of_tail; // crossing-output arc -> edge index
    std::set<int> on_edge;
    for (const auto& [arc, slot] : tail_at) {
        Edge e;
        e.start_crossing = slot.crossing;
        e.start_under = slot.under;
        e.key = arc;
        int cur = arc;
        int guard = 0;
        while (!head_at.count(cur)) {
            auto it = succ.find(cur);
            if (it == succ.end())
                throw ContractError("assembler: dangling arc " + std::to_string(cur));
            cur = it->second;
            e.key = std::min(e.key, cur);
            if (++guard > static_cast<int>(parent_.size()))
                throw ContractError("assembler: unterminated strand chain");
            on_edge.insert(cur);
        }
        on_edge.insert(arc);
        e.end_crossing = head_at.at(cur).crossing;
        e.end_under = head_at.at(cur).under;
        edge_of_tail[arc] = static_cast<int>(edges.size());
        edges.push_back(e);
    }
    // Crossingless cycles.
    std::vector<int> circle_keys;
    std::set<int> seen;
    for (const auto& [a, b] : succ) {
        (void)b;
        if (on_edge.count(a) || seen.count(a))
            continue;
        int cur = a, key = a;
        do {
            seen.insert(cur);
            key = std::min(key, cur);
            cur = succ.at(cur);
        } while (cur != a);
        circle_keys.push_back(key);
    }
    std::sort(circle_keys.begin(), circle_keys.end());

    // Chain edges into components.
    int ne = static_cast<int>(edges.size());
    std::vector<int> next_edge(ne, -1);
    for (int i = 0; i < ne; ++i) {
        const auto& e = edges[i];
        const auto& x = xs[e.end_crossing];
        int out_arc = e.end_under ? x.u_out : x.o_out;
        next_edge[i] = edge_of_tail.at(out_arc);
    }
    std::vector<int> comp_of_edge(ne, -1);
    std::vector<std::vector<int>> comps; // edge indices in traversal order
    std::vector<int> comp_key;
    std::vector<bool> visited(ne, false);
    for (int i = 0; i < ne; ++i) {
        if (visited[i])
            continue;
        // Find the cycle through i, then rotate to start at the min-key edge.
        std::vector<int> cycle;
        int cur = i;
        do {
            visited[cur] = true;
            cycle.push_back(cur);
            cur = next_edge[cur];
        } while (cur != i);
        int best = 0;
        for (std::size_t k = 1; k < cycle.size(); ++k)
            if (edges[cycle[k]].key < edges[cycle[best]].key)
                best = static_cast<int>(k);
        std::rotate(cycle.begin(), cycle.begin() + best, cycle.end());
        comp_key.push_back(edges[cycle.front()].key);
        comps.push_back(std::move(cycle));
    }
    std::vector<int> order(comps.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return comp_key[a] < comp_key[b]; });

    std::vector<int> label_of_edge(ne, 0);
    int next_label = 1;
    for (int ci : order)
        for (int ei : comps[ci])
            label_of_edge[ei] = next_label++;

    // Crossing tuples: positive means the over-strand runs d -> b.
    std::map<std::pair<int, bool>, int> label_at_in, label_at_out; // (crossing, under?)
    for (int i = 0; i < ne; ++i) {
        label_at_out[{edges[i].start_crossing, edges[i].start_under}] = label_of_edge[i];
        label_at_in[{edges[i].end_crossing, edges[i].end_under}] = label_of_edge[i];
    }
    std::vector<Crossing> out;
    std::vector<int> signs;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        int ui = label_at_in.at({static_cast<int>(i), true});
        int uo = label_at_out.at({static_cast<int>(i), true});
        int oi = label_at_in.at({static_cast<int>(i), false});
        int oo = label_at_out.at({static_cast<int>(i), false});
        if (xs[i].positive)
            out.push_back(Crossing{{ui, oo, uo, oi}});
        else
            out.push_back(Crossing{{ui, oi, uo, oo}});
        signs.push_back(xs[i].positive ? 1 : -1);
    }
    std::vector<int> circles;
    for (std::size_t k = 0; k < circle_keys.size(); ++k)
        circles.push_back(next_label++);
    return detail_assembler_access::make(std::move(out), std::move(circles), std::move(signs));
}

} // namespace cp2::detail
