#include "cp2/band.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "cp2/catalog.hpp"
#include "cp2/detail/editable.hpp"
#include "cp2/errors.hpp"

namespace cp2 {

using detail::Editable;
using detail::XRec;

namespace {

void validate_spec(const Diagram& d, const BandSpec& b) {
    auto known = [&](int e) {
        for (const auto& comp : d.components())
            for (int x : comp)
                if (x == e)
                    return true;
        return false;
    };
    auto check_pos = [](double p, const char* what) {
        if (!(p > 0.0 && p < 1.0))
            throw ContractError(std::string(what) + ": position must lie strictly inside (0,1)");
    };
    if (!known(b.edge1) || !known(b.edge2))
        throw ContractError("band attaches to an unknown edge");
    check_pos(b.pos1, "attach1");
    check_pos(b.pos2, "attach2");
    if (b.edge1 == b.edge2 && b.pos1 == b.pos2)
        throw ContractError("band attachments coincide");
    for (const auto& s : b.core) {
        if (!known(s.edge))
            throw ContractError("band core crosses an unknown edge " + std::to_string(s.edge));
        check_pos(s.pos, "core step");
        if ((s.edge == b.edge1 && s.pos == b.pos1) || (s.edge == b.edge2 && s.pos == b.pos2))
            throw ContractError("band core crosses an attachment point");
    }
}

} // namespace

bool check_coherent(const Diagram& d, const BandSpec& b) {
    validate_spec(d, b);
    bool same_side = b.side1 == b.side2;
    bool even_twists = b.half_twists % 2 == 0;
    return same_side == even_twists;
}

Diagram apply_band(const Diagram& d, const BandSpec& b) {
    if (!check_coherent(d, b))
        throw ValidationError("band surgery is not coherent");
    Editable ed = Editable::from(d);

    // Marks along each edge, in order of position (core order breaks ties).
    struct Mark {
        double pos;
        int seq;  // -2 attach1, -1 attach2, >=0 core index
    };
    std::map<int, std::vector<Mark>> marks;
    marks[b.edge1].push_back({b.pos1, -2});
    marks[b.edge2].push_back({b.pos2, -1});
    for (std::size_t i = 0; i < b.core.size(); ++i)
        marks[b.core[i].edge].push_back({b.core[i].pos, static_cast<int>(i)});
    for (auto& [e, ms] : marks) {
        std::sort(ms.begin(), ms.end(), [](const Mark& x, const Mark& y) {
            if (x.pos != y.pos)
                return x.pos < y.pos;
            return x.seq < y.seq;
        });
        for (std::size_t i = 1; i < ms.size(); ++i)
            if (ms[i].pos == ms[i - 1].pos && (ms[i].seq < 0 || ms[i - 1].seq < 0))
                throw ContractError("attachment and core marks coincide on edge " +
                                    std::to_string(e));
    }

    // Split the marked edges. Attachments cut once; core steps cut twice,
    // leaving a middle piece between the two band-side crossings.
    struct AttachCut {
        int before = -1, after = -1;
    };
    AttachCut at1, at2;
    struct CoreCut {
        int before = -1, mid = -1, after = -1;
    };
    std::vector<CoreCut> core_cuts(b.core.size());
    for (const auto& [e, ms] : marks) {
        int cur = ed.arc_of_edge.at(e);
        for (const auto& m : ms) {
            int head = ed.cut(cur);
            if (m.seq == -2) {
                at1 = {cur, head};
            } else if (m.seq == -1) {
                at2 = {cur, head};
            } else {
                int after = ed.cut(head);
                core_cuts[m.seq] = {cur, head, after};
                head = after;
            }
            cur = head;
        }
    }

    // Walk the band from attach1 to attach2. The state tracks which arc
    // currently occupies the left/right side of the core and the flow
    // direction of each side (FWD = toward attach2).
    enum Dir { FWD, BWD };
    int larc, rarc;
    Dir ldir, rdir;
    if (b.side1 == Side::Left) {
        larc = ed.new_arc();
        ed.succ[at1.before] = larc;
        ldir = FWD;
        rarc = ed.new_arc();
        ed.succ[rarc] = at1.after;
        rdir = BWD;
    } else {
        rarc = ed.new_arc();
        ed.succ[at1.before] = rarc;
        rdir = FWD;
        larc = ed.new_arc();
        ed.succ[larc] = at1.after;
        ldir = BWD;
    }

    auto cross2 = [](int ax, int ay, int bx, int by) { return ax * by - ay * bx; };

    // Half twists, bunched at the start of the band: the strand arriving
    // from the left-below passes over for a positive twist.
    for (int t = 0; t < std::abs(b.half_twists); ++t) {
        bool positive_twist = b.half_twists > 0;
        int nl1 = ed.new_arc(); // upper end of the SW-NE line (starts left-below)
        int nl2 = ed.new_arc(); // upper end of the SE-NW line
        int l_in, l_out, r_in, r_out;
        int d1x, d1y, d2x, d2y;
        if (ldir == FWD) {
            l_in = larc;
            l_out = nl1;
            d1x = 1, d1y = 1;
        } else {
            l_in = nl1;
            l_out = larc;
            d1x = -1, d1y = -1;
        }
        if (rdir == FWD) {
            r_in = rarc;
            r_out = nl2;
            d2x = -1, d2y = 1;
        } else {
            r_in = nl2;
            r_out = rarc;
            d2x = 1, d2y = -1;
        }
        XRec x;
        if (positive_twist) {
            x.o_in = l_in;
            x.o_out = l_out;
            x.u_in = r_in;
            x.u_out = r_out;
            x.positive = cross2(d1x, d1y, d2x, d2y) > 0;
        } else {
            x.o_in = r_in;
            x.o_out = r_out;
            x.u_in = l_in;
            x.u_out = l_out;
            x.positive = cross2(d2x, d2y, d1x, d1y) > 0;
        }
        ed.crossings.push_back(x);
        larc = nl2;
        rarc = nl1;
        std::swap(ldir, rdir);
    }

    // Core transversals: the crossed edge runs to the core's right, so it
    // meets the left side first.
    for (std::size_t i = 0; i < b.core.size(); ++i) {
        const auto& step = b.core[i];
        const auto& cut = core_cuts[i];
        for (int half = 0; half < 2; ++half) {
            bool left_side = half == 0;
            int& side_arc = left_side ? larc : rarc;
            Dir side_dir = left_side ? ldir : rdir;
            int g_in = left_side ? cut.before : cut.mid;
            int g_out = left_side ? cut.mid : cut.after;
            int nb = ed.new_arc();
            int band_in, band_out, band_y;
            if (side_dir == FWD) {
                band_in = side_arc;
                band_out = nb;
                band_y = 1;
            } else {
                band_in = nb;
                band_out = side_arc;
                band_y = -1;
            }
            XRec x;
            if (step.over) {
                x.o_in = band_in;
                x.o_out = band_out;
                x.u_in = g_in;
                x.u_out = g_out;
                x.positive = cross2(0, band_y, 1, 0) > 0;
            } else {
                x.o_in = g_in;
                x.o_out = g_out;
                x.u_in = band_in;
                x.u_out = band_out;
                x.positive = cross2(1, 0, 0, band_y) > 0;
            }
            ed.crossings.push_back(x);
            side_arc = nb;
        }
    }

    // Junction at attach2.
    if (b.side2 == Side::Left) {
        if (ldir != FWD || rdir != BWD)
            throw ContractError("band walk lost coherence");
        ed.succ[larc] = at2.after;
        ed.succ[at2.before] = rarc;
    } else {
        if (rdir != FWD || ldir != BWD)
            throw ContractError("band walk lost coherence");
        ed.succ[rarc] = at2.after;
        ed.succ[at2.before] = larc;
    }

    Diagram out = ed.emit();
    int before = d.component_count(), after = out.component_count();
    if (after != before + 1 && after != before - 1)
        throw ContractError("band surgery changed the component count by " +
                            std::to_string(after - before));
    return out;
}

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string strip_comments(const std::string& text) {
    std::istringstream is(text);
    std::ostringstream os;
    std::string line;
    while (std::getline(is, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        os << line << "\n";
    }
    return os.str();
}

Side parse_side(const std::string& s) {
    if (s == "left")
        return Side::Left;
    if (s == "right")
        return Side::Right;
    throw ParseError("band fixture: side must be left or right, got '" + s + "'");
}

std::pair<int, double> parse_edge_pos(const std::string& s, double default_pos) {
    auto colon = s.find(':');
    try {
        if (colon == std::string::npos)
            return {std::stoi(s), default_pos};
        return {std::stoi(s.substr(0, colon)), std::stod(s.substr(colon + 1))};
    } catch (const std::exception&) {
        throw ParseError("band fixture: bad edge:pos '" + s + "'");
    }
}

} // namespace

Diagram load_pd_file(const std::string& path) {
    return Diagram::parse(strip_comments(read_file(path)));
}

Diagram load_catalog_pd(const std::string& name, const std::string& pd_dir) {
    for (char ch : name)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            throw ParseError("bad PD name: " + name);
    std::string dir = pd_dir.empty() ? share_dir() + "/pd" : pd_dir;
    return load_pd_file(dir + "/" + name + ".pd");
}

BandFixture parse_band_fixture(const std::string& text, const std::string& pd_dir) {
    BandFixture f;
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    bool have_sides = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
            line.pop_back();
        if (line.empty())
            continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("band fixture line " + std::to_string(line_no) +
                             ": expected key=value");
        std::string key = line.substr(0, eq), val = line.substr(eq + 1);
        if (key == "diagram") {
            f.diagram_name = val;
        } else if (key == "attach1") {
            std::tie(f.band.edge1, f.band.pos1) = parse_edge_pos(val, 0.5);
        } else if (key == "attach2") {
            std::tie(f.band.edge2, f.band.pos2) = parse_edge_pos(val, 0.5);
        } else if (key == "sides") {
            auto comma = val.find(',');
            if (comma == std::string::npos)
                throw ParseError("band fixture: sides needs two values");
            f.band.side1 = parse_side(val.substr(0, comma));
            f.band.side2 = parse_side(val.substr(comma + 1));
            have_sides = true;
        } else if (key == "core") {
            if (val.empty())
                continue;
            std::istringstream cs(val);
            std::string part;
            while (std::getline(cs, part, ';')) {
                auto slash = part.find('/');
                if (slash == std::string::npos)
                    throw ParseError("band fixture: core step needs edge/over|under");
                BandSpec::CoreStep step;
                std::tie(step.edge, step.pos) = parse_edge_pos(part.substr(0, slash), 0.5);
                std::string flag = part.substr(slash + 1);
                if (flag == "over")
                    step.over = true;
                else if (flag == "under")
                    step.over = false;
                else
                    throw ParseError("band fixture: core flag must be over or under");
                f.band.core.push_back(step);
            }
        } else if (key == "twists") {
            f.band.half_twists = std::stoi(val);
        } else if (key == "expect_components") {
            f.expect_components = std::stoi(val);
        } else if (key == "expect_target") {
            f.expect_target = val;
        } else {
            throw ParseError("band fixture line " + std::to_string(line_no) + ": unknown key '" +
                             key + "'");
        }
    }
    if (f.diagram_name.empty())
        throw ParseError("band fixture: missing diagram=");
    if (!have_sides)
        throw ParseError("band fixture: missing sides=");
    f.diagram = load_catalog_pd(f.diagram_name, pd_dir);
    return f;
}

BandFixture load_band_fixture_file(const std::string& path, const std::string& pd_dir) {
    return parse_band_fixture(read_file(path), pd_dir);
}

BandVerification verify_band_fixture(const BandFixture& f, const std::string& pd_dir) {
    BandVerification v;
    v.coherent = check_coherent(f.diagram, f.band);
    if (!v.coherent)
        return v;
    Diagram result = apply_band(f.diagram, f.band);
    v.components = result.component_count();
    v.components_match = v.components == f.expect_components;
    Diagram target = load_catalog_pd(f.expect_target, pd_dir);
    v.jones_result = jones(result);
    v.jones_target = jones(target);
    v.jones_match = v.jones_result == v.jones_target;
    v.linking_match = linking_multiset(result) == linking_multiset(target) &&
                      result.component_count() == target.component_count();
    return v;
}

} // namespace cp2
