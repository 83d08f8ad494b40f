#include "cp2/obstructions.hpp"

#include <sstream>

#include "cp2/errors.hpp"

namespace cp2 {

const char* rule_tag(Rule r) {
    switch (r) {
    case Rule::KM: return "KM";
    case Rule::GV: return "GV";
    case Rule::OS: return "OS";
    case Rule::ARF: return "ARF";
    case Rule::LAWSON: return "LAWSON";
    }
    return "?";
}

std::set<int> km_window(int g4) {
    if (g4 < 0)
        throw ContractError("km_window: negative genus");
    std::set<int> w = {0};
    for (int d = 1; (d - 1) * (d - 2) <= 2 * g4; ++d)
        w.insert(d);
    return w;
}

bool gv_allows(int sigma, int genus, int d) {
    if (d < 0 || d % 2 != 0)
        throw ContractError("gv_allows: degree must be even and nonnegative");
    long long lhs = 4LL * genus + 2;
    long long rhs = std::llabs(1LL * d * d - 2 - 2LL * sigma);
    return lhs >= rhs;
}

bool os_allows(int sigma, bool alternating, int genus, int d) {
    if (d < 0)
        throw ContractError("os_allows: degree must be nonnegative");
    if (!alternating)
        return true; // tau = -sigma/2 is only available for alternating knots
    // 2 genus >= sigma + d(1-d), kept integral.
    return 2LL * genus >= sigma + 1LL * d * (1 - d);
}

bool robertello_allows(int arf, int d) {
    if (d < 0 || d % 2 == 0)
        throw ContractError("robertello_allows: degree must be odd and nonnegative");
    if (arf != 0 && arf != 1)
        throw ContractError("robertello_allows: arf must be 0 or 1");
    long long q = (1LL * d * d - 1) / 8;
    return arf == (q % 2);
}

namespace {

std::string gv_detail(int sigma, int d) {
    std::ostringstream os;
    os << "|" << d << "^2 - 2 - 2*(" << sigma << ")| = "
       << std::llabs(1LL * d * d - 2 - 2LL * sigma) << " > 2";
    return os.str();
}

std::string os_detail(int sigma, int d) {
    std::ostringstream os;
    os << "(" << sigma << ")/2 + " << d << "(1-" << d << ")/2 = ";
    // sigma even, d(1-d) even: both halves integral.
    os << (sigma / 2 + d * (1 - d) / 2) << " > 0";
    return os.str();
}

std::string arf_detail(int arf, int d) {
    std::ostringstream os;
    long long q = (1LL * d * d - 1) / 8;
    os << "(" << d << "^2-1)/8 = " << q << " != " << arf << " (mod 2)";
    return os.str();
}

std::string km_detail(int g4, int d) {
    std::ostringstream os;
    os << "(" << d << "-1)(" << d << "-2) = " << (d - 1) * (d - 2) << " > 2*" << g4;
    return os.str();
}

} // namespace

DegreeReport intrinsic_degrees(const KnotRecord& r) {
    validate_record(r);
    DegreeReport rep;
    rep.knot = r.name;
    auto window = km_window(r.smooth4genus);
    int dmax = *window.rbegin();
    for (int d = 0; d <= dmax + 1; ++d) {
        if (!window.count(d)) {
            rep.exclusions[d].push_back({Rule::KM, km_detail(r.smooth4genus, d)});
            continue;
        }
        bool ok = true;
        if (d % 2 == 0 && !gv_allows(r.signature, 0, d)) {
            rep.exclusions[d].push_back({Rule::GV, gv_detail(r.signature, d)});
            ok = false;
        }
        if (d % 2 == 1 && !robertello_allows(r.arf, d)) {
            rep.exclusions[d].push_back({Rule::ARF, arf_detail(r.arf, d)});
            ok = false;
        }
        if (!os_allows(r.signature, r.alternating, 0, d)) {
            rep.exclusions[d].push_back({Rule::OS, os_detail(r.signature, d)});
            ok = false;
        }
        if (ok)
            rep.surviving.insert(d);
    }
    return rep;
}

Reports intrinsic_reports(const CatalogStore& store) {
    Reports reps;
    for (const auto& r : store.records())
        reps[r.name] = intrinsic_degrees(r);
    return reps;
}

namespace {

bool remove_degree(DegreeReport& rep, int d, const std::string& why) {
    if (!rep.surviving.erase(d))
        return false;
    rep.exclusions[d].push_back({Rule::LAWSON, why});
    return true;
}

} // namespace

Reports lawson_propagate(const CatalogStore& store, Reports reports) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : store.records()) {
            auto& own = reports.at(r.name);
            // (c) self-rule for amphichiral records.
            if (r.amphichiral) {
                std::vector<int> doomed;
                for (int d : own.surviving)
                    if (d % 2 == 1 && d >= 3)
                        doomed.push_back(d);
                for (int d : doomed)
                    changed |= remove_degree(own, d, r.name + " is amphichiral");
            }
            auto mirror = store.mirror_of(r.name);
            if (!mirror || *mirror == r.name)
                continue;
            bool realizes_big_odd = false;
            bool realizes_one = r.realized_degrees.count(1) > 0;
            int big = 0;
            for (int d : r.realized_degrees)
                if (d % 2 == 1 && d >= 3) {
                    realizes_big_odd = true;
                    big = d;
                }
            if (!realizes_big_odd && !realizes_one)
                continue;
            auto& other = reports.at(*mirror);
            std::vector<int> doomed;
            for (int d : other.surviving) {
                if (d % 2 != 1)
                    continue;
                if (realizes_big_odd || (realizes_one && d > 1))
                    doomed.push_back(d);
            }
            for (int d : doomed) {
                std::string why = realizes_big_odd
                                      ? ("mirror " + r.name + " realizes odd degree " +
                                         std::to_string(big))
                                      : ("mirror " + r.name + " realizes degree 1");
                changed |= remove_degree(other, d, why);
            }
        }
    }
    return reports;
}

TheoremCheck theorem2_check(const KnotRecord& r, const KnotRecord& mirror,
                            const Reports& reports) {
    if (!r.alternating || std::abs(r.signature) != 4)
        return TheoremCheck::Inapplicable;
    if (mirror.name != mirror_name(r.name) || mirror.signature != -r.signature)
        throw ContractError("theorem2_check: records are not a mirror pair");
    auto realizes_big_odd = [](const KnotRecord& k) {
        for (int d : k.realized_degrees)
            if (d % 2 == 1 && d >= 3)
                return true;
        return false;
    };
    if (!realizes_big_odd(r) && !realizes_big_odd(mirror))
        return TheoremCheck::Inapplicable;
    int with_degrees = 0;
    if (!reports.at(r.name).surviving.empty())
        ++with_degrees;
    if (!reports.at(mirror.name).surviving.empty())
        ++with_degrees;
    return with_degrees <= 1 ? TheoremCheck::Holds : TheoremCheck::Violated;
}

bool theorem3_check(const KnotRecord& r) {
    bool hyp = r.alternating && r.signature == 4 && r.smooth4genus <= 2 && r.arf == 0;
    if (hyp && !intrinsic_degrees(r).surviving.empty())
        throw ValidationError("record " + r.name +
                              ": satisfies the sigma=4/arf=0 hypothesis but keeps a degree");
    return hyp;
}

} // namespace cp2
