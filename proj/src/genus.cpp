#include "cp2/genus.hpp"

#include <algorithm>
#include <sstream>

#include "cp2/errors.hpp"
#include "cp2/seifert.hpp"

namespace cp2 {

const char* source_tag(Source s) {
    switch (s) {
    case Source::G4: return "G4";
    case Source::UNKNOT: return "UNKNOT";
    case Source::CONCORDANCE: return "CONCORDANCE";
    case Source::REALIZED: return "REALIZED";
    case Source::EMPTY_DEGREES: return "EMPTY_DEGREES";
    case Source::EXTERNAL: return "EXTERNAL";
    }
    return "?";
}

Facts bundled_facts() {
    Facts f;
    f.push_back({"7_1", FactKind::GenusExact, 2, "", "torus knot genus, Ait Nouh 2009"});
    f.push_back({"8_10", FactKind::Slice, 0, "", "concordance construction"});
    f.push_back({"m8_10", FactKind::Slice, 0, "", "concordance construction"});
    return f;
}

namespace {

void validate_fact(const ExternalFact& f) {
    if (f.citation.empty())
        throw ValidationError("external fact for " + f.knot + ": empty citation");
    if (f.kind == FactKind::ConcordantTo && f.partner.empty())
        throw ValidationError("external fact for " + f.knot + ": concordance without partner");
    if ((f.kind == FactKind::GenusExact || f.kind == FactKind::GenusLower) && f.value < 0)
        throw ValidationError("external fact for " + f.knot + ": negative genus");
}

GenusVerdict base_verdict(const KnotRecord& r, const DegreeReport& report, const Facts& facts) {
    GenusVerdict v;
    v.knot = r.name;

    v.upper_sources.push_back({r.smooth4genus, Source::G4, "g4 = " + std::to_string(r.smooth4genus)});
    int ub_u = std::max(r.unknotting - 1, 0);
    v.upper_sources.push_back(
        {ub_u, Source::UNKNOT, "max(u-1, 0) with u = " + std::to_string(r.unknotting)});
    if (!r.realized_degrees.empty()) {
        std::ostringstream os;
        os << "slice disc realized at degree";
        for (int d : r.realized_degrees)
            os << " " << d;
        v.upper_sources.push_back({0, Source::REALIZED, os.str()});
    }
    if (r.external_upper)
        v.upper_sources.push_back({*r.external_upper, Source::EXTERNAL, "catalog ext_upper"});

    if (report.surviving.empty())
        v.lower_sources.push_back({1, Source::EMPTY_DEGREES, "every slice degree obstructed"});
    if (r.external_lower)
        v.lower_sources.push_back({*r.external_lower, Source::EXTERNAL, "catalog ext_lower"});

    for (const auto& f : facts) {
        if (f.knot != r.name)
            continue;
        validate_fact(f);
        switch (f.kind) {
        case FactKind::GenusExact:
        case FactKind::GenusLower:
            v.lower_sources.push_back({f.value, Source::EXTERNAL, f.citation});
            break;
        case FactKind::Slice:
            v.upper_sources.push_back({0, Source::EXTERNAL, f.citation});
            break;
        case FactKind::ConcordantTo:
            break; // handled by the transfer pass
        }
    }
    return v;
}

void finalize(GenusVerdict& v) {
    v.upper = v.upper_sources.front().value;
    for (const auto& b : v.upper_sources)
        v.upper = std::min(v.upper, b.value);
    v.lower = 0;
    for (const auto& b : v.lower_sources)
        v.lower = std::max(v.lower, b.value);
    if (v.lower > v.upper) {
        std::ostringstream os;
        os << "catalog inconsistency for " << v.knot << ": lower " << v.lower << " > upper "
           << v.upper << ";";
        for (const auto& b : v.lower_sources)
            os << " lower " << b.value << " [" << source_tag(b.source) << ": " << b.detail << "]";
        for (const auto& b : v.upper_sources)
            os << " upper " << b.value << " [" << source_tag(b.source) << ": " << b.detail << "]";
        throw InconsistencyError(os.str());
    }
}

} // namespace

GenusVerdict verdict(const KnotRecord& r, const DegreeReport& report, const Facts& facts) {
    GenusVerdict v = base_verdict(r, report, facts);
    finalize(v);
    return v;
}

std::map<std::string, GenusVerdict> all_verdicts(const CatalogStore& store,
                                                 const Reports& reports, const Facts& facts) {
    std::map<std::string, GenusVerdict> out;
    for (const auto& r : store.records())
        out[r.name] = base_verdict(r, reports.at(r.name), facts);

    // One-hop concordance transfer per pass; chains converge by iteration.
    bool changed = true;
    int guard = 0;
    while (changed) {
        changed = false;
        if (++guard > static_cast<int>(store.size()) + 2)
            throw InconsistencyError("concordance transfer failed to converge");
        for (const auto& f : facts) {
            if (f.kind != FactKind::ConcordantTo)
                continue;
            validate_fact(f);
            if (!out.count(f.knot) || !out.count(f.partner))
                continue;
            for (auto [a, b] : {std::pair{f.knot, f.partner}, std::pair{f.partner, f.knot}}) {
                GenusVerdict va = out.at(a);
                finalize(va);
                auto& vb = out.at(b);
                int cur_up = vb.upper_sources.front().value;
                for (const auto& s : vb.upper_sources)
                    cur_up = std::min(cur_up, s.value);
                if (va.upper < cur_up) {
                    vb.upper_sources.push_back(
                        {va.upper, Source::CONCORDANCE, "concordant to " + a + " (" + f.citation + ")"});
                    changed = true;
                }
                int cur_lo = 0;
                for (const auto& s : vb.lower_sources)
                    cur_lo = std::max(cur_lo, s.value);
                if (va.lower > cur_lo) {
                    vb.lower_sources.push_back(
                        {va.lower, Source::CONCORDANCE, "concordant to " + a + " (" + f.citation + ")"});
                    changed = true;
                }
            }
        }
    }
    for (auto& [name, v] : out)
        finalize(v);
    return out;
}

TableDocument reproduce_tables(const CatalogStore& store, const Facts& facts,
                               const std::map<std::string, PublishedRow>& published) {
    TableDocument doc;
    Reports reports = lawson_propagate(store, intrinsic_reports(store));
    auto verdicts = all_verdicts(store, reports, facts);
    for (const auto& r : store.records()) {
        TableRow row;
        row.record = r;
        row.verdict = verdicts.at(r.name);
        row.report = reports.at(r.name);
        // A knot that cannot be slice has no slice degrees at all.
        row.possible = row.verdict.lower >= 1 ? std::set<int>{} : row.report.surviving;
        doc.rows.push_back(std::move(row));
    }
    for (const auto& row : doc.rows) {
        auto it = published.find(row.record.name);
        if (it == published.end())
            continue;
        if (it->second.possible != row.possible)
            doc.discrepancies.push_back({row.record.name, row.possible, it->second.possible});
    }
    return doc;
}

namespace {

std::string genus_cell(const GenusVerdict& v) {
    if (v.exact())
        return std::to_string(v.lower);
    return "{" + std::to_string(v.lower) + "," + std::to_string(v.upper) + "}";
}

std::string degree_cell(const std::set<int>& s) {
    if (s.empty())
        return "-";
    std::string out;
    for (int d : s)
        out += (out.empty() ? "" : " ") + std::to_string(d);
    return out;
}

} // namespace

std::string format_table_markdown(const TableDocument& doc) {
    std::ostringstream os;
    std::pair<int, int> group = {INT32_MIN, INT32_MIN};
    bool first = true;
    for (const auto& row : doc.rows) {
        std::pair<int, int> key = {row.record.signature, row.record.arf};
        if (key != group) {
            group = key;
            if (!first)
                os << "\n";
            first = false;
            os << "## sigma = " << key.first << ", Arf = " << key.second << "\n\n";
            os << "| K | g | alt | sigma | Arf | g4 | u | possible degrees | realized |\n";
            os << "|---|---|-----|-------|-----|----|---|------------------|----------|\n";
        }
        os << "| " << row.record.name << " | " << genus_cell(row.verdict) << " | "
           << (row.record.alternating ? "Y" : "N") << " | " << row.record.signature << " | "
           << row.record.arf << " | " << row.record.smooth4genus << " | " << row.record.unknotting
           << " | " << degree_cell(row.possible) << " | "
           << degree_cell(row.record.realized_degrees) << " |\n";
    }
    if (!doc.discrepancies.empty()) {
        os << "\n## Discrepancies against the published degree column\n\n";
        for (const auto& d : doc.discrepancies)
            os << "- " << d.knot << ": computed {" << degree_cell(d.computed) << "} vs published {"
               << degree_cell(d.published) << "}\n";
    }
    return os.str();
}

std::string format_table_csv(const TableDocument& doc) {
    std::ostringstream os;
    os << "name,g_lower,g_upper,exact,alternating,signature,arf,g4,unknotting,possible,realized\n";
    auto join = [](const std::set<int>& s) {
        std::string out;
        for (int d : s)
            out += (out.empty() ? "" : ";") + std::to_string(d);
        return out;
    };
    for (const auto& row : doc.rows) {
        os << row.record.name << ',' << row.verdict.lower << ',' << row.verdict.upper << ','
           << (row.verdict.exact() ? "Y" : "N") << ',' << (row.record.alternating ? "Y" : "N")
           << ',' << row.record.signature << ',' << row.record.arf << ','
           << row.record.smooth4genus << ',' << row.record.unknotting << ',' << join(row.possible)
           << ',' << join(row.record.realized_degrees) << "\n";
    }
    for (const auto& d : doc.discrepancies)
        os << "# discrepancy," << d.knot << ",computed " << join(d.computed) << ",published "
           << join(d.published) << "\n";
    return os.str();
}

KnotRecord kn_record(long long n, bool mirrored) {
    if (n < 1)
        throw ContractError("kn_record requires n >= 1");
    KnotRecord r;
    r.name = (mirrored ? "mK" : "K") + std::to_string(n);
    r.crossings = static_cast<int>(2 * n + 5);
    r.alternating = true;
    r.amphichiral = false;
    int sigma = signature(symmetrize(kn_seifert_matrix(n)));
    r.signature = mirrored ? -sigma : sigma;
    // A realized odd slice degree forces the Arf class (and the family's
    // n = 1 member carries Arf 1 in the catalog).
    r.arf = 1;
    // |sigma|/2 <= g4 <= u pins g4 at 2 once u = 2.
    r.smooth4genus = 2;
    r.unknotting = 2;
    if (mirrored)
        r.realized_degrees = {3}; // band surgery to the 4-crossing torus link
    return r;
}

KnFamilyRow kn_family_row(long long n) {
    KnFamilyRow row;
    row.n = n;
    SeifertMatrix a = kn_seifert_matrix(n);
    row.sigma = signature(symmetrize(a));
    row.det = determinant(a);
    KnotRecord kn = kn_record(n, false);
    KnotRecord mkn = kn_record(n, true);
    row.arf = kn.arf;
    CatalogStore store({kn, mkn});
    Reports reports = lawson_propagate(store, intrinsic_reports(store));
    auto verdicts = all_verdicts(store, reports, {});
    row.kn = verdicts.at(kn.name);
    row.mirror = verdicts.at(mkn.name);
    return row;
}

} // namespace cp2
