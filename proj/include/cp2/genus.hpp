#pragma once

// Reconciles genus upper bounds (4-genus, unknotting, realized discs,
// concordance) with lower bounds (empty degree sets, literature facts)
// and regenerates the catalog tables.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cp2/catalog.hpp"
#include "cp2/obstructions.hpp"

namespace cp2 {

enum class Source { G4, UNKNOT, CONCORDANCE, REALIZED, EMPTY_DEGREES, EXTERNAL };

const char* source_tag(Source s);

struct Bound {
    int value = 0;
    Source source = Source::G4;
    std::string detail;
};

struct GenusVerdict {
    std::string knot;
    int lower = 0;
    int upper = 0;
    std::vector<Bound> upper_sources; // candidates; `upper` is their minimum
    std::vector<Bound> lower_sources; // candidates; `lower` is their maximum
    bool exact() const { return lower == upper; }
};

enum class FactKind { GenusExact, GenusLower, Slice, ConcordantTo };

struct ExternalFact {
    std::string knot;
    FactKind kind = FactKind::GenusExact;
    int value = 0;           // genus value for the genus kinds
    std::string partner;     // for ConcordantTo
    std::string citation;    // nonempty
};

using Facts = std::vector<ExternalFact>;

// Literature facts the bundled catalog relies on. Only the torus-knot
// genus of 7_1 is strictly needed; the 8_10 pair's sliceness ships as a
// fact because no concordance partner is named for it.
Facts bundled_facts();

GenusVerdict verdict(const KnotRecord& r, const DegreeReport& report, const Facts& facts);

// Verdicts for every record, iterating one-hop concordance transfer to a
// fixpoint. Throws InconsistencyError when a record's lower bound exceeds
// its upper bound.
std::map<std::string, GenusVerdict> all_verdicts(const CatalogStore& store,
                                                 const Reports& reports, const Facts& facts);

struct TableRow {
    KnotRecord record;
    GenusVerdict verdict;
    std::set<int> possible;  // degree column: empty when the knot cannot be slice
    DegreeReport report;
};

struct Discrepancy {
    std::string knot;
    std::set<int> computed;
    std::set<int> published;
};

struct TableDocument {
    std::vector<TableRow> rows;               // catalog order
    std::vector<Discrepancy> discrepancies;   // computed vs published degree column
};

TableDocument reproduce_tables(const CatalogStore& store, const Facts& facts,
                               const std::map<std::string, PublishedRow>& published);

std::string format_table_markdown(const TableDocument& doc);
std::string format_table_csv(const TableDocument& doc);

// The twist family: K_n (and its mirror) as virtual records, with the
// engine deriving genus 1 for K_n and 0 for mK_n.
struct KnFamilyRow {
    long long n = 0;
    int sigma = 0;
    int arf = 0;
    long long det = 0;
    GenusVerdict kn;
    GenusVerdict mirror;
};

KnFamilyRow kn_family_row(long long n);
KnotRecord kn_record(long long n, bool mirrored);

} // namespace cp2
