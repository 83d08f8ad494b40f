#pragma once

// Knot invariant table: ingestion, validation, mirror pairing.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace cp2 {

struct KnotRecord {
    std::string name;          // e.g. "m8_21"
    int crossings = 0;
    bool alternating = false;
    bool amphichiral = false;
    int signature = 0;         // even
    int arf = 0;               // 0 or 1
    int smooth4genus = 0;
    int unknotting = 0;
    std::set<int> realized_degrees; // |d| of explicitly constructed slice discs
    std::optional<int> external_lower;
    std::optional<int> external_upper;
    std::string notes;

    bool operator==(const KnotRecord&) const = default;
};

// Throws ValidationError naming the record and the violated invariant.
void validate_record(const KnotRecord& r);

// Signature negated, name toggles the "m" prefix (unchanged for
// amphichiral records); realized degrees and external facts are not
// carried over — they belong to the specific knot.
KnotRecord mirror_record(const KnotRecord& r);

std::string mirror_name(const std::string& name);

class CatalogStore {
  public:
    CatalogStore() = default;
    explicit CatalogStore(std::vector<KnotRecord> records);

    bool contains(const std::string& name) const;
    const KnotRecord& get(const std::string& name) const;
    // Records in file order (the order the tables list them).
    const std::vector<KnotRecord>& records() const { return records_; }
    std::size_t size() const { return records_.size(); }

    // Mirror pairing: an involution; amphichiral records pair with
    // themselves; records whose mirror is not stored are absent.
    const std::map<std::string, std::string>& mirror_pairing() const { return pairing_; }
    std::optional<std::string> mirror_of(const std::string& name) const;

  private:
    std::vector<KnotRecord> records_;
    std::map<std::string, std::size_t> index_;
    std::map<std::string, std::string> pairing_;
};

// CSV with header
// name,crossings,alternating,amphichiral,signature,arf,g4,unknotting,realized,ext_lower,ext_upper,notes
// `alternating`/`amphichiral` in {Y,N}; `realized` a semicolon-separated
// list of nonnegative integers (empty allowed).
CatalogStore parse_catalog(const std::string& text);
std::string serialize_catalog(const CatalogStore& store);

// The bundled table (share/catalog.csv by default, overridable).
CatalogStore load_bundled_catalog();
CatalogStore load_catalog_file(const std::string& path);

// Paper's published columns, kept outside the engine as regression data:
// genus cell (one value or a two-element range) and degree set.
struct PublishedRow {
    int genus_low = 0;
    int genus_high = 0;
    std::set<int> possible;
};
std::map<std::string, PublishedRow> load_published_tables(const std::string& path);
std::map<std::string, PublishedRow> load_bundled_published_tables();

std::string share_dir();

} // namespace cp2
