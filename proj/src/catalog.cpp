#include "cp2/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cp2/errors.hpp"

namespace cp2 {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, int line_no, const std::string& field) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("catalog line " + std::to_string(line_no) + ": field '" + field +
                         "' is not an integer: '" + s + "'");
    }
}

bool parse_yn(const std::string& s, int line_no, const std::string& field) {
    if (s == "Y")
        return true;
    if (s == "N")
        return false;
    throw ParseError("catalog line " + std::to_string(line_no) + ": field '" + field +
                     "' must be Y or N, got '" + s + "'");
}

const char* kHeader =
    "name,crossings,alternating,amphichiral,signature,arf,g4,unknotting,"
    "realized,ext_lower,ext_upper,notes";

} // namespace

void validate_record(const KnotRecord& r) {
    auto fail = [&](const std::string& what) {
        throw ValidationError("record " + r.name + ": " + what);
    };
    if (r.name.empty())
        fail("empty name");
    if (r.crossings < 0 || r.crossings > 99)
        fail("crossings out of range");
    if (r.signature % 2 != 0)
        fail("signature must be even");
    if (r.arf != 0 && r.arf != 1)
        fail("arf must be 0 or 1");
    if (r.smooth4genus < 0)
        fail("g4 must be nonnegative");
    if (r.unknotting < 0)
        fail("unknotting number must be nonnegative");
    if (std::abs(r.signature) / 2 > r.smooth4genus)
        fail("|signature|/2 <= g4 violated");
    if (r.smooth4genus > r.unknotting)
        fail("g4 <= unknotting violated");
    if (r.amphichiral && r.signature != 0)
        fail("amphichiral record with nonzero signature");
    for (int d : r.realized_degrees) {
        if (d < 0)
            fail("negative realized degree");
        if (d != 0 && (d - 1) * (d - 2) > 2 * r.smooth4genus)
            fail("realized degree " + std::to_string(d) +
                 " inconsistent with g4 = " + std::to_string(r.smooth4genus));
    }
    if (r.external_lower && *r.external_lower < 0)
        fail("ext_lower must be nonnegative");
    if (r.external_upper && *r.external_upper < 0)
        fail("ext_upper must be nonnegative");
}

std::string mirror_name(const std::string& name) {
    if (name.rfind("m", 0) == 0)
        return name.substr(1);
    return "m" + name;
}

KnotRecord mirror_record(const KnotRecord& r) {
    KnotRecord m;
    m.name = r.amphichiral ? r.name : mirror_name(r.name);
    m.crossings = r.crossings;
    m.alternating = r.alternating;
    m.amphichiral = r.amphichiral;
    m.signature = -r.signature;
    m.arf = r.arf;
    m.smooth4genus = r.smooth4genus;
    m.unknotting = r.unknotting;
    return m;
}

CatalogStore::CatalogStore(std::vector<KnotRecord> records) : records_(std::move(records)) {
    for (std::size_t i = 0; i < records_.size(); ++i) {
        const auto& r = records_[i];
        validate_record(r);
        if (index_.count(r.name))
            throw ValidationError("record " + r.name + ": duplicate name");
        index_[r.name] = i;
    }
    for (const auto& r : records_) {
        if (r.amphichiral) {
            pairing_[r.name] = r.name;
            continue;
        }
        std::string m = mirror_name(r.name);
        if (!index_.count(m))
            continue;
        const KnotRecord& partner = records_[index_.at(m)];
        auto fail = [&](const std::string& what) {
            throw ValidationError("pair (" + r.name + ", " + m + "): " + what);
        };
        if (partner.signature != -r.signature)
            fail("signatures are not negatives");
        if (partner.arf != r.arf)
            fail("arf differs");
        if (partner.smooth4genus != r.smooth4genus)
            fail("g4 differs");
        if (partner.unknotting != r.unknotting)
            fail("unknotting differs");
        if (partner.alternating != r.alternating)
            fail("alternating flag differs");
        if (partner.crossings != r.crossings)
            fail("crossing number differs");
        pairing_[r.name] = m;
    }
}

bool CatalogStore::contains(const std::string& name) const {
    return index_.count(name) > 0;
}

const KnotRecord& CatalogStore::get(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        throw ValidationError("unknown knot: " + name);
    return records_[it->second];
}

std::optional<std::string> CatalogStore::mirror_of(const std::string& name) const {
    auto it = pairing_.find(name);
    if (it == pairing_.end())
        return std::nullopt;
    return it->second;
}

CatalogStore parse_catalog(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int line_no = 0;
    std::vector<KnotRecord> records;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (!saw_header) {
            if (line != kHeader)
                throw ParseError("catalog line " + std::to_string(line_no) +
                                 ": unexpected header");
            saw_header = true;
            continue;
        }
        auto f = split(line, ',');
        if (f.size() != 12)
            throw ParseError("catalog line " + std::to_string(line_no) + ": expected 12 fields, got " +
                             std::to_string(f.size()));
        KnotRecord r;
        r.name = f[0];
        r.crossings = parse_int(f[1], line_no, "crossings");
        r.alternating = parse_yn(f[2], line_no, "alternating");
        r.amphichiral = parse_yn(f[3], line_no, "amphichiral");
        r.signature = parse_int(f[4], line_no, "signature");
        r.arf = parse_int(f[5], line_no, "arf");
        r.smooth4genus = parse_int(f[6], line_no, "g4");
        r.unknotting = parse_int(f[7], line_no, "unknotting");
        if (!f[8].empty())
            for (const auto& part : split(f[8], ';'))
                r.realized_degrees.insert(parse_int(part, line_no, "realized"));
        if (!f[9].empty())
            r.external_lower = parse_int(f[9], line_no, "ext_lower");
        if (!f[10].empty())
            r.external_upper = parse_int(f[10], line_no, "ext_upper");
        r.notes = f[11];
        records.push_back(std::move(r));
    }
    if (!saw_header)
        throw ParseError("catalog: missing header line");
    return CatalogStore(std::move(records));
}

std::string serialize_catalog(const CatalogStore& store) {
    std::ostringstream os;
    os << kHeader << "\n";
    for (const auto& r : store.records()) {
        for (char ch : r.notes)
            if (ch == ',' || ch == '\n')
                throw ValidationError("record " + r.name + ": notes may not contain commas or newlines");
        os << r.name << ',' << r.crossings << ',' << (r.alternating ? 'Y' : 'N') << ','
           << (r.amphichiral ? 'Y' : 'N') << ',' << r.signature << ',' << r.arf << ','
           << r.smooth4genus << ',' << r.unknotting << ',';
        bool first = true;
        for (int d : r.realized_degrees) {
            os << (first ? "" : ";") << d;
            first = false;
        }
        os << ',';
        if (r.external_lower)
            os << *r.external_lower;
        os << ',';
        if (r.external_upper)
            os << *r.external_upper;
        os << ',' << r.notes << "\n";
    }
    return os.str();
}

std::string share_dir() {
#ifdef CP2GENUS_SHARE_DIR
    return CP2GENUS_SHARE_DIR;
#else
    return "share";
#endif
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

} // namespace

CatalogStore load_catalog_file(const std::string& path) {
    return parse_catalog(read_file(path));
}

CatalogStore load_bundled_catalog() {
    return load_catalog_file(share_dir() + "/catalog.csv");
}

std::map<std::string, PublishedRow> load_published_tables(const std::string& path) {
    std::istringstream is(read_file(path));
    std::string line;
    int line_no = 0;
    std::map<std::string, PublishedRow> rows;
    while (std::getline(is, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        if (line.rfind("name,", 0) == 0)
            continue;
        auto f = split(line, ',');
        if (f.size() != 3)
            throw ParseError("published table line " + std::to_string(line_no) +
                             ": expected 3 fields");
        PublishedRow row;
        auto g = split(f[1], '|');
        if (g.size() == 1) {
            row.genus_low = row.genus_high = parse_int(g[0], line_no, "genus");
        } else if (g.size() == 2) {
            row.genus_low = parse_int(g[0], line_no, "genus");
            row.genus_high = parse_int(g[1], line_no, "genus");
        } else {
            throw ParseError("published table line " + std::to_string(line_no) + ": bad genus cell");
        }
        if (!f[2].empty())
            for (const auto& part : split(f[2], ';'))
                row.possible.insert(parse_int(part, line_no, "possible"));
        rows[f[0]] = row;
    }
    return rows;
}

std::map<std::string, PublishedRow> load_bundled_published_tables() {
    return load_published_tables(share_dir() + "/published_tables.csv");
}

} // namespace cp2
