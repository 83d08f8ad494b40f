#include "cp2/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cp2/band.hpp"
#include "cp2/catalog.hpp"
#include "cp2/errors.hpp"
#include "cp2/genus.hpp"
#include "cp2/obstructions.hpp"
#include "cp2/seifert.hpp"

namespace cp2 {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

CatalogStore load_store(const std::string& catalog_path) {
    if (!catalog_path.empty())
        return load_catalog_file(catalog_path);
    if (const char* env = std::getenv("CP2GENUS_CATALOG"))
        return load_catalog_file(env);
    return load_bundled_catalog();
}

void print_report(std::ostream& os, const DegreeReport& rep) {
    os << "surviving:";
    if (rep.surviving.empty())
        os << " -";
    for (int d : rep.surviving)
        os << " " << d;
    os << "\n";
    for (const auto& [d, excls] : rep.exclusions)
        for (const auto& e : excls)
            os << "excluded " << d << " [" << rule_tag(e.rule) << "]: " << e.detail << "\n";
}

long long parse_ll(const std::string& s) {
    std::size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size())
        throw ParseError("not an integer: '" + s + "'");
    return v;
}

CommandResult run(const std::vector<std::string>& raw) {
    CommandResult res;
    std::ostringstream out;

    std::vector<std::string> args;
    std::string catalog_path;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == "--catalog") {
            if (i + 1 >= raw.size())
                throw ParseError("--catalog needs a path");
            catalog_path = raw[++i];
        } else {
            args.push_back(raw[i]);
        }
    }
    if (args.empty()) {
        res.exit_code = 2;
        res.stdout_payload = usage_text();
        res.diagnostics.push_back({Diagnostic::Severity::Error, "missing subcommand"});
        return res;
    }
    const std::string& cmd = args[0];
    auto need = [&](std::size_t n, const char* what) {
        if (args.size() != n)
            throw ParseError(std::string("usage: cp2genus ") + what);
    };

    if (cmd == "catalog") {
        need(2, "catalog validate");
        if (args[1] != "validate")
            throw ParseError("usage: cp2genus catalog validate");
        CatalogStore store = load_store(catalog_path);
        int self = 0, paired = 0, unpaired = 0;
        for (const auto& r : store.records()) {
            auto m = store.mirror_of(r.name);
            if (!m)
                ++unpaired;
            else if (*m == r.name)
                ++self;
            else
                ++paired;
        }
        out << "catalog OK: " << store.size() << " records, " << paired / 2 << " mirror pairs, "
            << self << " amphichiral, " << unpaired << " unpaired\n";
    } else if (cmd == "degrees") {
        need(2, "degrees <name>");
        CatalogStore store = load_store(catalog_path);
        const KnotRecord& r = store.get(args[1]);
        Reports reps = lawson_propagate(store, intrinsic_reports(store));
        print_report(out, reps.at(r.name));
    } else if (cmd == "table") {
        std::string format = "md";
        if (args.size() == 3 && args[1] == "--format")
            format = args[2];
        else if (args.size() != 1)
            throw ParseError("usage: cp2genus table [--format md|csv]");
        if (format != "md" && format != "csv")
            throw ParseError("table format must be md or csv");
        CatalogStore store = load_store(catalog_path);
        TableDocument doc = reproduce_tables(store, bundled_facts(), load_bundled_published_tables());
        out << (format == "md" ? format_table_markdown(doc) : format_table_csv(doc));
    } else if (cmd == "report") {
        need(2, "report <name>");
        CatalogStore store = load_store(catalog_path);
        const KnotRecord& r = store.get(args[1]);
        Reports reps = lawson_propagate(store, intrinsic_reports(store));
        auto verdicts = all_verdicts(store, reps, bundled_facts());
        const GenusVerdict& v = verdicts.at(r.name);
        out << r.name << ": sigma=" << r.signature << " arf=" << r.arf << " g4=" << r.smooth4genus
            << " u=" << r.unknotting << " alternating=" << (r.alternating ? "Y" : "N")
            << " amphichiral=" << (r.amphichiral ? "Y" : "N") << "\n";
        print_report(out, reps.at(r.name));
        for (const auto& bnd : v.upper_sources)
            out << "upper " << bnd.value << " [" << source_tag(bnd.source) << "]: " << bnd.detail
                << "\n";
        for (const auto& bnd : v.lower_sources)
            out << "lower " << bnd.value << " [" << source_tag(bnd.source) << "]: " << bnd.detail
                << "\n";
        out << "genus: ";
        if (v.exact())
            out << v.lower;
        else
            out << "{" << v.lower << "," << v.upper << "}";
        out << "\n";
    } else if (cmd == "seifert") {
        need(3, "seifert sig|alex <file>");
        SeifertMatrix a = SeifertMatrix::parse(read_file(args[2]));
        if (args[1] == "sig") {
            out << signature(symmetrize(a)) << "\n";
        } else if (args[1] == "alex") {
            out << alexander(a).str() << "\n";
        } else {
            throw ParseError("usage: cp2genus seifert sig|alex <file>");
        }
    } else if (cmd == "kn") {
        need(2, "kn <n>");
        out << kn_seifert_matrix(parse_ll(args[1])).str();
    } else if (cmd == "kn-family") {
        need(3, "kn-family --max <n>");
        if (args[1] != "--max")
            throw ParseError("usage: cp2genus kn-family --max <n>");
        long long maxn = parse_ll(args[2]);
        if (maxn < 1)
            throw ParseError("kn-family: --max must be at least 1");
        for (long long n = 1; n <= maxn; ++n) {
            KnFamilyRow row = kn_family_row(n);
            out << "n=" << n << " sigma=" << row.sigma << " arf=" << row.arf
                << " det=" << row.det << " g(K" << n << ")=" << row.kn.lower << " g(mK" << n
                << ")=" << row.mirror.lower << "\n";
        }
    } else if (cmd == "jones") {
        need(2, "jones <pd-file>");
        out << jones(load_pd_file(args[1])).str() << "\n";
    } else if (cmd == "band") {
        need(3, "band apply|verify <fixture>");
        BandFixture f = load_band_fixture_file(args[2]);
        if (args[1] == "apply") {
            Diagram result = apply_band(f.diagram, f.band);
            out << result.str() << "\n";
            out << "components: " << result.component_count() << "\n";
        } else if (args[1] == "verify") {
            BandVerification v = verify_band_fixture(f);
            out << "coherent: " << (v.coherent ? "yes" : "no") << "\n";
            if (v.coherent) {
                out << "components: " << v.components << (v.components_match ? " (expected)" : " (MISMATCH)")
                    << "\n";
                out << "jones(result): " << v.jones_result.str() << "\n";
                out << "jones(" << f.expect_target << "): " << v.jones_target.str() << "\n";
                out << "jones match: " << (v.jones_match ? "yes" : "no") << "\n";
                out << "linking match: " << (v.linking_match ? "yes" : "no") << "\n";
            }
            if (!v.ok()) {
                res.stdout_payload = out.str();
                res.exit_code = 1;
                res.diagnostics.push_back(
                    {Diagnostic::Severity::Error, "band fixture verification failed"});
                return res;
            }
            out << "verified: " << f.diagram_name << " -> " << f.expect_target << "\n";
        } else {
            throw ParseError("usage: cp2genus band apply|verify <fixture>");
        }
    } else if (cmd == "help" || cmd == "--help" || cmd == "-h") {
        out << usage_text();
    } else {
        res.exit_code = 2;
        res.stdout_payload = usage_text();
        res.diagnostics.push_back({Diagnostic::Severity::Error, "unknown subcommand: " + cmd});
        return res;
    }
    res.stdout_payload = out.str();
    return res;
}

} // namespace

std::string usage_text() {
    return "usage: cp2genus [--catalog <path>] <command>\n"
           "\n"
           "commands:\n"
           "  catalog validate          check the invariant table\n"
           "  degrees <name>            surviving slice degrees with exclusions\n"
           "  table [--format md|csv]   regenerate the genus tables\n"
           "  report <name>             full provenance for one knot\n"
           "  seifert sig <file>        signature of A + A^T\n"
           "  seifert alex <file>       Alexander polynomial\n"
           "  kn <n>                    twist-family Seifert matrix A_n\n"
           "  kn-family --max <n>       genus verdicts for the twist family\n"
           "  jones <pd-file>           Jones polynomial of a PD diagram\n"
           "  band apply <fixture>      apply a band surgery\n"
           "  band verify <fixture>     verify a surgery against its target\n"
           "\n"
           "The CP2GENUS_CATALOG environment variable also overrides the catalog.\n";
}

CommandResult dispatch(const std::vector<std::string>& argv) {
    try {
        return run(argv);
    } catch (const ParseError& e) {
        CommandResult res;
        res.exit_code = 1;
        res.diagnostics.push_back({Diagnostic::Severity::Error, e.what()});
        return res;
    } catch (const std::exception& e) {
        CommandResult res;
        res.exit_code = 1;
        res.diagnostics.push_back({Diagnostic::Severity::Error, e.what()});
        return res;
    }
}

} // namespace cp2
