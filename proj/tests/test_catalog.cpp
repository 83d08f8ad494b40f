#include "doctest.h"

#include "cp2/catalog.hpp"
#include "cp2/errors.hpp"

using namespace cp2;

namespace {
const char* kHeader =
    "name,crossings,alternating,amphichiral,signature,arf,g4,unknotting,"
    "realized,ext_lower,ext_upper,notes\n";
}

TEST_CASE("header-only catalog is empty") {
    CatalogStore store = parse_catalog(kHeader);
    CHECK(store.size() == 0);
}

TEST_CASE("single row parses with all fields") {
    CatalogStore store = parse_catalog(std::string(kHeader) + "m5_1,5,Y,N,4,1,2,2,3,,,\n");
    const KnotRecord& r = store.get("m5_1");
    CHECK(r.crossings == 5);
    CHECK(r.alternating);
    CHECK_FALSE(r.amphichiral);
    CHECK(r.signature == 4);
    CHECK(r.arf == 1);
    CHECK(r.smooth4genus == 2);
    CHECK(r.unknotting == 2);
    CHECK(r.realized_degrees == std::set<int>{3});
    CHECK_FALSE(r.external_lower.has_value());
}

TEST_CASE("validation failures") {
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,N,0,2,1,1,,,,\n"),
                    ValidationError); // arf = 2
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,N,1,0,1,1,,,,\n"),
                    ValidationError); // odd signature
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,N,-4,0,1,2,,,,\n"),
                    ValidationError); // |sigma|/2 > g4
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,N,0,0,2,1,,,,\n"),
                    ValidationError); // g4 > u
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,Y,2,0,1,1,,,,\n"),
                    ValidationError); // amphichiral with nonzero signature
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,N,0,0,1,1,9,,,\n"),
                    ValidationError); // realized degree outside the quadratic window
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,N,0,zero,1,1,,,,\n"),
                    ParseError); // non-integer field
    CHECK_THROWS_AS(parse_catalog(std::string(kHeader) + "x,3,Y,N,0,0,1\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog("nonsense\n"), ParseError);
}

TEST_CASE("parse error carries the line number") {
    try {
        parse_catalog(std::string(kHeader) + "ok_knot,3,Y,N,0,0,0,0,,,,\nbad,3,Y,N,q,0,0,0,,,,\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("mirror_record") {
    CatalogStore store = load_bundled_catalog();
    KnotRecord r = store.get("3_1");
    KnotRecord m = mirror_record(r);
    CHECK(m.name == "m3_1");
    CHECK(m.signature == 2);
    CHECK(m.arf == r.arf);
    CHECK(m.smooth4genus == r.smooth4genus);
    CHECK(m.unknotting == r.unknotting);
    CHECK(m.realized_degrees.empty());

    KnotRecord mm = mirror_record(m);
    CHECK(mm.name == "3_1");
    CHECK(mm.signature == r.signature);
    CHECK(mm.arf == r.arf);

    KnotRecord amphi = mirror_record(store.get("4_1"));
    CHECK(amphi.name == "4_1");
    CHECK(amphi.signature == 0);
}

TEST_CASE("bundled catalog loads and is mirror-consistent") {
    CatalogStore store = load_bundled_catalog();
    CHECK(store.size() == 64);
    int self = 0, unpaired = 0;
    for (const auto& r : store.records()) {
        auto m = store.mirror_of(r.name);
        if (!m) {
            ++unpaired;
            continue;
        }
        // involution
        CHECK(store.mirror_of(*m) == r.name);
        if (*m == r.name) {
            ++self;
            continue;
        }
        const KnotRecord& partner = store.get(*m);
        CHECK(partner.signature == -r.signature);
        CHECK(partner.arf == r.arf);
        CHECK(partner.smooth4genus == r.smooth4genus);
        CHECK(partner.unknotting == r.unknotting);
        CHECK(partner.alternating == r.alternating);
    }
    CHECK(self == 7);    // the unknot plus six amphichiral table knots
    CHECK(unpaired == 1); // the negatively amphichiral knot listed once
    CHECK_THROWS_AS(store.get("no_such_knot"), ValidationError);
}

TEST_CASE("serialize round-trips the store") {
    CatalogStore store = load_bundled_catalog();
    CatalogStore again = parse_catalog(serialize_catalog(store));
    REQUIRE(again.size() == store.size());
    for (std::size_t i = 0; i < store.size(); ++i)
        CHECK(store.records()[i] == again.records()[i]);
    // Serialization is canonical: a second pass is byte-identical.
    CHECK(serialize_catalog(store) == serialize_catalog(again));
}

TEST_CASE("published tables cover the catalog") {
    auto published = load_bundled_published_tables();
    CatalogStore store = load_bundled_catalog();
    CHECK(published.size() == 64);
    for (const auto& r : store.records()) {
        REQUIRE(published.count(r.name));
        const PublishedRow& row = published.at(r.name);
        CHECK(row.genus_low <= row.genus_high);
    }
}
