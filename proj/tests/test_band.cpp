#include "doctest.h"

#include <random>

#include "cp2/band.hpp"
#include "cp2/catalog.hpp"
#include "cp2/errors.hpp"

using namespace cp2;

namespace {
Diagram pd(const std::string& name) {
    return load_catalog_pd(name, share_dir() + "/pd");
}

BandSpec band(int e1, double p1, Side s1, int e2, double p2, Side s2, int twists = 0) {
    BandSpec b;
    b.edge1 = e1;
    b.pos1 = p1;
    b.side1 = s1;
    b.edge2 = e2;
    b.pos2 = p2;
    b.side2 = s2;
    b.half_twists = twists;
    return b;
}
} // namespace

TEST_CASE("coherence rules") {
    Diagram unknot = pd("unknot");
    BandSpec split = band(1, 0.25, Side::Left, 1, 0.75, Side::Left);
    CHECK(check_coherent(unknot, split));

    BandSpec bad = band(1, 0.25, Side::Left, 1, 0.75, Side::Right);
    CHECK_FALSE(check_coherent(unknot, bad));

    // an odd number of half twists flips the verdict
    bad.half_twists = 1;
    CHECK(check_coherent(unknot, bad));
    split.half_twists = -3;
    CHECK_FALSE(check_coherent(unknot, split));

    // symmetric under swapping the attachments
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20; ++i) {
        BandSpec b = band(1, 0.2, rng() % 2 ? Side::Left : Side::Right, 1, 0.7,
                          rng() % 2 ? Side::Left : Side::Right,
                          static_cast<int>(rng() % 5) - 2);
        BandSpec swapped = band(b.edge2, b.pos2, b.side2, b.edge1, b.pos1, b.side1, b.half_twists);
        CHECK(check_coherent(unknot, b) == check_coherent(unknot, swapped));
    }

    CHECK_THROWS_AS(check_coherent(unknot, band(1, 0.5, Side::Left, 1, 0.5, Side::Left)),
                    ContractError);
    CHECK_THROWS_AS(check_coherent(unknot, band(2, 0.5, Side::Left, 1, 0.7, Side::Left)),
                    ContractError);
}

TEST_CASE("split band on the unknot") {
    Diagram unknot = pd("unknot");
    BandSpec split = band(1, 0.25, Side::Left, 1, 0.75, Side::Left);
    Diagram result = apply_band(unknot, split);
    CHECK(result.component_count() == 2);
    CHECK(result.crossing_count() == 0);
    CHECK(kauffman_bracket(result) == kauffman_bracket(pd("unlink2")));

    CHECK_THROWS_AS(apply_band(unknot, band(1, 0.25, Side::Left, 1, 0.75, Side::Right)),
                    ValidationError);
}

TEST_CASE("fusion band on the unlink") {
    Diagram unlink = pd("unlink2");
    Diagram fused = apply_band(unlink, band(1, 0.5, Side::Left, 2, 0.5, Side::Left));
    CHECK(fused.component_count() == 1);
    CHECK(jones(fused) == Laurent(1, "A"));

    // twists on the band only add curl crossings to the unknot
    Diagram twisted = apply_band(unlink, band(1, 0.5, Side::Left, 2, 0.5, Side::Left, 2));
    CHECK(twisted.component_count() == 1);
    CHECK(twisted.crossing_count() == 2);
    CHECK(jones(twisted) == Laurent(1, "A"));

    Diagram twisted3 = apply_band(unlink, band(1, 0.5, Side::Left, 2, 0.5, Side::Right, -3));
    CHECK(twisted3.component_count() == 1);
    CHECK(jones(twisted3) == Laurent(1, "A"));
}

TEST_CASE("band core crossing an edge") {
    // Split the first circle while the band dips over the second circle
    // and back out (the core must cross it an even number of times to
    // return to its own circle).
    Diagram unlink = pd("unlink2");
    BandSpec b = band(1, 0.25, Side::Left, 1, 0.75, Side::Left);
    b.core.push_back({2, true, 0.3});
    b.core.push_back({2, true, 0.7});
    Diagram result = apply_band(unlink, b);
    CHECK(result.component_count() == 3);
    CHECK(result.crossing_count() == 4);
    // both split circles slide off the poked one: a 3-component unlink
    Laurent delta = Laurent::monomial(-1, 2, "A") + Laurent::monomial(-1, -2, "A");
    CHECK(jones(result) == delta * delta);

    BandSpec under = b;
    under.core[0].over = false;
    under.core[1].over = false;
    Diagram result2 = apply_band(unlink, under);
    CHECK(result2.component_count() == 3);
    CHECK(jones(result2) == delta * delta);
}

TEST_CASE("fusing the Hopf link components") {
    // Anti-parallel strands across the band give a coherent fusion; a
    // parallel placement needs a half twist.
    Diagram hopf = pd("L2a1_1");
    BandSpec b = band(1, 0.5, Side::Left, 3, 0.5, Side::Left);
    CHECK(check_coherent(hopf, b));
    Diagram fused = apply_band(hopf, b);
    CHECK(fused.component_count() == 1);

    BandSpec parallel = band(1, 0.5, Side::Left, 3, 0.5, Side::Right);
    CHECK_FALSE(check_coherent(hopf, parallel));
    parallel.half_twists = 1;
    CHECK(check_coherent(hopf, parallel));
    CHECK(apply_band(hopf, parallel).component_count() == 1);
}

TEST_CASE("band on a knot diagram changes components by one") {
    Diagram tref = pd("3_1");
    std::mt19937_64 rng(11);
    int applied = 0;
    for (int trial = 0; trial < 200; ++trial) {
        BandSpec b;
        b.edge1 = 1 + static_cast<int>(rng() % 6);
        b.edge2 = 1 + static_cast<int>(rng() % 6);
        b.pos1 = 0.3;
        b.pos2 = 0.6;
        if (b.edge1 == b.edge2 && b.pos1 == b.pos2)
            continue;
        b.side1 = rng() % 2 ? Side::Left : Side::Right;
        b.side2 = rng() % 2 ? Side::Left : Side::Right;
        b.half_twists = static_cast<int>(rng() % 5) - 2;
        if (!check_coherent(tref, b))
            continue;
        Diagram out = apply_band(tref, b);
        ++applied;
        int diff = out.component_count() - tref.component_count();
        CHECK(std::abs(diff) == 1);
    }
    CHECK(applied > 50);
}

TEST_CASE("bundled surgery fixtures verify") {
    for (const char* name :
         {"7_3__L4a1_1", "8_6__L2a1_1", "m8_6__mL2a1_1", "m8_4__L4a1_1"}) {
        BandFixture f = load_band_fixture_file(share_dir() + "/bands/" + std::string(name) +
                                               ".band");
        BandVerification v = verify_band_fixture(f);
        CHECK(v.coherent);
        CHECK(v.components == 2);
        CHECK(v.jones_match);
        CHECK(v.linking_match);
        CHECK(v.ok());
    }
}

TEST_CASE("fixtures agree with the catalog's realized degrees") {
    // A band from K to a target in the degree-d row realizes degree d for
    // the mirror knot.
    std::map<std::string, int> target_degree = {
        {"L4a1_1", 3}, {"L2a1_1", 2}, {"mL2a1_1", 0}};
    CatalogStore store = load_bundled_catalog();
    for (const char* name :
         {"7_3__L4a1_1", "8_6__L2a1_1", "m8_6__mL2a1_1", "m8_4__L4a1_1"}) {
        BandFixture f = load_band_fixture_file(share_dir() + "/bands/" + std::string(name) +
                                               ".band");
        int d = target_degree.at(f.expect_target);
        const KnotRecord& mirror = store.get(mirror_name(f.diagram_name));
        CHECK(mirror.realized_degrees.count(d));
    }
}

TEST_CASE("fixture files parse") {
    CHECK_THROWS_AS(parse_band_fixture("attach1=1:0.5\n", ""), ParseError);
    CHECK_THROWS_AS(parse_band_fixture("diagram=unknot\nattach1=1:0.5\nattach2=1:0.7\n",
                                       share_dir() + "/pd"),
                    ParseError); // missing sides
    BandFixture f = parse_band_fixture("diagram=unknot\n"
                                       "attach1=1:0.25\n"
                                       "attach2=1:0.75\n"
                                       "sides=left,left\n"
                                       "core=\n"
                                       "twists=0\n"
                                       "expect_components=2\n"
                                       "expect_target=unlink2\n",
                                       share_dir() + "/pd");
    CHECK(f.band.edge1 == 1);
    CHECK(f.band.pos2 == 0.75);
    CHECK(f.expect_components == 2);
    BandVerification v = verify_band_fixture(f, share_dir() + "/pd");
    CHECK(v.coherent);
    CHECK(v.components_match);
    CHECK(v.jones_match);
    CHECK(v.linking_match);
    CHECK(v.ok());
}
