#include "doctest.h"

#include "cp2/band.hpp"
#include "cp2/catalog.hpp"
#include "cp2/errors.hpp"
#include "cp2/moves.hpp"

using namespace cp2;

namespace {
Diagram pd(const std::string& name) {
    return load_catalog_pd(name, share_dir() + "/pd");
}
} // namespace

TEST_CASE("r1 keeps jones") {
    Diagram tref = pd("3_1");
    for (int edge : {1, 4}) {
        for (bool positive : {true, false}) {
            Diagram kinked = r1_add(tref, edge, positive);
            CHECK(kinked.crossing_count() == tref.crossing_count() + 1);
            CHECK(kinked.component_count() == tref.component_count());
            CHECK(jones(kinked) == jones(tref));
            CHECK(kinked.writhe() == tref.writhe() + (positive ? 1 : -1));
        }
    }
    Diagram circle = pd("unknot");
    CHECK(jones(r1_add(circle, 1, true)) == jones(circle));
    CHECK_THROWS_AS(r1_add(tref, 99, true), ContractError);
}

TEST_CASE("r2 keeps jones") {
    Diagram tref = pd("3_1");
    for (bool flip : {false, true}) {
        Diagram poked = r2_poke(tref, 1, 4, flip);
        CHECK(poked.crossing_count() == tref.crossing_count() + 2);
        CHECK(poked.writhe() == tref.writhe());
        CHECK(jones(poked) == jones(tref));
    }
    Diagram hopf = pd("L2a1_1");
    CHECK(jones(r2_poke(hopf, 1, 3, false)) == jones(hopf));
    CHECK_THROWS_AS(r2_poke(tref, 2, 2, false), ContractError);
}

TEST_CASE("r3 keeps jones") {
    std::vector<int> word = {1, 2, 1, 2, 1, 2, 1, 2};
    std::vector<int> moved = r3_rewrite(word, 0);
    CHECK(moved == std::vector<int>{2, 1, 2, 2, 1, 2, 1, 2});
    CHECK(jones(braid_closure(3, moved)) == jones(braid_closure(3, word)));

    std::vector<int> neg = {-2, -1, -2, 1, 1};
    std::vector<int> negmoved = r3_rewrite(neg, 0);
    CHECK(jones(braid_closure(3, negmoved)) == jones(braid_closure(3, neg)));

    // the relation applies in either direction
    CHECK(jones(braid_closure(3, r3_rewrite(word, 1))) == jones(braid_closure(3, word)));

    CHECK_THROWS_AS(r3_rewrite({1, -2, 1}, 0), ContractError);
    CHECK_THROWS_AS(r3_rewrite({1, 1, 1}, 0), ContractError);
    CHECK_THROWS_AS(r3_rewrite({1, 2, 2}, 0), ContractError);
    CHECK_THROWS_AS(r3_rewrite(word, 6), ContractError);
}
