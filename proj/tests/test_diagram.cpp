#include "doctest.h"

#include "cp2/band.hpp"
#include "cp2/catalog.hpp"
#include "cp2/diagram.hpp"
#include "cp2/errors.hpp"

using namespace cp2;

namespace {

Laurent apoly(std::initializer_list<std::pair<int, long long>> terms) {
    Laurent p(0, "A");
    for (auto [e, c] : terms)
        p += Laurent::monomial(c, e, "A");
    return p;
}

Diagram pd(const std::string& name) {
    return load_catalog_pd(name, share_dir() + "/pd");
}

} // namespace

TEST_CASE("parsing and validation") {
    Diagram trefoil = Diagram::parse("X(1,5,2,4) X(5,3,6,2) X(3,1,4,6)");
    CHECK(trefoil.crossing_count() == 3);
    CHECK(trefoil.component_count() == 1);
    CHECK(trefoil.writhe() == 3);
    for (int i = 0; i < 3; ++i)
        CHECK(trefoil.sign(i) == 1);

    Diagram unknot = Diagram::parse("O(1)");
    CHECK(unknot.crossing_count() == 0);
    CHECK(unknot.component_count() == 1);

    Diagram kink = Diagram::parse("X(1,1,2,2)");
    CHECK(kink.component_count() == 1);
    CHECK(kink.writhe() == 1);

    // role propagation resolves the over-strand directions here
    Diagram hopf = Diagram::parse("X(4,1,3,2) X(2,3,1,4)");
    CHECK(hopf.component_count() == 2);
    CHECK(linking_number(hopf, 0, 1) == -1);

    CHECK_THROWS_AS(Diagram::parse("X(1,2,3,4)"), ValidationError);   // labels once
    CHECK_THROWS_AS(Diagram::parse("X(1,2,3,4) X(3,4,1,2)"), ValidationError); // non-consecutive
    CHECK_THROWS_AS(Diagram::parse("X(1,2)"), ParseError);
    CHECK_THROWS_AS(Diagram::parse("Y(1,2,3,4)"), ParseError);
    CHECK_THROWS_AS(Diagram::parse("X(2,1,1,2) O(2)"), ValidationError); // circle collides
}

TEST_CASE("round trip through text") {
    for (const char* name : {"3_1", "m3_1", "L2a1_1", "mL2a1_1", "L4a1_1"}) {
        Diagram d = pd(name);
        Diagram again = Diagram::parse(d.str());
        CHECK(again == d);
        for (int i = 0; i < d.crossing_count(); ++i)
            CHECK(again.sign(i) == d.sign(i));
    }
}

TEST_CASE("bracket anchors") {
    CHECK(kauffman_bracket(pd("unknot")) == apoly({{0, 1}}));
    CHECK(kauffman_bracket(pd("unlink2")) == apoly({{2, -1}, {-2, -1}}));
    CHECK(kauffman_bracket(Diagram::parse("X(1,1,2,2)")) == apoly({{3, -1}}));
    CHECK(kauffman_bracket(Diagram::parse("X(2,1,1,2)")) == apoly({{-3, -1}}));
    CHECK(kauffman_bracket(pd("L2a1_1")) == apoly({{4, -1}, {-4, -1}}));
    // right-handed trefoil
    CHECK(kauffman_bracket(pd("3_1")) == apoly({{5, -1}, {-3, -1}, {-7, 1}}));
}

TEST_CASE("split unlink bracket") {
    Laurent delta = apoly({{2, -1}, {-2, -1}});
    Laurent expect(1, "A");
    std::string text;
    for (int n = 1; n <= 4; ++n) {
        text += (n > 1 ? " O(" : "O(") + std::to_string(n) + ")";
        CHECK(kauffman_bracket(Diagram::parse(text)) == expect);
        expect = expect * delta;
    }
}

TEST_CASE("jones anchors") {
    CHECK(jones(pd("unknot")) == Laurent(1, "A"));
    CHECK(jones(Diagram::parse("X(1,1,2,2)")) == Laurent(1, "A")); // kinks normalize away
    CHECK(jones(Diagram::parse("X(2,1,1,2)")) == Laurent(1, "A"));
    CHECK(jones(pd("L2a1_1")) == apoly({{-2, -1}, {-10, -1}}));
    CHECK(jones(pd("3_1")) == apoly({{-4, 1}, {-12, 1}, {-16, -1}}));

    Laurent v = jones_t(jones(pd("3_1")));
    CHECK(v.str() == "t + t^3 - t^4");
    CHECK(v.eval_pm1(1) == 1);
    CHECK(std::abs(v.eval_pm1(-1)) == 3); // knot determinant

    CHECK_THROWS_AS(jones_t(jones(pd("L2a1_1"))), ContractError); // links have half powers
}

TEST_CASE("mirror duality") {
    for (const char* name : {"3_1", "L2a1_1", "L4a1_1"}) {
        Diagram d = pd(name);
        CHECK(jones(mirror_diagram(d)) == jones(d).inverted());
    }
    CHECK(jones(pd("m3_1")) == jones(pd("3_1")).inverted());
    CHECK(jones(pd("3_1")) != jones(pd("m3_1")));
    CHECK(jones(pd("mL2a1_1")) == jones(pd("L2a1_1")).inverted());
    CHECK(mirror_diagram(mirror_diagram(pd("3_1"))) == pd("3_1"));
}

TEST_CASE("orientation reversal") {
    Diagram hopf = pd("L2a1_1");
    Diagram rev = reverse_component(hopf, 1);
    CHECK(linking_number(rev, 0, 1) == -1);
    // Reversing every component preserves the oriented invariant.
    for (const char* name : {"3_1", "L2a1_1", "L4a1_1"}) {
        Diagram d = pd(name);
        Diagram all = d;
        for (int c = 0; c < d.component_count(); ++c)
            all = reverse_component(all, c);
        CHECK(jones(all) == jones(d));
        CHECK(all.writhe() == d.writhe());
    }
}

TEST_CASE("linking numbers") {
    CHECK(linking_number(pd("unlink2"), 0, 1) == 0);
    CHECK(linking_number(pd("L2a1_1"), 0, 1) == 1);
    CHECK(linking_number(pd("mL2a1_1"), 0, 1) == -1);
    CHECK(linking_number(pd("L4a1_1"), 0, 1) == 2);
    CHECK(linking_multiset(pd("L4a1_1")) == std::vector<int>{2});
    CHECK_THROWS_AS(linking_number(pd("unlink2"), 0, 0), ContractError);
    CHECK_THROWS_AS(linking_number(pd("unlink2"), 0, 5), ContractError);
}

TEST_CASE("braid closures") {
    Diagram tref = braid_closure(2, {1, 1, 1});
    CHECK(tref.component_count() == 1);
    CHECK(jones(tref) == jones(pd("3_1")));

    Diagram hopf = braid_closure(2, {1, 1});
    CHECK(hopf.component_count() == 2);
    CHECK(jones(hopf) == jones(pd("L2a1_1")));

    Diagram l4a1 = braid_closure(2, {1, 1, 1, 1});
    CHECK(jones(l4a1) == jones(pd("L4a1_1")));
    CHECK(linking_number(l4a1, 0, 1) == 2);

    // (sigma_1 sigma_2)^2 closes to the trefoil again
    CHECK(jones(braid_closure(3, {1, 2, 1, 2})) == jones(pd("3_1")));

    // (sigma_1 sigma_2)^4 closes to the 8-crossing torus knot, determinant 3
    Diagram t34 = braid_closure(3, {1, 2, 1, 2, 1, 2, 1, 2});
    CHECK(t34.component_count() == 1);
    CHECK(t34.crossing_count() == 8);
    CHECK(std::abs(jones_t(jones(t34)).eval_pm1(-1)) == 3);

    // negative word mirrors the positive one
    CHECK(jones(braid_closure(2, {-1, -1, -1})) == jones(pd("m3_1")));

    // untouched strands close into circles
    Diagram with_circle = braid_closure(3, {1, 1});
    CHECK(with_circle.component_count() == 3);
}

TEST_CASE("bundled knot diagrams carry the right invariants") {
    // determinant = |V(-1)|, unit value V(1) = 1, span = crossing number of
    // the reduced alternating diagram, V''(1) = -6 a_2.
    auto v2at1 = [](const Laurent& v) {
        long long s = 0;
        for (auto [e, c] : v.terms())
            s += c * static_cast<long long>(e) * (e - 1);
        return s;
    };
    Laurent v73 = jones_t(jones(pd("7_3")));
    CHECK(std::abs(v73.eval_pm1(-1)) == 13);
    CHECK(v73.eval_pm1(1) == 1);
    CHECK(v73.max_exp() - v73.min_exp() == 7);
    CHECK(v2at1(v73) == -30); // a_2 = 5
    CHECK(v73.min_exp() > 0); // positive knot

    Laurent v86 = jones_t(jones(pd("8_6")));
    CHECK(std::abs(v86.eval_pm1(-1)) == 23);
    CHECK(v86.eval_pm1(1) == 1);
    CHECK(v86.max_exp() - v86.min_exp() == 8);
    CHECK(v2at1(v86) == 12); // a_2 = -2 separates 8_6 from the other det-23 knot

    Laurent v84 = jones_t(jones(pd("m8_4")));
    CHECK(std::abs(v84.eval_pm1(-1)) == 19);
    CHECK(v84.eval_pm1(1) == 1);
    CHECK(v84.max_exp() - v84.min_exp() == 8);
    CHECK(v2at1(v84) == 18); // a_2 = -3

    CHECK(jones(pd("m7_3")) == jones(pd("7_3")).inverted());
    CHECK(jones(pd("m8_6")) == jones(pd("8_6")).inverted());
    CHECK(jones(pd("8_4")) == jones(pd("m8_4")).inverted());
    CHECK(jones(pd("L4a1_0")) != jones(pd("L4a1_1")));
    CHECK(linking_number(pd("L4a1_0"), 0, 1) == -2);
}

TEST_CASE("state-sum budget") {
    std::vector<int> word(17, 1);
    CHECK_THROWS_AS(kauffman_bracket(braid_closure(2, word)), ResourceError);
}

TEST_CASE("tnn degree bookkeeping") {
    CHECK(tnn_degree({{1, 1, 1}}) == 3);
    CHECK(tnn_degree({{1, -1}}) == 0);
    CHECK(tnn_degree({{1, 1, -1}}) == 1);
    CHECK_THROWS_AS(tnn_degree({{}}), ContractError);
    CHECK_THROWS_AS(tnn_degree({{2}}), ContractError);
}
