#include "doctest.h"
#include "novpot/classes.hpp"

using namespace novpot;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

ClassLattice make_f4() {
    ClassLattice lat;
    lat.name = "F4";
    lat.fiber_dim = 2;
    lat.set_basis({"D1", "D2", "D3", "D4"});
    lat.add_generator("e1", {0, 1, 0, 1});
    lat.add_generator("e2", {1, 4, 1, 0});
    lat.add_generator("e3", {0, 1, 0, 1});
    lat.add_generator("e4", {1, 0, 1, -4});
    lat.set_pairing_row("e1", {{"D1", 1}});
    lat.set_pairing_row("e2", {{"D2", 1}});
    lat.set_pairing_row("e3", {{"D3", 1}});
    lat.set_pairing_row("e4", {{"D4", 1}});
    lat.seed_chern("D1", 1);
    lat.seed_chern("D2", 1);
    lat.seed_chern("D3", 1);
    lat.seed_chern("D4", 0);
    lat.seed_boundary("D1", {1, 0});
    lat.seed_boundary("D2", {0, 1});
    lat.seed_boundary("D3", {-1, -4});
    lat.seed_boundary("D4", {0, -1});
    lat.seed_area("D1", AffineExponent(q("0"), {q("1"), q("0")}));
    lat.seed_area("D2", AffineExponent(q("0"), {q("0"), q("1")}));
    lat.seed_area("D3", AffineExponent(q("4"), {q("-1"), q("-4")}));
    return lat;
}

ClassLattice make_cp2() {
    ClassLattice lat;
    lat.name = "CP2";
    lat.fiber_dim = 2;
    lat.set_basis({"H", "D1", "D2"});
    lat.add_generator("D4p", {1, 0, -2});
    lat.seed_chern("H", 3);
    lat.seed_chern("D1", 1);
    lat.seed_chern("D2", 1);
    lat.seed_boundary("H", {0, 0});
    lat.seed_boundary("D1", {1, 0});
    lat.seed_boundary("D2", {0, 1});
    lat.seed_area("H", AffineExponent(q("2"), {q("0"), q("0")}));
    lat.seed_area("D1", AffineExponent(q("0"), {q("1"), q("0")}));
    lat.seed_area("D2", AffineExponent(q("0"), {q("0"), q("1")}));
    return lat;
}

ClassLattice make_x1() {
    ClassLattice lat;
    lat.name = "X1";
    lat.fiber_dim = 2;
    lat.set_basis({"Hp"});
    return lat;
}

LatticeSet make_set() {
    LatticeSet ls;
    ls.emplace("F4", make_f4());
    ls.emplace("CP2", make_cp2());
    ls.emplace("X1", make_x1());
    return ls;
}

}  // namespace

TEST_CASE("normal forms substitute the relations") {
    ClassLattice lat = make_f4();
    RelClass e4 = normalize(lat, {{"e4", 1}});
    CHECK(e4.coords == std::vector<Int>{1, 0, 1, -4});
    RelClass e3 = normalize(lat, {{"e3", 1}});
    RelClass e1 = normalize(lat, {{"e1", 1}});
    CHECK(e3.coords == e1.coords);
    RelClass d1 = normalize(lat, {{"D1", 1}});
    CHECK(d1.coords == std::vector<Int>{1, 0, 0, 0});
    // e2 - 4 e1 = e4
    RelClass mix = normalize(lat, {{"e2", 1}, {"e1", -4}});
    CHECK(mix.coords == e4.coords);
    CHECK_THROWS_AS(normalize(lat, {{"nope", 1}}), lattice_error);
}

TEST_CASE("pairings extend bilinearly") {
    ClassLattice lat = make_f4();
    CHECK(pair_with(normalize(lat, {{"e2", 1}}), "e2") == 4);
    CHECK(pair_with(normalize(lat, {{"e4", 1}}), "e4") == -4);
    CHECK(pair_with(normalize(lat, {{"D2", 1}}), "e2") == 1);
    CHECK(pair_with(normalize(lat, {{"D1", 1}}), "e2") == 0);
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j) {
            std::string di = "D" + std::to_string(i);
            std::string ej = "e" + std::to_string(j);
            CHECK(pair_with(normalize(lat, {{di, 1}}), ej) == (i == j ? 1 : 0));
        }
    CHECK_THROWS_AS(pair_with(normalize(lat, {{"D1", 1}}), "D1"), lattice_error);
}

TEST_CASE("chern, maslov, area, boundary extend linearly from the seeds") {
    ClassLattice lat = make_f4();
    CHECK(chern(normalize(lat, {{"e2", 1}})) == 6);
    CHECK(chern(normalize(lat, {{"e1", 1}})) == 1);
    CHECK(chern(normalize(lat, {{"e3", 1}})) == 1);
    CHECK(maslov(normalize(lat, {{"D4", 1}})) == 0);
    CHECK(maslov(normalize(lat, {{"D1", 1}})) == 2);
    CHECK(area(normalize(lat, {{"D3", 1}})).to_string() == "4-u1-4*u2");
    CHECK(boundary(normalize(lat, {{"e1", 1}})) == std::vector<Int>{0, 0});
    // area is undeclared on D4, so e1 = D2 + D4 has no area
    CHECK_THROWS_AS(area(normalize(lat, {{"e1", 1}})), lattice_error);
}

TEST_CASE("positive cone membership in the disk basis") {
    ClassLattice lat = make_f4();
    std::vector<std::string> cone{"D1", "D2", "D3", "D4"};
    CHECK(positive_cone_member(normalize(lat, {{"e2", 1}}), cone));
    CHECK(!positive_cone_member(normalize(lat, {{"e4", 1}}), cone));
    CHECK(positive_cone_member(normalize(lat, {}), cone));
    // non-integer combinations are excluded
    ClassLattice cp2 = make_cp2();
    CHECK(!positive_cone_member(normalize(cp2, {{"H", 1}}), {"D4p"}));
}

TEST_CASE("gluing: solving the unknown side") {
    LatticeSet ls = make_set();
    // k H = k Hp # 2k D4 # 2k D2, solving for the cap piece
    for (Int k = 1; k <= 5; ++k) {
        GluingRule rule;
        rule.name = "k" + std::to_string(k);
        rule.pieces = {{"X1", "Hp", k}, {"F4", "D4", 2 * k}, {"F4", "D2", 2 * k}};
        rule.result = {"CP2", "H", k};
        GlueOutcome out = glue_check(ls, rule, Functional::chern);
        CHECK(out.solved_term == 0);
        CHECK(std::get<Int>(out.value) == k);
    }

    GluingRule exotic;
    exotic.name = "exotic";
    exotic.pieces = {{"CP2", "D4p", 1}, {"F4", "D2", 2}};
    exotic.result = {"CP2", "H", 1};
    // all sides known: consistency check mode
    GlueOutcome chern_out = glue_check(ls, exotic, Functional::chern);
    CHECK(chern_out.solved_term == -2);
    CHECK(std::get<Int>(chern_out.value) == 3);
    // forced derivation ignores the declared relation
    CHECK(std::get<Int>(glue_forced(ls, exotic, Functional::maslov, 0)) == 2);
    AffineExponent a = std::get<AffineExponent>(glue_forced(ls, exotic, Functional::area, 0));
    CHECK(a == AffineExponent(q("2"), {q("0"), q("-2")}));
    // boundary of the exotic class is (0, -2)
    CHECK(std::get<std::vector<Int>>(glue_forced(ls, exotic, Functional::boundary, 0)) ==
          std::vector<Int>{0, -2});

    GluingRule e1cap;
    e1cap.name = "e1";
    e1cap.pieces = {{"X1", "Hp", 1}, {"F4", "e1", 2}};
    e1cap.result = {"CP2", "H", 1};
    CHECK(std::get<Int>(glue_check(ls, e1cap, Functional::chern).value) == 1);
}

TEST_CASE("gluing: inconsistent data is detected") {
    LatticeSet ls = make_set();
    GluingRule wrong;
    wrong.name = "wrong-multiplicity";
    wrong.pieces = {{"CP2", "D4p", 1}, {"F4", "D2", 3}};  // should be 2
    wrong.result = {"CP2", "H", 1};
    CHECK_THROWS_AS(glue_check(ls, wrong, Functional::chern), inconsistency_error);

    GluingRule two_unknown;
    two_unknown.name = "two-unknowns";
    two_unknown.pieces = {{"X1", "Hp", 1}, {"F4", "D4", 2}};
    two_unknown.result = {"CP2", "H", 1};
    // area is undeclared on both Hp and D4
    CHECK_THROWS_AS(glue_check(ls, two_unknown, Functional::area), lattice_error);
}

TEST_CASE("fredholm index reproduces the three curve computations") {
    // punctured double disk over the cut: one negative puncture
    CHECK(fredholm_index(2, 0, 0, 0, {{-1, 0, 2}}) == 1);
    // plane through the conic: one positive puncture
    CHECK(fredholm_index(2, 0, 1, 1, {{+1, 0, 2}}) == 2);
    // compactified critical disk: no punctures, c1 = 2
    CHECK(fredholm_index(2, 0, 1, 2, {}) == 3);
}

TEST_CASE("normal chern numbers and automatic transversality") {
    CHECK(normal_chern(3, 0, 0, 1) == Rational(1));
    CHECK(normal_chern(2, 0, 0, 0) == Rational(0));
    CHECK(normal_chern(1, 0, 0, 1) == Rational(0));
    CHECK(at_check(3, Rational(1), 1));
    CHECK(at_check(1, Rational(0), 0));
    CHECK(at_check(2, Rational(0), 0));
    CHECK(!at_check(2, Rational(1), 1));
}

TEST_CASE("functional values render deterministically") {
    CHECK(to_string(FunctionalValue(Int(3))) == "3");
    CHECK(to_string(FunctionalValue(std::vector<Int>{0, -2})) == "(0, -2)");
    CHECK(to_string(FunctionalValue(AffineExponent(q("2"), {q("0"), q("-2")}))) == "2-2*u2");
}
