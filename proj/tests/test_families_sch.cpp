#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "magma/bijection.hpp"
#include "magma/family.hpp"
#include "magma/verification.hpp"

using namespace magma;

namespace {

std::vector<std::string> slice(const std::string& id, int norm) {
    FamilyPtr f = family_by_id(id);
    REQUIRE(f != nullptr);
    return enumerate_family(*f, norm)[static_cast<size_t>(norm) - 1];
}

std::vector<std::string> sorted(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

TEST_CASE("eight schroeder-class families are registered") {
    std::vector<FamilyPtr> fams = families_in_class(ClassId::schroeder);
    size_t catalog = 0;
    for (const FamilyPtr& f : fams)
        if (f->tier() != FamilyTier::reference) ++catalog;
    CHECK(catalog == 8);
    CHECK(tier1_families(ClassId::schroeder).size() == 4);
}

TEST_CASE("paths: D/E/N steps under the diagonal") {
    FamilyPtr f = family_by_id("sch.paths");
    CHECK(f->apply(1, {""}) == "D");
    CHECK(f->apply(2, {"", "D"}) == "EDN");
    FactorResult fr = f->factor("EDN");
    REQUIRE(fr.reducible);
    CHECK(fr.map_index == 2);
    CHECK(fr.children == std::vector<std::string>{"", "D"});
    CHECK(print_term(decompose(*f, "EDN")) == "m2(e,m1(e))");
    CHECK_THROWS_AS(f->canonicalize("NE"), ObjectError);  // rises above the diagonal
    CHECK(sorted(slice("sch.paths", 2)) == std::vector<std::string>{"D", "EN"});
    CHECK(slice("sch.paths", 3).size() == 6);
}

TEST_CASE("dyck-peaks: marked peaks w/b, no bare UD") {
    FamilyPtr f = family_by_id("sch.dyck-peaks");
    CHECK(f->apply(1, {""}) == "UwD");
    CHECK(f->apply(2, {"", ""}) == "UbD");
    CHECK(f->apply(2, {"UwD", "UbD"}) == "UwDUUbDD");
    CHECK_THROWS_AS(f->canonicalize("UD"), ObjectError);
    CHECK(sorted(slice("sch.dyck-peaks", 2)) == std::vector<std::string>{"UbD", "UwD"});
    CHECK(sorted(slice("sch.dyck-peaks", 3)) ==
          std::vector<std::string>{"UUbDD", "UUwDD", "UbDUbD", "UbDUwD", "UwDUbD", "UwDUwD"});
}

TEST_CASE("ssyt: the two worked tableau examples") {
    FamilyPtr f = family_by_id("sch.ssyt");
    CHECK(evaluate(*f, parse_term("m2(m1(e),m2(e,e))", f->cls().signature, 1)) == "1,1;2,4;3,5");
    CHECK(print_term(decompose(*f, "1,1;2,3;4,5;6,6")) == "m1(m2(m2(m1(e),e),e))");
    CHECK(f->generator(0) == "()");
    CHECK(f->apply(1, {"()"}) == "1,1");
    CHECK(f->apply(2, {"()", "()"}) == "1,2");
    CHECK_THROWS_AS(f->canonicalize("2,1"), ObjectError);    // L > R
    CHECK_THROWS_AS(f->canonicalize("1,1;1,2"), ObjectError);  // columns not strict
    CHECK(sorted(slice("sch.ssyt", 3)) ==
          std::vector<std::string>{"1,1;2,2", "1,1;2,3", "1,2;2,3", "1,2;3,3", "1,2;3,4",
                                   "1,3;2,4"});
}

TEST_CASE("trees: binary-unary trees where both maps add one internal node") {
    FamilyPtr f = family_by_id("sch.trees");
    CHECK(f->norm("(o,(o,o))") == 3);
    CHECK(sorted(slice("sch.trees", 2)) == std::vector<std::string>{"(o)", "(o,o)"});
    CHECK(slice("sch.trees", 3).size() == 6);
}

TEST_CASE("rectangulations: the worked ternary product") {
    FamilyPtr f = family_by_id("sch.rectangulations");
    CHECK(f->apply(2, {"1:V[0,2]", "1:H[0,2]"}) == "3:V[0,2];H[0,4];H[0,4]");
    FactorResult fr = f->factor("3:V[0,2];H[0,4];H[0,4]");
    REQUIRE(fr.reducible);
    CHECK(fr.map_index == 2);
    CHECK(fr.children == std::vector<std::string>{"1:V[0,2]", "1:H[0,2]"});
    CHECK(sorted(slice("sch.rectangulations", 2)) ==
          std::vector<std::string>{"1:H[0,2]", "1:V[0,2]"});
    CHECK(slice("sch.rectangulations", 3).size() == 6);
}

TEST_CASE("dissections: polygon dissections with no triangles") {
    FamilyPtr f = family_by_id("sch.dissections");
    CHECK(f->generator(0) == "4:");
    CHECK(sorted(slice("sch.dissections", 2)) == std::vector<std::string>{"5:", "5:(2,4)"});
    CHECK(sorted(slice("sch.dissections", 3)) ==
          std::vector<std::string>{"6:", "6:(2,4)", "6:(2,4)(2,5)", "6:(2,5)", "6:(2,5)(3,5)",
                                   "6:(3,5)"});
    FactorResult fr = f->factor("6:(2,5)(3,5)");
    std::string back = f->apply(fr.map_index, fr.children);
    CHECK(back == "6:(2,5)(3,5)");
    CHECK_THROWS_AS(f->canonicalize("6:(2,4)(3,5)"), ObjectError);  // crossing diagonals
}

TEST_CASE("aztec: diamond matchings, frozen slices") {
    FamilyPtr f = family_by_id("sch.aztec");
    CHECK(f->generator(0) == "0:");
    CHECK(sorted(slice("sch.aztec", 2)) ==
          std::vector<std::string>{"1:h(0,0);h(0,1)", "1:v(0,0);v(1,0)"});
    CHECK(slice("sch.aztec", 3).size() == 6);
    CHECK_THROWS_AS(f->canonicalize("1:h(0,0)"), ObjectError);  // not a perfect matching
}

TEST_CASE("zebras: column-convex fillings, frozen slices") {
    FamilyPtr f = family_by_id("sch.zebras");
    CHECK(f->generator(0) == "|");
    CHECK(sorted(slice("sch.zebras", 2)) == std::vector<std::string>{"b0.1", "w0.1"});
    CHECK(sorted(slice("sch.zebras", 3)) ==
          std::vector<std::string>{"b0.1;b0.1", "b0.1;w0.1", "b0.2", "w0.1;b0.1", "w0.1;w0.1",
                                   "w0.2"});
}

TEST_CASE("every schroeder family passes counts and freeness at norm 6") {
    for (const FamilyPtr& f : families_in_class(ClassId::schroeder)) {
        if (f->tier() == FamilyTier::reference && f->gen_count() > 1) continue;
        VerificationReport counts = check_counts(*f, 6);
        INFO(counts.to_text());
        CHECK(counts.passed());
        VerificationReport freeness = check_freeness(*f, 6);
        INFO(freeness.to_text());
        CHECK(freeness.passed());
    }
}
