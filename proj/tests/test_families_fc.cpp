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

TEST_CASE("seven fuss-catalan-class families are registered") {
    std::vector<FamilyPtr> fams = families_in_class(ClassId::fuss_catalan);
    size_t catalog = 0;
    for (const FamilyPtr& f : fams)
        if (f->tier() != FamilyTier::reference) ++catalog;
    CHECK(catalog == 7);
    CHECK(tier1_families(ClassId::fuss_catalan).size() == 4);
}

TEST_CASE("ternary trees: the worked tree has norm 7") {
    FamilyPtr f = family_by_id("fc.ternary-trees");
    CHECK(f->norm("(o,(o,o,(o,o,o)),o)") == 7);
    CHECK(print_term(decompose(*f, "(o,(o,o,(o,o,o)),o)")) == "m1(e,m1(e,e,m1(e,e,e)),e)");
    CHECK(f->apply(1, {"o", "o", "o"}) == "(o,o,o)");
    CHECK_THROWS_AS(f->canonicalize("(o,o)"), ObjectError);  // not ternary
    CHECK(sorted(slice("fc.ternary-trees", 5)) ==
          std::vector<std::string>{"((o,o,o),o,o)", "(o,(o,o,o),o)", "(o,o,(o,o,o))"});
}

TEST_CASE("partitions: worked example, canonical spelling, crossing rejection") {
    FamilyPtr f = family_by_id("fc.partitions");
    CHECK(evaluate(*f, parse_term("m1(e,m1(e,e,m1(e,e,e)),e)", f->cls().signature, 1)) ==
          "6:{1,6}{2,3}{4,5}");
    FactorResult fr = f->factor("6:{1,6}{2,3}{4,5}");
    REQUIRE(fr.reducible);
    CHECK(fr.map_index == 1);
    CHECK(fr.children == std::vector<std::string>{"0:", "4:{1,2}{3,4}", "0:"});
    CHECK(f->generator(0) == "0:");
    CHECK(f->canonicalize("") == "0:");  // accepted spelling of the empty partition
    CHECK(f->canonicalize("4:{2,3}{1,4}") == "4:{1,4}{2,3}");
    CHECK_THROWS_AS(f->canonicalize("4:{1,3}{2,4}"), ObjectError);  // crossing
    CHECK_THROWS_AS(f->canonicalize("3:{1,2,3}"), ObjectError);     // odd block
    CHECK_THROWS_AS(f->canonicalize("4:{1,2}"), ObjectError);       // not a partition of [4]
    CHECK(sorted(slice("fc.partitions", 5)) ==
          std::vector<std::string>{"4:{1,2,3,4}", "4:{1,2}{3,4}", "4:{1,4}{2,3}"});
}

TEST_CASE("even trees: all out-degrees even") {
    FamilyPtr f = family_by_id("fc.even-trees");
    CHECK(sorted(slice("fc.even-trees", 5)) ==
          std::vector<std::string>{"((o,o),o)", "(o,(o,o))", "(o,o,o,o)"});
    CHECK_THROWS_AS(f->canonicalize("(o,o,o)"), ObjectError);  // odd out-degree
}

TEST_CASE("quadrillages and odd dissections: frozen norm-5 slices") {
    CHECK(sorted(slice("fc.quadrillages", 5)) ==
          std::vector<std::string>{"6:(1,4)", "6:(2,5)", "6:(3,6)"});
    CHECK(sorted(slice("fc.quadrillages", 7)).size() == 12);
    CHECK(sorted(slice("fc.odd-dissections", 5)) ==
          std::vector<std::string>{"4:(1,3)", "4:(2,4)", "5:"});
    CHECK_THROWS_AS(family_by_id("fc.odd-dissections")->canonicalize("4:"), ObjectError);
    CHECK_THROWS_AS(family_by_id("fc.quadrillages")->canonicalize("3:"), ObjectError);
}

TEST_CASE("lattice paths and 2-dyck words: frozen slices and decompositions") {
    CHECK(sorted(slice("fc.lattice", 5)) ==
          std::vector<std::string>{"EENNNN", "ENENNN", "ENNENN"});
    CHECK(sorted(slice("fc.2dyck", 5)) ==
          std::vector<std::string>{"uuduud", "uuudud", "uuuudd"});
    FamilyPtr lat = family_by_id("fc.lattice");
    FamilyPtr dy = family_by_id("fc.2dyck");
    CHECK(print_term(decompose(*lat, "ENNENN")) == "m1(m1(e,e,e),e,e)");
    CHECK(print_term(decompose(*dy, "uuduud")) == "m1(m1(e,e,e),e,e)");
    CHECK_THROWS_AS(lat->canonicalize("NNE"), ObjectError);
    CHECK_THROWS_AS(dy->canonicalize("udu"), ObjectError);
}

TEST_CASE("even norms are empty in every fuss-catalan family") {
    for (const FamilyPtr& f : families_in_class(ClassId::fuss_catalan)) {
        if (f->tier() == FamilyTier::reference && f->gen_count() > 1) continue;
        auto groups = enumerate_family(*f, 8);
        for (int n = 2; n <= 8; n += 2) CHECK(groups[n - 1].empty());
    }
}

TEST_CASE("every fuss-catalan family passes counts and freeness at norm 11") {
    for (const FamilyPtr& f : families_in_class(ClassId::fuss_catalan)) {
        if (f->tier() == FamilyTier::reference && f->gen_count() > 1) continue;
        VerificationReport counts = check_counts(*f, 11);
        INFO(counts.to_text());
        CHECK(counts.passed());
        VerificationReport freeness = check_freeness(*f, 11);
        INFO(freeness.to_text());
        CHECK(freeness.passed());
    }
}
