#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magma/enumerate.hpp"
#include "magma/family.hpp"
#include "magma/verification.hpp"

using namespace magma;

TEST_CASE("twelve cartesian families are registered") {
    for (const char* id : {"cart11", "cart11.p2", "cart11.p3", "cart12.motzkin",
                           "cart12.motzkin.p2", "cart12.motzkin.p3", "cart12.schroeder",
                           "cart12.schroeder.p2", "cart12.schroeder.p3", "cart3", "cart3.p2",
                           "cart3.p3"}) {
        FamilyPtr f = family_by_id(id);
        REQUIRE(f != nullptr);
        CHECK(f->tier() == FamilyTier::reference);
    }
    CHECK(family_by_id("cart11")->gen_count() == 1);
    CHECK(family_by_id("cart3.p3")->gen_count() == 3);
}

TEST_CASE("objects are canonical terms") {
    FamilyPtr f = family_by_id("cart12.motzkin");
    CHECK(f->generator(0) == "e");
    CHECK(f->apply(2, {"m1(e)", "e"}) == "m2(m1(e),e)");
    CHECK(f->canonicalize("m1(e0)") == "m1(e)");
    CHECK(f->norm("m2(e,m2(e,e))") == 5);

    FactorResult fr = f->factor("m2(m1(e),e)");
    REQUIRE(fr.reducible);
    CHECK(fr.map_index == 2);
    CHECK(fr.children == std::vector<std::string>{"m1(e)", "e"});
    CHECK_FALSE(f->factor("e").reducible);
}

TEST_CASE("invalid terms are rejected as objects") {
    FamilyPtr f = family_by_id("cart11");
    CHECK_THROWS_AS(f->canonicalize("m2(e,e)"), ObjectError);   // wrong arity for (1,1)
    CHECK_THROWS_AS(f->canonicalize("e1"), ObjectError);        // only one generator
    CHECK_THROWS_AS(f->canonicalize("m3(e)"), ObjectError);
    CHECK_THROWS_AS(f->canonicalize("garbage"), ObjectError);
    CHECK_THROWS_AS(f->apply(1, {"e", "e"}), ObjectError);      // arity mismatch
    CHECK_NOTHROW(family_by_id("cart11.p2")->canonicalize("e1"));
}

TEST_CASE("multi-generator slice counts match the sequences") {
    FamilyPtr f = family_by_id("cart12.motzkin.p2");
    VerificationReport rep = check_counts(*f, 4);
    CHECK(rep.passed());
    REQUIRE(rep.counts.size() == 4);
    CHECK(rep.counts[0].observed == 2);
    CHECK(rep.counts[1].observed == 2);
    CHECK(rep.counts[2].observed == 6);
    CHECK(rep.counts[3].observed == 14);
}

TEST_CASE("reference families pass the freeness audit") {
    CHECK(check_freeness(*family_by_id("cart3"), 9).passed());
    CHECK(check_freeness(*family_by_id("cart11.p2"), 7).passed());
    CHECK(check_freeness(*family_by_id("cart12.schroeder"), 5).passed());
}

TEST_CASE("enumerate_family lists printed terms in order") {
    FamilyPtr f = family_by_id("cart11");
    auto groups = enumerate_family(*f, 4);
    CHECK(groups[3] ==
          std::vector<std::string>{"m1(m1(m1(e)))", "m1(m2(e))", "m2(m1(e))"});
}

TEST_CASE("cartesian_family rejects p < 1") {
    CHECK_THROWS_AS(cartesian_family(class_motzkin(), 0), std::invalid_argument);
}
