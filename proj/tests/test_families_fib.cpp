#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

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

TEST_CASE("eleven fibonacci-class families are registered") {
    std::vector<FamilyPtr> fams = families_in_class(ClassId::fibonacci);
    size_t catalog = 0;
    for (const FamilyPtr& f : fams)
        if (f->tier() != FamilyTier::reference) ++catalog;
    CHECK(catalog == 11);
    CHECK(tier1_families(ClassId::fibonacci).size() == 5);
}

TEST_CASE("tilings: '121' factors by its last tile") {
    FamilyPtr f = family_by_id("fib.tilings");
    FactorResult fr = f->factor("121");
    REQUIRE(fr.reducible);
    CHECK(fr.map_index == 1);
    CHECK(fr.children == std::vector<std::string>{"12"});
    CHECK(f->norm("121") == 5);
    CHECK(f->apply(2, {"11"}) == "112");
    CHECK(f->generator(0) == "");
    CHECK_FALSE(f->factor("").reducible);
}

TEST_CASE("tilings: low-norm slices") {
    CHECK(slice("fib.tilings", 1) == std::vector<std::string>{""});
    CHECK(sorted(slice("fib.tilings", 3)) == std::vector<std::string>{"11", "2"});
    CHECK(sorted(slice("fib.tilings", 4)) == std::vector<std::string>{"111", "12", "21"});
}

TEST_CASE("matchings and ladder reuse the suffix-word encoding") {
    CHECK(sorted(slice("fib.matchings", 4)) == std::vector<std::string>{"---", "-=", "=-"});
    CHECK(sorted(slice("fib.ladder", 4)) == std::vector<std::string>{"=|", "|=", "|||"});
}

TEST_CASE("comp-no1: compositions with parts >= 2") {
    FamilyPtr f = family_by_id("fib.comp-no1");
    CHECK(f->generator(0) == "2");
    CHECK(f->apply(1, {"2+2"}) == "2+3");  // m1 bumps the last part
    CHECK(f->apply(2, {"2+2"}) == "2+2+2");
    CHECK(f->norm("3+3") == 5);
    CHECK(sorted(slice("fib.comp-no1", 4)) == std::vector<std::string>{"2+3", "3+2", "5"});
}

TEST_CASE("comp-le2: empty composition prints ()") {
    FamilyPtr f = family_by_id("fib.comp-le2");
    CHECK(f->generator(0) == "()");
    CHECK(f->apply(1, {"()"}) == "1");
    CHECK(f->apply(2, {"1"}) == "1+2");
    CHECK(f->canonicalize("()") == "()");
    CHECK_THROWS_AS(f->canonicalize(""), ObjectError);
    CHECK_THROWS_AS(f->canonicalize("3"), ObjectError);
    CHECK(sorted(slice("fib.comp-le2", 4)) == std::vector<std::string>{"1+1+1", "1+2", "2+1"});
}

TEST_CASE("binary: words with no adjacent ones, empty word prints ()") {
    FamilyPtr f = family_by_id("fib.binary");
    CHECK(f->generator(0) == "_");
    CHECK(f->apply(1, {"_"}) == "()");
    CHECK(f->apply(1, {"()"}) == "0");
    CHECK(f->apply(2, {"()"}) == "01");
    CHECK(f->norm("010") == 5);
    CHECK_THROWS_AS(f->canonicalize("11"), ObjectError);
    CHECK_THROWS_AS(f->canonicalize("012"), ObjectError);
    CHECK(sorted(slice("fib.binary", 4)) == std::vector<std::string>{"00", "01", "10"});
}

TEST_CASE("subsets: sparse subsets track the ambient size") {
    FamilyPtr f = family_by_id("fib.subsets");
    CHECK(f->apply(1, {"_"}) == "0:{}");
    CHECK(f->apply(2, {"_"}) == "1:{1}");
    CHECK(f->apply(2, {"1:{1}"}) == "3:{1,3}");
    CHECK_THROWS_AS(f->canonicalize("2:{1,2}"), ObjectError);  // adjacent elements
    CHECK(sorted(slice("fib.subsets", 4)) == std::vector<std::string>{"2:{1}", "2:{2}", "2:{}"});
}

TEST_CASE("odd-runs, permutations, glass: frozen slices") {
    CHECK(sorted(slice("fib.odd-runs", 4)) == std::vector<std::string>{"0001", "0101", "0111"});
    CHECK(sorted(slice("fib.odd-runs", 5)) ==
          std::vector<std::string>{"00000", "00010", "01000", "01010", "01110"});
    CHECK(sorted(slice("fib.permutations", 4)) ==
          std::vector<std::string>{"1,2,3", "1,3,2", "2,1,3"});
    CHECK(sorted(slice("fib.glass", 5)) ==
          std::vector<std::string>{"BMB", "BTB", "BTM", "MTB", "MTM"});
    CHECK_THROWS_AS(family_by_id("fib.permutations")->canonicalize("3,1,2"), ObjectError);
}

TEST_CASE("every fibonacci family passes counts and freeness at norm 10") {
    for (const FamilyPtr& f : families_in_class(ClassId::fibonacci)) {
        if (f->tier() == FamilyTier::reference && f->gen_count() > 1) continue;
        VerificationReport counts = check_counts(*f, 10);
        INFO(counts.to_text());
        CHECK(counts.passed());
        VerificationReport freeness = check_freeness(*f, 10);
        INFO(freeness.to_text());
        CHECK(freeness.passed());
    }
}
