#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "magma/family.hpp"
#include "magma/verification.hpp"

using namespace magma;

namespace {

// Deliberately broken: both maps append 'a's, so m1(m1(a)) == m2(a) and the
// map images overlap even though each map is injective and norm-additive.
class OverlappingFamily final : public Family {
public:
    OverlappingFamily()
        : Family("broken.overlap", "broken fixture", class_fibonacci(), FamilyTier::tier2, 1,
                 "WORD := a+") {}

    std::string canonicalize(const std::string& text) const override {
        if (text.empty() || text.find_first_not_of('a') != std::string::npos)
            throw ObjectError("broken.overlap: not a word of a's");
        return text;
    }
    std::string generator(int) const override { return "a"; }
    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        return canonicalize(children[0]) + (map_index == 1 ? "a" : "aa");
    }
    FactorResult factor(const std::string& obj) const override {
        canonicalize(obj);
        if (obj.size() == 1) return FactorResult::irreducible(0);
        return FactorResult::via(1, {obj.substr(0, obj.size() - 1)});
    }
    long long norm(const std::string& obj) const override {
        return static_cast<long long>(canonicalize(obj).size());
    }
};

const CheckEntry* entry(const VerificationReport& rep, const std::string& name) {
    for (const CheckEntry& c : rep.checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace

TEST_CASE("check_counts: fib.subsets matches the sequence at norm 6") {
    VerificationReport rep = check_counts(*family_by_id("fib.subsets"), 6);
    CHECK(rep.passed());
    REQUIRE(rep.counts.size() == 6);
    long long expect[] = {1, 1, 2, 3, 5, 8};
    for (int n = 1; n <= 6; ++n) {
        CHECK(rep.counts[n - 1].norm == n);
        CHECK(rep.counts[n - 1].observed == expect[n - 1]);
        CHECK(rep.counts[n - 1].expected == expect[n - 1]);
    }
}

TEST_CASE("check_counts: sch.trees and the p=2 motzkin reference") {
    VerificationReport rep = check_counts(*family_by_id("sch.trees"), 4);
    CHECK(rep.passed());
    CHECK(rep.counts[3].expected == 22);

    VerificationReport ref = check_counts(*family_by_id("cart12.motzkin.p2"), 4);
    CHECK(ref.passed());
    CHECK(ref.counts[2].expected == 6);
    CHECK(ref.counts[3].expected == 14);
}

TEST_CASE("expected_count applies the class offsets") {
    CHECK(expected_count(ClassId::fibonacci, 1, 5) == 5);
    CHECK(expected_count(ClassId::motzkin, 1, 4) == 4);
    CHECK(expected_count(ClassId::schroeder, 1, 3) == 6);
    CHECK(expected_count(ClassId::fuss_catalan, 1, 7) == 12);
    CHECK(expected_count(ClassId::fuss_catalan, 1, 4) == 0);
    CHECK(expected_count(ClassId::schroeder, 3, 4) == 732);
}

TEST_CASE("check_freeness passes on healthy families") {
    VerificationReport rep = check_freeness(*family_by_id("mot.chords"), 6);
    INFO(rep.to_text());
    CHECK(rep.passed());
    CHECK(rep.checks.size() == 6);
    CHECK(check_freeness(*family_by_id("cart3"), 9).passed());
}

TEST_CASE("check_freeness flags overlapping map images with a counterexample") {
    OverlappingFamily broken;
    VerificationReport rep = check_freeness(broken, 5);
    CHECK_FALSE(rep.passed());
    const CheckEntry* disj = entry(rep, "cross-map image disjointness");
    REQUIRE(disj != nullptr);
    CHECK_FALSE(disj->pass);
    CHECK_FALSE(disj->counterexample.empty());
    CHECK(rep.to_text().find("FAIL") != std::string::npos);
}

TEST_CASE("collisions surface as count mismatches, not exceptions") {
    OverlappingFamily broken;
    VerificationReport rep = check_counts(broken, 4);
    CHECK_FALSE(rep.passed());
    // norm 3 holds only "aaa" after dedup, but F_3 = 2
    CHECK(rep.counts[2].observed == 1);
    CHECK(rep.counts[2].expected == 2);
}

TEST_CASE("check_bijection certifies the worked pairs with witness logs") {
    VerificationReport rep = check_bijection(*family_by_id("fib.tilings"),
                                             *family_by_id("fib.binary"), 8);
    INFO(rep.to_text());
    CHECK(rep.passed());
    bool logged = false;
    for (const auto& [a, b] : rep.witnesses) logged = logged || (a == "121" && b == "010");
    CHECK(logged);

    rep = check_bijection(*family_by_id("mot.paths"), *family_by_id("mot.chords"), 6);
    CHECK(rep.passed());
    logged = false;
    for (const auto& [a, b] : rep.witnesses) logged = logged || (a == "UHDH" && b == "4:(2,4)");
    CHECK(logged);

    CHECK(check_bijection(*family_by_id("sch.ssyt"), *family_by_id("sch.trees"), 5).passed());
}

TEST_CASE("check_bijection requires one class") {
    CHECK_THROWS_AS(
        check_bijection(*family_by_id("mot.paths"), *family_by_id("sch.paths"), 4),
        std::invalid_argument);
}

TEST_CASE("reports are deterministic and serialize to valid JSON") {
    FamilyPtr f = family_by_id("sch.zebras");
    VerificationReport a = check_freeness(*f, 5);
    VerificationReport b = check_freeness(*f, 5);
    CHECK(a.to_text() == b.to_text());
    CHECK(a.to_json(2) == b.to_json(2));

    nlohmann::json parsed = nlohmann::json::parse(a.to_json());
    CHECK(parsed["title"] == "freeness check: sch.zebras");
    CHECK(parsed["max_norm"] == 5);
    CHECK(parsed["passed"] == true);
    CHECK(parsed["checks"].is_array());

    VerificationReport counts = check_counts(*f, 5);
    parsed = nlohmann::json::parse(counts.to_json());
    REQUIRE(parsed["counts"].is_array());
    CHECK(parsed["counts"].size() == 5);
    CHECK(parsed["counts"][1]["observed"] == "2");
}

TEST_CASE("default bounds follow the class and shrink for exploding slices") {
    CHECK(default_bound(ClassId::fibonacci) == 12);
    CHECK(default_bound(ClassId::motzkin) == 10);
    CHECK(default_bound(ClassId::schroeder) == 8);
    CHECK(default_bound(ClassId::fuss_catalan) == 13);
    CHECK(default_bound(*family_by_id("fib.tilings")) == 12);
    CHECK(default_bound(*family_by_id("cart12.schroeder.p3")) < 8);
}

TEST_CASE("enumerate_family orders slices by term enumeration") {
    auto groups = enumerate_family(*family_by_id("mot.paths"), 4);
    REQUIRE(groups.size() == 4);
    CHECK(groups[0] == std::vector<std::string>{""});
    CHECK(groups[3] == std::vector<std::string>{"HHH", "UDH", "UHD", "HUD"});
}
