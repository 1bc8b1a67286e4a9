#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "magma/enumerate.hpp"
#include "magma/sequences.hpp"

using namespace magma;

namespace {

std::vector<BigInt> big(std::initializer_list<long long> xs) {
    return {xs.begin(), xs.end()};
}

std::vector<std::string> printed(const std::vector<TermPtr>& terms) {
    std::vector<std::string> out;
    for (const TermPtr& t : terms) out.push_back(print_term(t));
    return out;
}

}  // namespace

TEST_CASE("term counts match the reference vectors") {
    CHECK(count_terms_by_norm(class_fibonacci(), 1, 5) == big({1, 1, 2, 3, 5}));
    CHECK(count_terms_by_norm(class_motzkin(), 1, 5) == big({1, 1, 2, 4, 9}));
    CHECK(count_terms_by_norm(class_schroeder(), 1, 3) == big({1, 2, 6}));
    CHECK(count_terms_by_norm(class_fuss_catalan(), 1, 7) == big({1, 0, 1, 0, 3, 0, 12}));
    CHECK(count_terms_by_norm(class_motzkin(), 2, 3) == big({2, 2, 6}));
}

// Frozen from tools/oracle_counts.py (independent DP implementation).
TEST_CASE("term counts match the cross-language oracle at N=13") {
    CHECK(count_terms_by_norm(class_fibonacci(), 2, 13) ==
          big({2, 2, 4, 6, 10, 16, 26, 42, 68, 110, 178, 288, 466}));
    CHECK(count_terms_by_norm(class_fibonacci(), 3, 13) ==
          big({3, 3, 6, 9, 15, 24, 39, 63, 102, 165, 267, 432, 699}));
    CHECK(count_terms_by_norm(class_motzkin(), 2, 13) ==
          big({2, 2, 6, 14, 42, 122, 382, 1206, 3922, 12914, 43190, 145950, 498170}));
    CHECK(count_terms_by_norm(class_motzkin(), 3, 13) ==
          big({3, 3, 12, 30, 111, 363, 1353, 4917, 18777, 71769, 280506, 1103556, 4395009}));
    CHECK(count_terms_by_norm(class_schroeder(), 2, 13) ==
          big({2, 6, 30, 186, 1290, 9582, 74550, 599730, 4948050, 41638614, 356007630,
               3083837802, 27006251610}));
    CHECK(count_terms_by_norm(class_schroeder(), 3, 10) ==
          big({3, 12, 84, 732, 7140, 74604, 816564, 9241788, 107276484, 1270120908}));
    CHECK(count_terms_by_norm(class_fuss_catalan(), 2, 13) ==
          big({2, 0, 8, 0, 96, 0, 1536, 0, 28160, 0, 559104, 0, 11698176}));
    CHECK(count_terms_by_norm(class_fuss_catalan(), 3, 13) ==
          big({3, 0, 27, 0, 729, 0, 26244, 0, 1082565, 0, 48361131, 0, 2276693244}));
}

TEST_CASE("term counts agree with the class sequences at their offsets") {
    for (int p = 1; p <= 3; ++p) {
        std::vector<BigInt> fib = count_terms_by_norm(class_fibonacci(), p, 12);
        for (int n = 1; n <= 12; ++n)
            CHECK(fib[n - 1] == seq_value({SequenceId::p_fibonacci, p, n}));
        std::vector<BigInt> mot = count_terms_by_norm(class_motzkin(), p, 10);
        for (int n = 1; n <= 10; ++n)
            CHECK(mot[n - 1] == seq_value({SequenceId::p_motzkin, p, n - 1}));
        std::vector<BigInt> sch = count_terms_by_norm(class_schroeder(), p, 8);
        for (int n = 1; n <= 8; ++n)
            CHECK(sch[n - 1] == seq_value({SequenceId::p_schroder, p, n - 1}));
        std::vector<BigInt> fc = count_terms_by_norm(class_fuss_catalan(), p, 13);
        for (int n = 1; n <= 13; ++n) {
            BigInt want = n % 2 ? seq_value({SequenceId::p_fuss_catalan, p, (n - 1) / 2})
                                : BigInt(0);
            CHECK(fc[n - 1] == want);
        }
    }
}

TEST_CASE("enumeration order is generators, then maps, compositions, odometer") {
    auto fib4 = enumerate_terms(class_fibonacci(), 1, 4);
    CHECK(printed(fib4[3]) ==
          std::vector<std::string>{"m1(m1(m1(e)))", "m1(m2(e))", "m2(m1(e))"});

    auto sch2 = enumerate_terms(class_schroeder(), 1, 2);
    CHECK(printed(sch2[1]) == std::vector<std::string>{"m1(e)", "m2(e,e)"});

    auto fc3 = enumerate_terms(class_fuss_catalan(), 1, 3);
    CHECK(printed(fc3[2]) == std::vector<std::string>{"m1(e,e,e)"});

    auto two_gens = enumerate_terms(class_motzkin(), 2, 1);
    CHECK(printed(two_gens[0]) == std::vector<std::string>{"e", "e1"});
}

TEST_CASE("enumeration sizes equal the counting DP and slices are clean") {
    struct Row {
        const ClassSpec* cls;
        int p;
        int bound;
    };
    for (const Row& row : {Row{&class_fibonacci(), 1, 10}, Row{&class_fibonacci(), 2, 8},
                           Row{&class_motzkin(), 1, 8}, Row{&class_motzkin(), 2, 6},
                           Row{&class_schroeder(), 1, 6}, Row{&class_schroeder(), 2, 5},
                           Row{&class_fuss_catalan(), 1, 11}, Row{&class_fuss_catalan(), 3, 7}}) {
        std::vector<BigInt> counts = count_terms_by_norm(*row.cls, row.p, row.bound);
        auto slices = enumerate_terms(*row.cls, row.p, row.bound);
        REQUIRE(slices.size() == static_cast<size_t>(row.bound));
        ClassSpec cls = expand_generators(*row.cls, row.p);
        for (int n = 1; n <= row.bound; ++n) {
            CHECK(BigInt(slices[n - 1].size()) == counts[n - 1]);
            std::set<std::string> texts;
            for (const TermPtr& t : slices[n - 1]) {
                CHECK(term_norm(t, cls) == n);
                CHECK(texts.insert(print_term(t)).second);
            }
        }
    }
}
