#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "magma/term.hpp"

using namespace magma;

TEST_CASE("class specs carry the four signatures and norms") {
    using LL = std::vector<long long>;
    const ClassSpec& fib = class_fibonacci();
    CHECK(fib.signature.arities == std::vector<int>{1, 1});
    CHECK(fib.norm.offsets == LL{1, 2});
    CHECK(fib.norm.gen_norms == LL{1});

    const ClassSpec& mot = class_motzkin();
    CHECK(mot.signature.arities == std::vector<int>{1, 2});
    CHECK(mot.norm.offsets == LL{1, 1});

    const ClassSpec& sch = class_schroeder();
    CHECK(sch.signature.arities == std::vector<int>{1, 2});
    CHECK(sch.norm.offsets == LL{1, 0});

    const ClassSpec& fc = class_fuss_catalan();
    CHECK(fc.signature.arities == std::vector<int>{3});
    CHECK(fc.norm.offsets == LL{0});

    CHECK(fib.same_class(fib));
    CHECK_FALSE(mot.same_class(sch));  // same signature, different norms
    CHECK(class_by_name("schroeder") == &sch);
    CHECK(class_by_name("nope") == nullptr);
}

TEST_CASE("parse and print round-trip") {
    const Signature& sig = class_motzkin().signature;
    for (const char* text : {"e", "m1(e)", "m2(e,e)", "m2(m1(e),m2(e,e))",
                             "m1(m1(m1(m1(e))))", "m2(m2(m2(e,e),e),m1(e))"}) {
        TermPtr t = parse_term(text, sig, 1);
        CHECK(print_term(t) == text);
    }
    // e0 is an alias of e and prints as e
    CHECK(print_term(parse_term("m1(e0)", sig, 1)) == "m1(e)");
}

TEST_CASE("parse handles multiple generators") {
    const Signature& sig = class_fibonacci().signature;
    TermPtr t = parse_term("m2(m1(e2))", sig, 3);
    CHECK(print_term(t) == "m2(m1(e2))");
    CHECK(t->children[0]->children[0]->gen_index == 2);
}

TEST_CASE("parse rejects malformed terms with positions") {
    const Signature& mot = class_motzkin().signature;
    auto pos_of = [&](const std::string& text, int gens = 1) {
        try {
            parse_term(text, mot, gens);
        } catch (const TermParseError& e) {
            return static_cast<long long>(e.position);
        }
        return -1LL;
    };
    CHECK(pos_of("") == 0);
    CHECK(pos_of("x") == 0);
    CHECK(pos_of("m1(e") == 4);           // missing ')'
    CHECK(pos_of("m2(e)") == 4);          // arity 2, got 1
    CHECK(pos_of("m1(e,e)") == 4);        // arity 1, got 2
    CHECK(pos_of("m3(e)") >= 0);          // no such map
    CHECK(pos_of("e1") >= 0);             // generator out of range
    CHECK(pos_of("e junk") >= 0);         // trailing input
    CHECK(pos_of("m1(e))") >= 0);
    CHECK_NOTHROW(parse_term("e2", mot, 3));
}

TEST_CASE("term_norm matches the class norms on the reference vectors") {
    auto norm_in = [](const ClassSpec& cls, const char* text) {
        return term_norm(parse_term(text, cls.signature, 1), cls);
    };
    CHECK(norm_in(class_fibonacci(), "m2(m2(e))") == 5);
    CHECK(norm_in(class_motzkin(), "m2(e,m2(e,e))") == 5);
    CHECK(norm_in(class_schroeder(), "m2(e,m2(e,e))") == 3);
    CHECK(norm_in(class_fuss_catalan(), "m1(e,e,m1(e,e,e))") == 5);
    CHECK(norm_in(class_fibonacci(), "e") == 1);
    CHECK(norm_in(class_schroeder(), "m1(e)") == 2);
}

TEST_CASE("term_equal compares structurally") {
    const Signature& sig = class_motzkin().signature;
    TermPtr a = parse_term("m2(m1(e),e)", sig, 1);
    TermPtr b = parse_term("m2(m1(e),e)", sig, 1);
    TermPtr c = parse_term("m2(e,m1(e))", sig, 1);
    CHECK(term_equal(a, b));
    CHECK_FALSE(term_equal(a, c));
}

TEST_CASE("term_fold computes leaf counts iteratively") {
    const Signature& sig = class_fuss_catalan().signature;
    TermPtr t = parse_term("m1(e,m1(e,e,e),e)", sig, 1);
    int leaves = term_fold<int>(
        t, [](int) { return 1; },
        [](int, const std::vector<int>& parts) {
            int s = 0;
            for (int v : parts) s += v;
            return s;
        });
    CHECK(leaves == 5);
}

TEST_CASE("expand_generators widens the gen norm list") {
    ClassSpec cls = expand_generators(class_motzkin(), 3);
    CHECK(cls.norm.gen_norms == std::vector<long long>{1, 1, 1});
    CHECK(term_norm(parse_term("m2(e1,e2)", cls.signature, 3), cls) == 3);
}

TEST_CASE("deep terms do not overflow the stack") {
    const Signature& sig = class_fibonacci().signature;
    std::string text;
    for (int i = 0; i < 50000; ++i) text += "m1(";
    text += "e";
    for (int i = 0; i < 50000; ++i) text += ")";
    TermPtr t = parse_term(text, sig, 1);
    CHECK(print_term(t) == text);
    CHECK(term_norm(t, class_fibonacci()) == 50001);
}
