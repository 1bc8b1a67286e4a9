#include <algorithm>
#include <string>
#include <vector>

#include "family_util.hpp"
#include "magma/family.hpp"

// Fibonacci-class families: signature (1,1), map offsets (1,2), one generator
// of norm 1.  m1 extends an object by one unit, m2 by two.

namespace magma {
namespace {

using detail::expect;
using detail::join;
using detail::parse_ll;
using detail::split;

// Words over a two-letter alphabet where m1 appends a weight-1 letter and m2 a
// weight-2 letter; norm = weighted length + 1.  Covers tilings, matchings and
// ladder graphs, which differ only in the alphabet.
class SuffixWordFamily final : public Family {
public:
    SuffixWordFamily(std::string id, std::string display, char one, char two, std::string grammar)
        : Family(std::move(id), std::move(display), class_fibonacci(), FamilyTier::tier1, 1,
                 std::move(grammar)),
          one_(one),
          two_(two) {}

    SuffixWordFamily(std::string id, std::string display, char one, char two, std::string grammar,
                     FamilyTier tier)
        : Family(std::move(id), std::move(display), class_fibonacci(), tier, 1,
                 std::move(grammar)),
          one_(one),
          two_(two) {}

    std::string canonicalize(const std::string& text) const override {
        for (char c : text)
            expect(c == one_ || c == two_, id() + ": unexpected character '" + std::string(1, c) +
                                               "' in '" + text + "'");
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        return children[0] + (map_index == 1 ? one_ : two_);
    }

    FactorResult factor(const std::string& obj) const override {
        if (obj.empty()) return FactorResult::irreducible();
        char last = obj.back();
        expect(last == one_ || last == two_, id() + ": unexpected character in '" + obj + "'");
        return FactorResult::via(last == one_ ? 1 : 2, {obj.substr(0, obj.size() - 1)});
    }

    long long norm(const std::string& obj) const override {
        long long n = 1;
        for (char c : obj) {
            expect(c == one_ || c == two_, id() + ": unexpected character in '" + obj + "'");
            n += (c == one_) ? 1 : 2;
        }
        return n;
    }

private:
    char one_;
    char two_;
};

// Compositions with all parts >= 2, written "a+b+c"; norm = sum - 1.
// m1 adds one to the last part, m2 appends a new part 2.
class CompNo1Family final : public Family {
public:
    CompNo1Family()
        : Family("fib.comp-no1", "compositions with parts >= 2", class_fibonacci(),
                 FamilyTier::tier1, 1, "PART('+'PART)*, PART >= 2") {}

    std::string canonicalize(const std::string& text) const override {
        return print(parse(text));
    }

    std::string generator(int) const override { return "2"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        auto parts = parse(children[0]);
        if (map_index == 1)
            parts.back() += 1;
        else
            parts.push_back(2);
        return print(parts);
    }

    FactorResult factor(const std::string& obj) const override {
        auto parts = parse(obj);
        if (parts.size() == 1 && parts[0] == 2) return FactorResult::irreducible();
        if (parts.back() > 2) {
            parts.back() -= 1;
            return FactorResult::via(1, {print(parts)});
        }
        parts.pop_back();
        expect(!parts.empty(), id() + ": '" + obj + "' does not factor");
        return FactorResult::via(2, {print(parts)});
    }

    long long norm(const std::string& obj) const override {
        auto parts = parse(obj);
        long long sum = 0;
        for (long long p : parts) sum += p;
        return sum - 1;
    }

private:
    std::vector<long long> parse(const std::string& text) const {
        std::vector<long long> parts;
        for (const auto& piece : split(text, '+')) {
            long long v = parse_ll(piece, id());
            expect(v >= 2, id() + ": part " + piece + " < 2 in '" + text + "'");
            parts.push_back(v);
        }
        return parts;
    }

    std::string print(const std::vector<long long>& parts) const {
        std::vector<std::string> out;
        out.reserve(parts.size());
        for (long long p : parts) out.push_back(std::to_string(p));
        return join(out, '+');
    }
};

// Compositions with parts in {1,2}; the empty composition is written "()".
// norm = sum + 1.
class CompLe2Family final : public Family {
public:
    CompLe2Family()
        : Family("fib.comp-le2", "compositions with parts in {1,2}", class_fibonacci(),
                 FamilyTier::tier1, 1, "() | PART('+'PART)*, PART in {1,2}") {}

    std::string canonicalize(const std::string& text) const override {
        return print(parse(text));
    }

    std::string generator(int) const override { return "()"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        auto parts = parse(children[0]);
        parts.push_back(map_index == 1 ? 1 : 2);
        return print(parts);
    }

    FactorResult factor(const std::string& obj) const override {
        auto parts = parse(obj);
        if (parts.empty()) return FactorResult::irreducible();
        int m = parts.back() == 1 ? 1 : 2;
        parts.pop_back();
        return FactorResult::via(m, {print(parts)});
    }

    long long norm(const std::string& obj) const override {
        auto parts = parse(obj);
        long long sum = 1;
        for (long long p : parts) sum += p;
        return sum;
    }

private:
    std::vector<long long> parse(const std::string& text) const {
        std::vector<long long> parts;
        if (text == "()") return parts;
        expect(!text.empty(), id() + ": the empty composition is written ()");
        for (const auto& piece : split(text, '+')) {
            long long v = parse_ll(piece, id());
            expect(v == 1 || v == 2, id() + ": part " + piece + " not in {1,2}");
            parts.push_back(v);
        }
        return parts;
    }

    std::string print(const std::vector<long long>& parts) const {
        if (parts.empty()) return "()";
        std::vector<std::string> out;
        out.reserve(parts.size());
        for (long long p : parts) out.push_back(std::to_string(p));
        return join(out, '+');
    }
};

// Compositions into odd parts; norm = sum.  m1 appends a part 1, m2 adds two
// to the last part.
class CompOddFamily final : public Family {
public:
    CompOddFamily()
        : Family("fib.comp-odd", "compositions into odd parts", class_fibonacci(),
                 FamilyTier::tier2, 1, "PART('+'PART)*, PART odd") {}

    std::string canonicalize(const std::string& text) const override {
        return print(parse(text));
    }

    std::string generator(int) const override { return "1"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        auto parts = parse(children[0]);
        if (map_index == 1)
            parts.push_back(1);
        else
            parts.back() += 2;
        return print(parts);
    }

    FactorResult factor(const std::string& obj) const override {
        auto parts = parse(obj);
        if (parts.size() == 1 && parts[0] == 1) return FactorResult::irreducible();
        if (parts.back() == 1) {
            parts.pop_back();
            return FactorResult::via(1, {print(parts)});
        }
        parts.back() -= 2;
        return FactorResult::via(2, {print(parts)});
    }

    long long norm(const std::string& obj) const override {
        auto parts = parse(obj);
        long long sum = 0;
        for (long long p : parts) sum += p;
        return sum;
    }

private:
    std::vector<long long> parse(const std::string& text) const {
        std::vector<long long> parts;
        for (const auto& piece : split(text, '+')) {
            long long v = parse_ll(piece, id());
            expect(v % 2 == 1, id() + ": even part " + piece + " in '" + text + "'");
            parts.push_back(v);
        }
        return parts;
    }

    std::string print(const std::vector<long long>& parts) const {
        std::vector<std::string> out;
        out.reserve(parts.size());
        for (long long p : parts) out.push_back(std::to_string(p));
        return join(out, '+');
    }
};

// Binary words starting with 0 whose maximal runs all have odd length;
// norm = length.  m1 starts a new run, m2 extends the last run by two.
class OddRunsFamily final : public Family {
public:
    OddRunsFamily()
        : Family("fib.odd-runs", "binary words with odd maximal runs", class_fibonacci(),
                 FamilyTier::tier2, 1, "word over {0,1} starting 0, runs odd") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return "0"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        const std::string& w = children[0];
        expect(!w.empty(), id() + ": maps apply to nonempty words");
        if (map_index == 1) return w + (w.back() == '0' ? '1' : '0');
        return w + w.back() + w.back();
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj == "0") return FactorResult::irreducible();
        size_t run = 1;
        while (run < obj.size() && obj[obj.size() - 1 - run] == obj.back()) ++run;
        if (run == 1) return FactorResult::via(1, {obj.substr(0, obj.size() - 1)});
        return FactorResult::via(2, {obj.substr(0, obj.size() - 2)});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        return static_cast<long long>(obj.size());
    }

private:
    void validate(const std::string& w) const {
        expect(!w.empty() && w[0] == '0', id() + ": word must start with 0");
        size_t run = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            expect(w[i] == '0' || w[i] == '1', id() + ": unexpected character in '" + w + "'");
            ++run;
            if (i + 1 == w.size() || w[i + 1] != w[i]) {
                expect(run % 2 == 1, id() + ": even run in '" + w + "'");
                run = 0;
            }
        }
    }
};

// Permutations in which every entry moves at most one place from its position,
// written "2,1,3"; the empty permutation is "()".  norm = n + 1.
class PermutationFamily final : public Family {
public:
    PermutationFamily()
        : Family("fib.permutations", "permutations displacing entries by at most one",
                 class_fibonacci(), FamilyTier::tier2, 1, "() | VAL(','VAL)*") {}

    std::string canonicalize(const std::string& text) const override {
        std::string canon = print(parse(text));
        validate_recursive(canon);
        return canon;
    }

    std::string generator(int) const override { return "()"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        auto vals = parse(children[0]);
        long long n = static_cast<long long>(vals.size());
        if (map_index == 1) {
            vals.push_back(n + 1);
        } else {
            vals.push_back(n + 2);
            vals.push_back(n + 1);
        }
        return print(vals);
    }

    FactorResult factor(const std::string& obj) const override {
        auto vals = parse(obj);
        if (vals.empty()) return FactorResult::irreducible();
        long long n = static_cast<long long>(vals.size());
        if (vals.back() == n) {
            vals.pop_back();
            return FactorResult::via(1, {print(vals)});
        }
        expect(n >= 2 && vals.back() == n - 1 && vals[vals.size() - 2] == n,
               id() + ": '" + obj + "' is not in the family");
        vals.pop_back();
        vals.pop_back();
        return FactorResult::via(2, {print(vals)});
    }

    long long norm(const std::string& obj) const override {
        return static_cast<long long>(parse(obj).size()) + 1;
    }

private:
    std::vector<long long> parse(const std::string& text) const {
        std::vector<long long> vals;
        if (text == "()") return vals;
        expect(!text.empty(), id() + ": empty permutation is written ()");
        for (const auto& piece : split(text, ',')) vals.push_back(parse_ll(piece, id()));
        std::vector<bool> seen(vals.size() + 1, false);
        for (long long v : vals) {
            expect(v >= 1 && v <= static_cast<long long>(vals.size()) && !seen[v],
                   id() + ": '" + text + "' is not a permutation");
            seen[v] = true;
        }
        return vals;
    }

    std::string print(const std::vector<long long>& vals) const {
        if (vals.empty()) return "()";
        std::vector<std::string> out;
        out.reserve(vals.size());
        for (long long v : vals) out.push_back(std::to_string(v));
        return join(out, ',');
    }
};

// Binary words avoiding 11 together with an adjoined point "_"; the empty
// word is written "()".  m1(_) = empty word, m2(_) = "1"; on words m1 appends
// 0, m2 appends 01.  norm: _ -> 1, word -> length + 2.
class NoElevenFamily final : public Family {
public:
    NoElevenFamily()
        : Family("fib.binary", "binary words avoiding 11, with base point", class_fibonacci(),
                 FamilyTier::tier1, 1, "_ | () | word over {0,1} without 11") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return "_"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        const std::string& w = children[0];
        if (w == "_") return map_index == 1 ? "()" : "1";
        std::string word = w == "()" ? "" : w;
        validate_word(word, w);
        return word + (map_index == 1 ? "0" : "01");
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj == "_") return FactorResult::irreducible();
        if (obj == "()") return FactorResult::via(1, {"_"});
        if (obj == "1") return FactorResult::via(2, {"_"});
        if (obj.back() == '0') {
            std::string rest = obj.substr(0, obj.size() - 1);
            return FactorResult::via(1, {rest.empty() ? "()" : rest});
        }
        expect(obj.size() >= 2 && obj[obj.size() - 2] == '0',
               id() + ": '" + obj + "' is not in the family");
        std::string rest = obj.substr(0, obj.size() - 2);
        return FactorResult::via(2, {rest.empty() ? "()" : rest});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        if (obj == "_") return 1;
        if (obj == "()") return 2;
        return static_cast<long long>(obj.size()) + 2;
    }

private:
    void validate(const std::string& w) const {
        if (w == "_" || w == "()") return;
        expect(!w.empty(), id() + ": the empty word is written ()");
        validate_word(w, w);
    }

    void validate_word(const std::string& w, const std::string& shown) const {
        for (size_t i = 0; i < w.size(); ++i) {
            expect(w[i] == '0' || w[i] == '1',
                   id() + ": unexpected character in '" + shown + "'");
            expect(i == 0 || !(w[i] == '1' && w[i - 1] == '1'),
                   id() + ": '" + shown + "' contains 11");
        }
    }
};

// Words over {T,M,B} with B,M on odd positions, T,M on even positions and no
// MM factor, plus a point "_"; the empty word is written "()".  m1 appends
// one letter, m2 two letters ending in M.  norm: _ -> 1, word -> length + 2.
class GlassFamily final : public Family {
public:
    GlassFamily()
        : Family("fib.glass", "parity-constrained TMB words", class_fibonacci(),
                 FamilyTier::tier2, 1, "_ | () | word over {T,M,B}, odd pos B/M, even pos T/M") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return "_"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        const std::string& w = children[0];
        if (w == "_") return map_index == 1 ? "()" : "M";
        std::string word = w == "()" ? "" : w;
        validate_word(word, w);
        bool even_len = word.size() % 2 == 0;
        if (map_index == 1) return word + (even_len ? "B" : "T");
        return word + (even_len ? "BM" : "TM");
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj == "_") return FactorResult::irreducible();
        if (obj == "()") return FactorResult::via(1, {"_"});
        if (obj == "M") return FactorResult::via(2, {"_"});
        if (obj.back() == 'M') {
            expect(obj.size() >= 2, id() + ": '" + obj + "' does not factor");
            std::string rest = obj.substr(0, obj.size() - 2);
            return FactorResult::via(2, {rest.empty() ? "()" : rest});
        }
        std::string rest = obj.substr(0, obj.size() - 1);
        return FactorResult::via(1, {rest.empty() ? "()" : rest});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        if (obj == "_") return 1;
        if (obj == "()") return 2;
        return static_cast<long long>(obj.size()) + 2;
    }

private:
    void validate(const std::string& w) const {
        if (w == "_" || w == "()") return;
        expect(!w.empty(), id() + ": the empty word is written ()");
        validate_word(w, w);
    }

    void validate_word(const std::string& w, const std::string& shown) const {
        for (size_t i = 0; i < w.size(); ++i) {
            char c = w[i];
            bool odd_pos = i % 2 == 0;  // 1-based position i+1
            expect(odd_pos ? (c == 'B' || c == 'M') : (c == 'T' || c == 'M'),
                   id() + ": letter '" + std::string(1, c) + "' violates parity in '" + shown +
                       "'");
            expect(i == 0 || !(c == 'M' && w[i - 1] == 'M'),
                   id() + ": MM factor in '" + shown + "'");
        }
    }
};

// Subsets of {1..n} without consecutive elements, written "n:{a,b}", plus a
// point "_".  m1 grows the ground set by one, m2 by two adding the new top.
// norm: _ -> 1, (n,S) -> n + 2.
class SparseSubsetFamily final : public Family {
public:
    SparseSubsetFamily()
        : Family("fib.subsets", "subsets without consecutive elements", class_fibonacci(),
                 FamilyTier::tier1, 1, "_ | N:{a,b,...} sparse subset of 1..N") {}

    std::string canonicalize(const std::string& text) const override {
        if (text == "_") return text;
        auto [n, set] = parse(text);
        return print(n, set);
    }

    std::string generator(int) const override { return "_"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        const std::string& w = children[0];
        if (w == "_") return map_index == 1 ? "0:{}" : "1:{1}";
        auto [n, set] = parse(w);
        if (map_index == 1) return print(n + 1, set);
        set.push_back(n + 2);
        return print(n + 2, set);
    }

    FactorResult factor(const std::string& obj) const override {
        if (obj == "_") return FactorResult::irreducible();
        auto [n, set] = parse(obj);
        if (n == 0) return FactorResult::via(1, {"_"});
        if (n == 1 && !set.empty()) return FactorResult::via(2, {"_"});
        if (!set.empty() && set.back() == n) {
            set.pop_back();
            return FactorResult::via(2, {print(n - 2, set)});
        }
        return FactorResult::via(1, {print(n - 1, set)});
    }

    long long norm(const std::string& obj) const override {
        if (obj == "_") return 1;
        return parse(obj).first + 2;
    }

private:
    std::pair<long long, std::vector<long long>> parse(const std::string& text) const {
        size_t colon = text.find(':');
        expect(colon != std::string::npos, id() + ": missing ':' in '" + text + "'");
        long long n = parse_ll(text.substr(0, colon), id());
        std::string rest = text.substr(colon + 1);
        expect(rest.size() >= 2 && rest.front() == '{' && rest.back() == '}',
               id() + ": missing braces in '" + text + "'");
        std::string body = rest.substr(1, rest.size() - 2);
        std::vector<long long> set;
        if (!body.empty())
            for (const auto& piece : split(body, ',')) set.push_back(parse_ll(piece, id()));
        for (size_t i = 0; i < set.size(); ++i) {
            expect(set[i] >= 1 && set[i] <= n, id() + ": element out of range in '" + text + "'");
            expect(i == 0 || set[i] > set[i - 1] + 1,
                   id() + ": elements must be increasing and non-consecutive in '" + text + "'");
        }
        return {n, set};
    }

    std::string print(long long n, const std::vector<long long>& set) const {
        std::vector<std::string> out;
        out.reserve(set.size());
        for (long long v : set) out.push_back(std::to_string(v));
        return std::to_string(n) + ":{" + join(out, ',') + "}";
    }
};

}  // namespace

namespace detail {

void add_fibonacci_families(std::vector<FamilyPtr>& out) {
    out.push_back(std::make_shared<SuffixWordFamily>(
        "fib.tilings", "strip tilings by squares and dominoes", '1', '2',
        "word over {1,2}"));
    out.push_back(std::make_shared<SuffixWordFamily>(
        "fib.matchings", "matchings of a path graph", '-', '=',
        "word over {-,=}", FamilyTier::tier2));
    out.push_back(std::make_shared<SuffixWordFamily>(
        "fib.ladder", "perfect matchings of a ladder graph", '|', '=',
        "word over {|,=}", FamilyTier::tier2));
    out.push_back(std::make_shared<CompNo1Family>());
    out.push_back(std::make_shared<CompLe2Family>());
    out.push_back(std::make_shared<CompOddFamily>());
    out.push_back(std::make_shared<OddRunsFamily>());
    out.push_back(std::make_shared<PermutationFamily>());
    out.push_back(std::make_shared<NoElevenFamily>());
    out.push_back(std::make_shared<GlassFamily>());
    out.push_back(std::make_shared<SparseSubsetFamily>());
}

}  // namespace detail
}  // namespace magma
