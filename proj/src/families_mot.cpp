#include <string>
#include <utility>
#include <vector>

#include "family_util.hpp"
#include "magma/family.hpp"

// Motzkin-class families: signature (1,2), map offsets (1,1), one generator
// of norm 1.

namespace magma {
namespace {

using detail::expect;
using detail::join;
using detail::parse_ll;
using detail::PNode;
using detail::parse_ptree;
using detail::print_ptree;
using detail::split;
using detail::split_groups;

// Motzkin paths over {U,H,D}; m1 appends H, m2 wraps-and-appends U..D.
// norm = length + 1.
class MotzkinPathFamily final : public Family {
public:
    MotzkinPathFamily()
        : Family("mot.paths", "Motzkin paths", class_motzkin(), FamilyTier::tier1, 1,
                 "word over {U,H,D}, balanced, nonnegative") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return children[0] + "H";
        return children[0] + "U" + children[1] + "D";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj.empty()) return FactorResult::irreducible();
        if (obj.back() == 'H') return FactorResult::via(1, {obj.substr(0, obj.size() - 1)});
        expect(obj.back() == 'D', id() + ": '" + obj + "' does not factor");
        size_t i = match_of_last_down(obj);
        return FactorResult::via(
            2, {obj.substr(0, i), obj.substr(i + 1, obj.size() - i - 2)});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        return static_cast<long long>(obj.size()) + 1;
    }

private:
    void validate(const std::string& w) const {
        long long h = 0;
        for (char c : w) {
            if (c == 'U')
                ++h;
            else if (c == 'D')
                --h;
            else
                expect(c == 'H', id() + ": unexpected character in '" + w + "'");
            expect(h >= 0, id() + ": path dips below zero in '" + w + "'");
        }
        expect(h == 0, id() + ": path does not return to zero in '" + w + "'");
    }

    static size_t match_of_last_down(const std::string& w) {
        int depth = 0;
        for (size_t i = w.size(); i-- > 0;) {
            if (w[i] == 'D') ++depth;
            if (w[i] == 'U' && --depth == 0) return i;
        }
        return std::string::npos;
    }
};

// Non-crossing partial matchings of n points on a line, "n:(a,b)(c,d)".
// m1 prepends an isolated point; m2 adds a chord from the new first point.
// norm = points + 1.
class ChordFamily final : public Family {
public:
    ChordFamily()
        : Family("mot.chords", "non-crossing partial matchings", class_motzkin(),
                 FamilyTier::tier1, 1, "N:(a,b)(c,d)... chords sorted by first endpoint") {}

    std::string canonicalize(const std::string& text) const override {
        auto [n, chords] = parse(text);
        return print(n, chords);
    }

    std::string generator(int) const override { return "0:"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) {
            auto [n, chords] = parse(children[0]);
            for (auto& c : chords) {
                c.first += 1;
                c.second += 1;
            }
            return print(n + 1, chords);
        }
        auto [n1, chords1] = parse(children[0]);
        auto [n2, chords2] = parse(children[1]);
        long long n = n1 + n2 + 2;
        std::vector<std::pair<long long, long long>> chords;
        chords.push_back({1, n2 + 2});
        for (auto c : chords2) chords.push_back({c.first + 1, c.second + 1});
        for (auto c : chords1) chords.push_back({c.first + n2 + 2, c.second + n2 + 2});
        return print(n, chords);
    }

    FactorResult factor(const std::string& obj) const override {
        auto [n, chords] = parse(obj);
        if (n == 0) return FactorResult::irreducible();
        long long j = 0;
        for (auto c : chords)
            if (c.first == 1) j = c.second;
        if (j == 0) {
            std::vector<std::pair<long long, long long>> inner;
            for (auto c : chords) inner.push_back({c.first - 1, c.second - 1});
            return FactorResult::via(1, {print(n - 1, inner)});
        }
        std::vector<std::pair<long long, long long>> p2, p1;
        for (auto c : chords) {
            if (c.first == 1) continue;
            if (c.second < j)
                p2.push_back({c.first - 1, c.second - 1});
            else {
                expect(c.first > j, id() + ": crossing chord in '" + obj + "'");
                p1.push_back({c.first - j, c.second - j});
            }
        }
        return FactorResult::via(2, {print(n - j, p1), print(j - 2, p2)});
    }

    long long norm(const std::string& obj) const override { return parse(obj).first + 1; }

private:
    std::pair<long long, std::vector<std::pair<long long, long long>>> parse(
        const std::string& text) const {
        size_t colon = text.find(':');
        expect(colon != std::string::npos, id() + ": missing ':' in '" + text + "'");
        long long n = parse_ll(text.substr(0, colon), id());
        std::vector<std::pair<long long, long long>> chords;
        size_t pos = colon + 1;
        while (pos < text.size()) {
            expect(text[pos] == '(', id() + ": expected '(' in '" + text + "'");
            size_t close = text.find(')', pos);
            expect(close != std::string::npos, id() + ": unterminated chord in '" + text + "'");
            auto parts = split(text.substr(pos + 1, close - pos - 1), ',');
            expect(parts.size() == 2, id() + ": chord needs two endpoints in '" + text + "'");
            long long a = parse_ll(parts[0], id());
            long long b = parse_ll(parts[1], id());
            expect(1 <= a && a < b && b <= n, id() + ": bad chord endpoints in '" + text + "'");
            chords.push_back({a, b});
            pos = close + 1;
        }
        std::sort(chords.begin(), chords.end());
        std::vector<bool> used(static_cast<size_t>(n) + 1, false);
        for (auto c : chords) {
            expect(!used[c.first] && !used[c.second],
                   id() + ": repeated endpoint in '" + text + "'");
            used[c.first] = used[c.second] = true;
        }
        for (size_t i = 0; i < chords.size(); ++i)
            for (size_t k = i + 1; k < chords.size(); ++k)
                expect(!(chords[i].first < chords[k].first && chords[k].first < chords[i].second &&
                         chords[i].second < chords[k].second),
                       id() + ": crossing chords in '" + text + "'");
        return {n, chords};
    }

    std::string print(long long n, std::vector<std::pair<long long, long long>> chords) const {
        std::sort(chords.begin(), chords.end());
        std::string out = std::to_string(n) + ":";
        for (auto c : chords)
            out += "(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")";
        return out;
    }
};

// Unary-binary plane trees; norm = number of nodes.
class MotzkinTreeFamily final : public Family {
public:
    MotzkinTreeFamily()
        : Family("mot.trees", "unary-binary plane trees", class_motzkin(), FamilyTier::tier1, 1,
                 "T := o | (T) | (T,T)") {}

    std::string canonicalize(const std::string& text) const override {
        PNode t = parse_ptree(text, id());
        validate(t);
        return print_ptree(t);
    }

    std::string generator(int) const override { return "o"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return "(" + children[0] + ")";
        return "(" + children[0] + "," + children[1] + ")";
    }

    FactorResult factor(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        if (t.leaf) return FactorResult::irreducible();
        if (t.children.size() == 1) return FactorResult::via(1, {print_ptree(t.children[0])});
        return FactorResult::via(2, {print_ptree(t.children[0]), print_ptree(t.children[1])});
    }

    long long norm(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        return count_nodes(t);
    }

private:
    void validate(const PNode& t) const {
        if (t.leaf) return;
        expect(t.children.size() <= 2, id() + ": node with more than two children");
        for (const auto& c : t.children) validate(c);
    }

    static long long count_nodes(const PNode& t) {
        long long n = 1;
        for (const auto& c : t.children) n += count_nodes(c);
        return n;
    }
};

// Bushes: plane trees whose non-root internal nodes have >= 2 children and
// whose root has >= 1.  norm = number of edges.
class BushFamily final : public Family {
public:
    BushFamily()
        : Family("mot.bushes", "bushes (no non-root unary nodes)", class_motzkin(),
                 FamilyTier::tier2, 1, "plane tree, root >= 1 child, inner nodes >= 2") {}

    std::string canonicalize(const std::string& text) const override {
        PNode t = parse_ptree(text, id());
        validate(t);
        return print_ptree(t);
    }

    std::string generator(int) const override { return "(o)"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        PNode t1 = parse_ptree(children[0], id());
        expect(!t1.leaf && !t1.children.empty(), id() + ": bad first argument");
        if (map_index == 1) {
            t1.children.push_back(PNode{});
            return print_ptree(t1);
        }
        PNode t2 = parse_ptree(children[1], id());
        expect(!t2.leaf && !t2.children.empty(), id() + ": bad second argument");
        if (t2.children.size() == 1) {
            t1.children.push_back(t2.children[0]);
            PNode root;
            root.leaf = false;
            root.children.push_back(std::move(t1));
            return print_ptree(root);
        }
        t1.children.push_back(std::move(t2));
        return print_ptree(t1);
    }

    FactorResult factor(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        if (obj == "(o)") return FactorResult::irreducible();
        if (t.children.size() == 1) {
            PNode v = std::move(t.children[0]);
            expect(!v.leaf && v.children.size() >= 2,
                   id() + ": '" + obj + "' does not factor");
            PNode w = std::move(v.children.back());
            v.children.pop_back();
            PNode t2;
            t2.leaf = false;
            t2.children.push_back(std::move(w));
            return FactorResult::via(2, {print_ptree(v), print_ptree(t2)});
        }
        PNode last = std::move(t.children.back());
        t.children.pop_back();
        if (last.leaf) return FactorResult::via(1, {print_ptree(t)});
        return FactorResult::via(2, {print_ptree(t), print_ptree(last)});
    }

    long long norm(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        return count_nodes(t) - 1;
    }

private:
    void validate(const PNode& t) const {
        expect(!t.leaf && !t.children.empty(), id() + ": root must be internal");
        for (const auto& c : t.children) validate_inner(c);
    }

    void validate_inner(const PNode& t) const {
        if (t.leaf) return;
        expect(t.children.size() >= 2, id() + ": non-root unary node");
        for (const auto& c : t.children) validate_inner(c);
    }

    static long long count_nodes(const PNode& t) {
        long long n = 1;
        for (const auto& c : t.children) n += count_nodes(c);
        return n;
    }
};

// shared scanning helpers for Dyck-word families
long long dyck_validate(const std::string& w, const std::string& who) {
    long long h = 0;
    for (char c : w) {
        if (c == 'U')
            ++h;
        else if (c == 'D')
            --h;
        else
            detail::expect(false, who + ": unexpected character in '" + w + "'");
        detail::expect(h >= 0, who + ": path dips below zero in '" + w + "'");
    }
    detail::expect(h == 0, who + ": path does not return to zero in '" + w + "'");
    return h;
}

size_t dyck_match_of_last(const std::string& w) {
    int depth = 0;
    for (size_t i = w.size(); i-- > 0;) {
        if (w[i] == 'D') ++depth;
        if (w[i] == 'U' && --depth == 0) return i;
    }
    return std::string::npos;
}

size_t dyck_match_of_first(const std::string& w) {
    int depth = 0;
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 'U') ++depth;
        if (w[i] == 'D' && --depth == 0) return i;
    }
    return std::string::npos;
}

// Dyck paths avoiding UUU; m1 appends UD, m2 inserts UUD..D.
// norm = semilength + 1.
class DyckUUUFamily final : public Family {
public:
    DyckUUUFamily()
        : Family("mot.dyck-uuu", "Dyck paths avoiding UUU", class_motzkin(), FamilyTier::tier2, 1,
                 "Dyck word over {U,D} without UUU") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return children[0] + "UD";
        return children[0] + "UUD" + children[1] + "D";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj.empty()) return FactorResult::irreducible();
        size_t i = dyck_match_of_last(obj);
        if (i == obj.size() - 2) return FactorResult::via(1, {obj.substr(0, i)});
        expect(obj[i + 1] == 'U' && obj[i + 2] == 'D',
               id() + ": '" + obj + "' does not factor");
        return FactorResult::via(
            2, {obj.substr(0, i), obj.substr(i + 3, obj.size() - i - 4)});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        return static_cast<long long>(obj.size()) / 2 + 1;
    }

private:
    void validate(const std::string& w) const {
        dyck_validate(w, id());
        expect(w.find("UUU") == std::string::npos, id() + ": UUU factor in '" + w + "'");
    }
};

// Nonempty Dyck paths avoiding UDU; m1 wraps, m2 wraps the first argument and
// appends the second.  norm = semilength.
class DyckUDUFamily final : public Family {
public:
    DyckUDUFamily()
        : Family("mot.dyck-udu", "Dyck paths avoiding UDU", class_motzkin(), FamilyTier::tier1, 1,
                 "nonempty Dyck word over {U,D} without UDU") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return "UD"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return "U" + children[0] + "D";
        return "U" + children[0] + "D" + children[1];
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj == "UD") return FactorResult::irreducible();
        size_t j = dyck_match_of_first(obj);
        if (j == obj.size() - 1) return FactorResult::via(1, {obj.substr(1, obj.size() - 2)});
        return FactorResult::via(2, {obj.substr(1, j - 1), obj.substr(j + 1)});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        return static_cast<long long>(obj.size()) / 2;
    }

private:
    void validate(const std::string& w) const {
        expect(!w.empty(), id() + ": objects are nonempty");
        dyck_validate(w, id());
        expect(w.find("UDU") == std::string::npos, id() + ": UDU factor in '" + w + "'");
    }
};

// Single-group bracket words in which every group encloses at most two
// top-level groups.  norm = number of bracket pairs.
class BracketFamily final : public Family {
public:
    BracketFamily()
        : Family("mot.brackets", "brackets enclosing at most two groups", class_motzkin(),
                 FamilyTier::tier1, 1, "B := [] | [B] | [BB]") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return "[]"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return "[" + children[0] + "]";
        return "[" + children[0] + children[1] + "]";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj == "[]") return FactorResult::irreducible();
        std::string content = obj.substr(1, obj.size() - 2);
        auto groups = split_groups(content, '[', ']', id());
        if (groups.size() == 1) return FactorResult::via(1, {groups[0]});
        return FactorResult::via(2, {groups[0], groups[1]});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        return static_cast<long long>(obj.size()) / 2;
    }

private:
    void validate(const std::string& w) const {
        auto top = split_groups(w, '[', ']', id());
        expect(top.size() == 1 && top[0] == w, id() + ": '" + w + "' is not a single group");
        check_groups(w);
    }

    void check_groups(const std::string& g) const {
        std::string content = g.substr(1, g.size() - 2);
        auto groups = split_groups(content, '[', ']', id());
        expect(groups.size() <= 2, id() + ": group with more than two children in '" + g + "'");
        for (const auto& sub : groups) check_groups(sub);
    }
};

// Dyck paths whose valleys all occur at even height; m1 appends UD,
// m2 inserts UU..DD.  norm = semilength + 1.
class DyckEvenValleyFamily final : public Family {
public:
    DyckEvenValleyFamily()
        : Family("mot.dyck-evenvalley", "Dyck paths with valleys at even height", class_motzkin(),
                 FamilyTier::tier2, 1, "Dyck word, every DU at even height") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return children[0] + "UD";
        return children[0] + "UU" + children[1] + "DD";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj.empty()) return FactorResult::irreducible();
        size_t i = dyck_match_of_last(obj);
        if (i == obj.size() - 2) return FactorResult::via(1, {obj.substr(0, i)});
        expect(obj[i + 1] == 'U' && obj[obj.size() - 2] == 'D',
               id() + ": '" + obj + "' does not factor");
        return FactorResult::via(
            2, {obj.substr(0, i), obj.substr(i + 2, obj.size() - i - 4)});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        return static_cast<long long>(obj.size()) / 2 + 1;
    }

private:
    void validate(const std::string& w) const {
        dyck_validate(w, id());
        long long h = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            h += w[i] == 'U' ? 1 : -1;
            if (w[i] == 'D' && i + 1 < w.size() && w[i + 1] == 'U')
                expect(h % 2 == 0, id() + ": valley at odd height in '" + w + "'");
        }
    }
};

// RNA-style bracket words: m1 appends a pair, m2 nests or prefixes depending
// on whether its first argument is a single group.  norm = pairs.
class RnaFamily final : public Family {
public:
    RnaFamily()
        : Family("mot.rna", "RNA-style bracket words", class_motzkin(), FamilyTier::tier2, 1,
                 "balanced word over {[,]}") {}

    std::string canonicalize(const std::string& text) const override {
        expect(!text.empty(), id() + ": objects are nonempty");
        split_groups(text, '[', ']', id());
        validate_recursive(text);
        return text;
    }

    std::string generator(int) const override { return "[]"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return children[0] + "[]";
        const std::string& w1 = children[0];
        const std::string& w2 = children[1];
        if (split_groups(w1, '[', ']', id()).size() == 1) return "[" + w2 + w1 + "]";
        return w2 + "[" + w1 + "]";
    }

    FactorResult factor(const std::string& obj) const override {
        auto groups = split_groups(obj, '[', ']', id());
        expect(!groups.empty(), id() + ": objects are nonempty");
        if (obj == "[]") return FactorResult::irreducible();
        if (groups.size() >= 2) {
            const std::string& last = groups.back();
            std::string rest = obj.substr(0, obj.size() - last.size());
            if (last == "[]") return FactorResult::via(1, {rest});
            std::string c = last.substr(1, last.size() - 2);
            expect(split_groups(c, '[', ']', id()).size() >= 2,
                   id() + ": '" + obj + "' does not factor");
            return FactorResult::via(2, {c, rest});
        }
        std::string c = obj.substr(1, obj.size() - 2);
        auto inner = split_groups(c, '[', ']', id());
        expect(inner.size() >= 2, id() + ": '" + obj + "' does not factor");
        const std::string& w1 = inner.back();
        std::string w2 = c.substr(0, c.size() - w1.size());
        return FactorResult::via(2, {w1, w2});
    }

    long long norm(const std::string& obj) const override {
        split_groups(obj, '[', ']', id());
        return static_cast<long long>(obj.size()) / 2;
    }
};

}  // namespace

namespace detail {

void add_motzkin_families(std::vector<FamilyPtr>& out) {
    out.push_back(std::make_shared<MotzkinPathFamily>());
    out.push_back(std::make_shared<ChordFamily>());
    out.push_back(std::make_shared<MotzkinTreeFamily>());
    out.push_back(std::make_shared<BushFamily>());
    out.push_back(std::make_shared<DyckUUUFamily>());
    out.push_back(std::make_shared<DyckUDUFamily>());
    out.push_back(std::make_shared<BracketFamily>());
    out.push_back(std::make_shared<DyckEvenValleyFamily>());
    out.push_back(std::make_shared<RnaFamily>());
}

}  // namespace detail
}  // namespace magma
