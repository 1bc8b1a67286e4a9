#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "family_util.hpp"
#include "magma/family.hpp"

// Fuss-Catalan-class families: signature (3), map offset (0), one generator
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

// Ternary trees.  norm = #leaves.
class TernaryTreeFamily final : public Family {
public:
    TernaryTreeFamily()
        : Family("fc.ternary-trees", "ternary trees", class_fuss_catalan(), FamilyTier::tier1,
                 1, "T := o | (T,T,T)") {}

    std::string canonicalize(const std::string& text) const override {
        PNode t = parse_ptree(text, id());
        validate(t);
        return print_ptree(t);
    }

    std::string generator(int) const override { return "o"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        return "(" + children[0] + "," + children[1] + "," + children[2] + ")";
    }

    FactorResult factor(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        if (t.leaf) return FactorResult::irreducible();
        return FactorResult::via(1, {print_ptree(t.children[0]), print_ptree(t.children[1]),
                                     print_ptree(t.children[2])});
    }

    long long norm(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        return leaves(t);
    }

private:
    void validate(const PNode& t) const {
        if (t.leaf) return;
        expect(t.children.size() == 3, id() + ": internal nodes need three children");
        for (const auto& c : t.children) validate(c);
    }

    static long long leaves(const PNode& t) {
        if (t.leaf) return 1;
        long long n = 0;
        for (const auto& c : t.children) n += leaves(c);
        return n;
    }
};

// Plane trees with even out-degrees.  norm = #nodes.
class EvenTreeFamily final : public Family {
public:
    EvenTreeFamily()
        : Family("fc.even-trees", "plane trees with even branching", class_fuss_catalan(),
                 FamilyTier::tier2, 1, "plane tree, every out-degree even") {}

    std::string canonicalize(const std::string& text) const override {
        PNode t = parse_ptree(text, id());
        validate(t);
        return print_ptree(t);
    }

    std::string generator(int) const override { return "o"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        PNode t1 = parse_ptree(children[0], id());
        PNode t2 = parse_ptree(children[1], id());
        PNode t3 = parse_ptree(children[2], id());
        validate(t1);
        validate(t2);
        validate(t3);
        PNode root;
        root.leaf = false;
        root.children.push_back(t1);
        if (!t2.leaf)
            for (const auto& c : t2.children) root.children.push_back(c);
        root.children.push_back(t3);
        return print_ptree(root);
    }

    FactorResult factor(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        if (t.leaf) return FactorResult::irreducible();
        size_t k = t.children.size();
        PNode mid;
        if (k > 2) {
            mid.leaf = false;
            mid.children.assign(t.children.begin() + 1, t.children.end() - 1);
        }
        return FactorResult::via(1, {print_ptree(t.children[0]), print_ptree(mid),
                                     print_ptree(t.children[k - 1])});
    }

    long long norm(const std::string& obj) const override {
        PNode t = parse_ptree(obj, id());
        validate(t);
        return nodes(t);
    }

private:
    void validate(const PNode& t) const {
        if (t.leaf) return;
        expect(t.children.size() % 2 == 0, id() + ": odd out-degree");
        for (const auto& c : t.children) validate(c);
    }

    static long long nodes(const PNode& t) {
        long long n = 1;
        for (const auto& c : t.children) n += nodes(c);
        return n;
    }
};

// Non-crossing partitions of [1..2m] into even blocks, "2m:{..}{..}".
// norm = points + 1.
class EvenPartitionFamily final : public Family {
public:
    EvenPartitionFamily()
        : Family("fc.partitions", "non-crossing even partitions", class_fuss_catalan(),
                 FamilyTier::tier1, 1, "n:{a,b,..}{..} blocks of even size") {}

    std::string canonicalize(const std::string& text) const override {
        auto [n, blocks] = parse(text);
        return print(n, blocks);
    }

    std::string generator(int) const override { return "0:"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        auto [s1, b1] = parse(children[0]);
        auto [s2, b2] = parse(children[1]);
        auto [s3, b3] = parse(children[2]);
        long long a = s1 + 1, b = s1 + s2 + 2;
        std::vector<std::vector<long long>> blocks = b1;
        bool joined = false;
        for (auto& blk : blocks)
            if (blk[0] == 1) {
                blk.push_back(a);
                blk.push_back(b);
                joined = true;
            }
        if (!joined) blocks.push_back({a, b});
        for (const auto& blk : b2) {
            std::vector<long long> shifted;
            for (long long v : blk) shifted.push_back(v + a);
            blocks.push_back(shifted);
        }
        for (const auto& blk : b3) {
            std::vector<long long> shifted;
            for (long long v : blk) shifted.push_back(v + b);
            blocks.push_back(shifted);
        }
        return print(s1 + s2 + s3 + 2, blocks);
    }

    FactorResult factor(const std::string& obj) const override {
        auto [n, blocks] = parse(obj);
        if (n == 0) return FactorResult::irreducible();
        std::vector<long long> B;
        for (const auto& blk : blocks)
            if (blk[0] == 1) B = blk;
        expect(!B.empty(), id() + ": '" + obj + "' does not factor");
        long long b = B[B.size() - 1], a = B[B.size() - 2];
        expect(a % 2 == 1 && (b - a) % 2 == 1, id() + ": '" + obj + "' does not factor");
        std::vector<std::vector<long long>> p1, p2, p3;
        if (B.size() > 2) {
            std::vector<long long> core(B.begin(), B.end() - 2);
            expect(core.back() < a, id() + ": '" + obj + "' does not factor");
            p1.push_back(core);
        }
        for (const auto& blk : blocks) {
            if (blk[0] == 1) continue;
            if (blk.back() < a) {
                p1.push_back(blk);
            } else if (blk[0] > a && blk.back() < b) {
                std::vector<long long> shifted;
                for (long long v : blk) shifted.push_back(v - a);
                p2.push_back(shifted);
            } else {
                expect(blk[0] > b, id() + ": '" + obj + "' does not factor");
                std::vector<long long> shifted;
                for (long long v : blk) shifted.push_back(v - b);
                p3.push_back(shifted);
            }
        }
        FactorResult result = FactorResult::via(
            1, {print(a - 1, p1), print(b - a - 1, p2), print(n - b, p3)});
        expect(apply(1, result.children) == obj, id() + ": '" + obj + "' does not factor");
        return result;
    }

    long long norm(const std::string& obj) const override { return parse(obj).first + 1; }

private:
    std::pair<long long, std::vector<std::vector<long long>>> parse(
        const std::string& text) const {
        if (text.empty()) return {0, {}};  // accepted alias for "0:"
        size_t colon = text.find(':');
        expect(colon != std::string::npos, id() + ": missing ':' in '" + text + "'");
        long long n = parse_ll(text.substr(0, colon), id());
        std::vector<std::vector<long long>> blocks;
        size_t pos = colon + 1;
        while (pos < text.size()) {
            expect(text[pos] == '{', id() + ": expected '{' in '" + text + "'");
            size_t close = text.find('}', pos);
            expect(close != std::string::npos, id() + ": unterminated block");
            std::vector<long long> blk;
            for (const auto& item : split(text.substr(pos + 1, close - pos - 1), ','))
                blk.push_back(parse_ll(item, id()));
            std::sort(blk.begin(), blk.end());
            expect(!blk.empty() && blk.size() % 2 == 0,
                   id() + ": blocks must have even size in '" + text + "'");
            blocks.push_back(blk);
            pos = close + 1;
        }
        std::vector<size_t> owner(static_cast<size_t>(n) + 1, blocks.size());
        long long total = 0;
        for (size_t b = 0; b < blocks.size(); ++b)
            for (long long v : blocks[b]) {
                expect(v >= 1 && v <= n && owner[static_cast<size_t>(v)] == blocks.size(),
                       id() + ": not a partition of the point set in '" + text + "'");
                owner[static_cast<size_t>(v)] = b;
                ++total;
            }
        expect(total == n, id() + ": not a partition of the point set in '" + text + "'");
        // non-crossing <=> each block's visits are consecutive at its nesting level
        std::vector<size_t> remaining(blocks.size());
        for (size_t b = 0; b < blocks.size(); ++b) remaining[b] = blocks[b].size();
        std::vector<size_t> open;
        for (long long q = 1; q <= n; ++q) {
            size_t b = owner[static_cast<size_t>(q)];
            if (open.empty() || open.back() != b) {
                expect(remaining[b] == blocks[b].size(),
                       id() + ": crossing blocks in '" + text + "'");
                open.push_back(b);
            }
            if (--remaining[b] == 0) open.pop_back();
        }
        return {n, blocks};
    }

    std::string print(long long n, std::vector<std::vector<long long>> blocks) const {
        for (auto& blk : blocks) std::sort(blk.begin(), blk.end());
        std::sort(blocks.begin(), blocks.end());
        std::string out = std::to_string(n) + ":";
        for (const auto& blk : blocks) {
            out.push_back('{');
            for (size_t i = 0; i < blk.size(); ++i) {
                if (i) out.push_back(',');
                out += std::to_string(blk[i]);
            }
            out.push_back('}');
        }
        return out;
    }
};

// Shared polygon-with-diagonals parsing for the two dissection families.
// Marked side is (V,1); diagonals never cross (shared endpoints allowed).
struct Polygon {
    long long v = 2;
    std::vector<std::pair<long long, long long>> diags;
};

Polygon parse_polygon(const std::string& text, const std::string& who) {
    size_t colon = text.find(':');
    expect(colon != std::string::npos, who + ": missing ':' in '" + text + "'");
    Polygon p;
    p.v = parse_ll(text.substr(0, colon), who);
    expect(p.v >= 2, who + ": polygon too small in '" + text + "'");
    size_t pos = colon + 1;
    while (pos < text.size()) {
        expect(text[pos] == '(', who + ": expected '(' in '" + text + "'");
        size_t close = text.find(')', pos);
        expect(close != std::string::npos, who + ": unterminated diagonal");
        auto parts = split(text.substr(pos + 1, close - pos - 1), ',');
        expect(parts.size() == 2, who + ": diagonal needs two vertices");
        long long a = parse_ll(parts[0], who);
        long long b = parse_ll(parts[1], who);
        expect(1 <= a && a + 2 <= b && b <= p.v && !(a == 1 && b == p.v),
               who + ": bad diagonal (" + parts[0] + "," + parts[1] + ") in '" + text + "'");
        p.diags.push_back({a, b});
        pos = close + 1;
    }
    std::sort(p.diags.begin(), p.diags.end());
    for (size_t i = 0; i + 1 < p.diags.size(); ++i)
        expect(p.diags[i] != p.diags[i + 1], who + ": repeated diagonal in '" + text + "'");
    for (size_t i = 0; i < p.diags.size(); ++i)
        for (size_t j = i + 1; j < p.diags.size(); ++j)
            expect(!(p.diags[i].first < p.diags[j].first &&
                     p.diags[j].first < p.diags[i].second &&
                     p.diags[i].second < p.diags[j].second),
                   who + ": crossing diagonals in '" + text + "'");
    return p;
}

std::string print_polygon(const Polygon& p) {
    auto diags = p.diags;
    std::sort(diags.begin(), diags.end());
    std::string out = std::to_string(p.v) + ":";
    for (auto d : diags)
        out += "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
    return out;
}

// Walks the face bordering the marked side, greedily taking the farthest
// neighbour; returns the corner list 1 = c0 < c1 < ... < cm = V.
std::vector<long long> marked_face(const Polygon& p) {
    std::vector<long long> corners{1};
    long long c = 1;
    while (c != p.v) {
        long long next = c + 1;
        for (auto d : p.diags) {
            if (d.first == c) next = std::max(next, d.second);
        }
        corners.push_back(next);
        c = next;
    }
    return corners;
}

// Dissections of a polygon into quadrilateral cells.  norm = V - 1.
class QuadrillageFamily final : public Family {
public:
    QuadrillageFamily()
        : Family("fc.quadrillages", "quadrillages of a polygon", class_fuss_catalan(),
                 FamilyTier::tier2, 1, "V:(a,b)... quadrilateral cells, marked side (V,1)") {}

    std::string canonicalize(const std::string& text) const override {
        std::string canon = print_polygon(parse_polygon(text, id()));
        validate_recursive(canon);
        return canon;
    }

    std::string generator(int) const override { return "2:"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        Polygon q1 = parse_polygon(children[0], id());
        Polygon q2 = parse_polygon(children[1], id());
        Polygon q3 = parse_polygon(children[2], id());
        long long a = q3.v, b = q3.v + q2.v - 1;
        Polygon out;
        out.v = q1.v + q2.v + q3.v - 2;
        for (auto d : q3.diags) out.diags.push_back(d);
        if (q3.v > 2) out.diags.push_back({1, a});
        for (auto d : q2.diags) out.diags.push_back({d.first + a - 1, d.second + a - 1});
        if (q2.v > 2) out.diags.push_back({a, b});
        for (auto d : q1.diags) out.diags.push_back({d.first + b - 1, d.second + b - 1});
        if (q1.v > 2) out.diags.push_back({b, out.v});
        return print_polygon(out);
    }

    FactorResult factor(const std::string& obj) const override {
        Polygon p = parse_polygon(obj, id());
        if (p.v == 2) return FactorResult::irreducible();
        auto corners = marked_face(p);
        expect(corners.size() == 4, id() + ": '" + obj + "' does not factor");
        long long x = corners[1], y = corners[2];
        Polygon q3{x, {}}, q2{y - x + 1, {}}, q1{p.v - y + 1, {}};
        for (auto d : p.diags) {
            if (d.first == 1 && d.second == x && x > 2) continue;
            if (d.first == x && d.second == y && y > x + 1) continue;
            if (d.first == y && d.second == p.v && p.v > y + 1) continue;
            if (d.second <= x)
                q3.diags.push_back(d);
            else if (d.first >= x && d.second <= y)
                q2.diags.push_back({d.first - x + 1, d.second - x + 1});
            else {
                expect(d.first >= y, id() + ": '" + obj + "' does not factor");
                q1.diags.push_back({d.first - y + 1, d.second - y + 1});
            }
        }
        FactorResult result = FactorResult::via(
            1, {print_polygon(q1), print_polygon(q2), print_polygon(q3)});
        expect(apply(1, result.children) == obj, id() + ": '" + obj + "' does not factor");
        return result;
    }

    long long norm(const std::string& obj) const override {
        return parse_polygon(obj, id()).v - 1;
    }
};

// Dissections of a polygon into odd-sided cells; the marked side opens up
// when glued as a first argument.  norm = V + #diagonals.
class OddDissectionFamily final : public Family {
public:
    OddDissectionFamily()
        : Family("fc.odd-dissections", "dissections into odd cells", class_fuss_catalan(),
                 FamilyTier::tier2, 1, "V:(a,b)... odd cells, marked side (V,1)") {}

    std::string canonicalize(const std::string& text) const override {
        std::string canon = print_polygon(parse_polygon(text, id()));
        validate_recursive(canon);
        return canon;
    }

    std::string generator(int) const override { return "2:"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        Polygon p1 = parse_polygon(children[0], id());
        Polygon p2 = parse_polygon(children[1], id());
        Polygon p3 = parse_polygon(children[2], id());
        long long x = p3.v, y = p3.v + p2.v - 1;
        Polygon out;
        for (auto d : p3.diags) out.diags.push_back(d);
        if (p3.v > 2) out.diags.push_back({1, x});
        for (auto d : p2.diags) out.diags.push_back({d.first + x - 1, d.second + x - 1});
        if (p2.v > 2) out.diags.push_back({x, y});
        if (p1.v == 2) {
            out.v = y;
        } else {
            out.v = y + p1.v - 1;
            for (auto d : p1.diags)
                out.diags.push_back({d.first + y - 1, d.second + y - 1});
        }
        return print_polygon(out);
    }

    FactorResult factor(const std::string& obj) const override {
        Polygon p = parse_polygon(obj, id());
        if (p.v == 2) return FactorResult::irreducible();
        auto corners = marked_face(p);
        expect(corners.size() >= 3, id() + ": '" + obj + "' does not factor");
        long long x = corners[1], y = corners[2];
        Polygon p3{x, {}}, p2{y - x + 1, {}}, p1{y == p.v ? 2 : p.v - y + 1, {}};
        for (auto d : p.diags) {
            if (d.first == 1 && d.second == x && x > 2) continue;
            if (d.first == x && d.second == y && y > x + 1) continue;
            if (d.second <= x)
                p3.diags.push_back(d);
            else if (d.first >= x && d.second <= y)
                p2.diags.push_back({d.first - x + 1, d.second - x + 1});
            else {
                expect(d.first >= y, id() + ": '" + obj + "' does not factor");
                p1.diags.push_back({d.first - y + 1, d.second - y + 1});
            }
        }
        FactorResult result = FactorResult::via(
            1, {print_polygon(p1), print_polygon(p2), print_polygon(p3)});
        expect(apply(1, result.children) == obj, id() + ": '" + obj + "' does not factor");
        return result;
    }

    long long norm(const std::string& obj) const override {
        Polygon p = parse_polygon(obj, id());
        if (p.v == 2) return 1;
        return p.v + static_cast<long long>(p.diags.size());
    }
};

// Lattice words over {E,N} with h = 2#E - #N staying nonnegative, ending 0.
// norm = 2#E + 1.
class FcLatticeFamily final : public Family {
public:
    FcLatticeFamily()
        : Family("fc.lattice", "lattice paths with double rises", class_fuss_catalan(),
                 FamilyTier::tier1, 1, "word over {E,N}, #N = 2#E, prefixes nonnegative") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        return children[0] + "E" + children[1] + "N" + children[2] + "N";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj.empty()) return FactorResult::irreducible();
        size_t L = obj.size();
        std::vector<long long> h(L + 1, 0);
        for (size_t i = 0; i < L; ++i) h[i + 1] = h[i] + (obj[i] == 'E' ? 2 : -1);
        size_t A = 0;
        for (size_t j = 0; j < L; ++j)
            if (h[j] == 0) A = j;
        expect(obj[A] == 'E' && obj[L - 1] == 'N', id() + ": '" + obj + "' does not factor");
        size_t B = L;
        for (size_t j = A + 2; j <= L; ++j)
            if (h[j] == 1) {
                B = j - 1;
                break;
            }
        expect(B < L && obj[B] == 'N', id() + ": '" + obj + "' does not factor");
        return FactorResult::via(1, {obj.substr(0, A), obj.substr(A + 1, B - A - 1),
                                     obj.substr(B + 1, L - B - 2)});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        long long e = 0;
        for (char c : obj)
            if (c == 'E') ++e;
        return 2 * e + 1;
    }

private:
    void validate(const std::string& w) const {
        long long h = 0;
        for (char c : w) {
            expect(c == 'E' || c == 'N', id() + ": unexpected character in '" + w + "'");
            h += c == 'E' ? 2 : -1;
            expect(h >= 0, id() + ": prefix drops below zero in '" + w + "'");
        }
        expect(h == 0, id() + ": word does not balance in '" + w + "'");
    }
};

// Generalized Dyck words over {u,d} with u = +1, d = -2.  norm = 2#d + 1.
class TwoDyckFamily final : public Family {
public:
    TwoDyckFamily()
        : Family("fc.2dyck", "Dyck words with double falls", class_fuss_catalan(),
                 FamilyTier::tier1, 1, "word over {u,d}, u=+1, d=-2, prefixes nonnegative") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        return children[0] + "u" + children[1] + "u" + children[2] + "d";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj.empty()) return FactorResult::irreducible();
        size_t L = obj.size();
        expect(obj[L - 1] == 'd', id() + ": '" + obj + "' does not factor");
        std::vector<long long> h(L + 1, 0);
        for (size_t i = 0; i < L; ++i) h[i + 1] = h[i] + (obj[i] == 'u' ? 1 : -2);
        size_t kstar = 0;
        for (size_t k = 0; k <= L - 1; ++k)
            if (h[k] <= 1) kstar = k;
        expect(h[kstar] == 1 && obj[kstar] == 'u', id() + ": '" + obj + "' does not factor");
        size_t k0 = 0;
        for (size_t k = 0; k < kstar; ++k)
            if (h[k] == 0) k0 = k;
        expect(obj[k0] == 'u', id() + ": '" + obj + "' does not factor");
        return FactorResult::via(1, {obj.substr(0, k0), obj.substr(k0 + 1, kstar - k0 - 1),
                                     obj.substr(kstar + 1, L - kstar - 2)});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        long long d = 0;
        for (char c : obj)
            if (c == 'd') ++d;
        return 2 * d + 1;
    }

private:
    void validate(const std::string& w) const {
        long long h = 0;
        for (char c : w) {
            expect(c == 'u' || c == 'd', id() + ": unexpected character in '" + w + "'");
            h += c == 'u' ? 1 : -2;
            expect(h >= 0, id() + ": prefix drops below zero in '" + w + "'");
        }
        expect(h == 0, id() + ": word does not balance in '" + w + "'");
    }
};

}  // namespace

namespace detail {

void add_fuss_catalan_families(std::vector<FamilyPtr>& out) {
    out.push_back(std::make_shared<TernaryTreeFamily>());
    out.push_back(std::make_shared<EvenTreeFamily>());
    out.push_back(std::make_shared<EvenPartitionFamily>());
    out.push_back(std::make_shared<QuadrillageFamily>());
    out.push_back(std::make_shared<OddDissectionFamily>());
    out.push_back(std::make_shared<FcLatticeFamily>());
    out.push_back(std::make_shared<TwoDyckFamily>());
}

}  // namespace detail
}  // namespace magma
