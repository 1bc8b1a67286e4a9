#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "family_util.hpp"
#include "magma/family.hpp"

// Schroeder-class families: signature (1,2), map offsets (1,0), one generator
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

// Schroeder paths over {D,E,N} from (0,0) to (k,k) weakly below the diagonal;
// m1 appends a diagonal step, m2 wraps in E..N.  norm = #E + #D + 1.
class SchroederPathFamily final : public Family {
public:
    SchroederPathFamily()
        : Family("sch.paths", "Schroeder paths", class_schroeder(), FamilyTier::tier1, 1,
                 "word over {D,E,N}, balanced, weakly below diagonal") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return children[0] + "D";
        return children[0] + "E" + children[1] + "N";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj.empty()) return FactorResult::irreducible();
        if (obj.back() == 'D') return FactorResult::via(1, {obj.substr(0, obj.size() - 1)});
        expect(obj.back() == 'N', id() + ": '" + obj + "' does not factor");
        int depth = 0;
        for (size_t i = obj.size(); i-- > 0;) {
            if (obj[i] == 'N') ++depth;
            if (obj[i] == 'E' && --depth == 0)
                return FactorResult::via(
                    2, {obj.substr(0, i), obj.substr(i + 1, obj.size() - i - 2)});
        }
        throw ObjectError(id() + ": '" + obj + "' does not factor");
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        long long n = 1;
        for (char c : obj)
            if (c != 'N') ++n;
        return n;
    }

private:
    void validate(const std::string& w) const {
        long long x = 0, y = 0;
        for (char c : w) {
            if (c == 'E')
                ++x;
            else if (c == 'N')
                ++y;
            else if (c == 'D') {
                ++x;
                ++y;
            } else
                expect(false, id() + ": unexpected character in '" + w + "'");
            expect(y <= x, id() + ": path crosses the diagonal in '" + w + "'");
        }
        expect(x == y, id() + ": path does not end on the diagonal in '" + w + "'");
    }
};

// Dyck paths whose peaks each carry one mark from {w,b}; m1 appends UwD,
// m2 appends UbD or wraps its second argument.  norm = #U + 1.
class PeakDyckFamily final : public Family {
public:
    PeakDyckFamily()
        : Family("sch.dyck-peaks", "Dyck paths with marked peaks", class_schroeder(),
                 FamilyTier::tier1, 1, "Dyck word with w/b inside every peak") {}

    std::string canonicalize(const std::string& text) const override {
        validate(text);
        return text;
    }

    std::string generator(int) const override { return ""; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) return children[0] + "UwD";
        if (children[1].empty()) return children[0] + "UbD";
        return children[0] + "U" + children[1] + "D";
    }

    FactorResult factor(const std::string& obj) const override {
        validate(obj);
        if (obj.empty()) return FactorResult::irreducible();
        expect(obj.back() == 'D', id() + ": '" + obj + "' does not factor");
        int depth = 0;
        size_t i = obj.size();
        for (size_t k = obj.size(); k-- > 0;) {
            if (obj[k] == 'D') ++depth;
            if (obj[k] == 'U' && --depth == 0) {
                i = k;
                break;
            }
        }
        expect(i < obj.size(), id() + ": '" + obj + "' does not factor");
        std::string inside = obj.substr(i + 1, obj.size() - i - 2);
        std::string head = obj.substr(0, i);
        if (inside == "w") return FactorResult::via(1, {head});
        if (inside == "b") return FactorResult::via(2, {head, ""});
        return FactorResult::via(2, {head, inside});
    }

    long long norm(const std::string& obj) const override {
        validate(obj);
        long long n = 1;
        for (char c : obj)
            if (c == 'U') ++n;
        return n;
    }

private:
    void validate(const std::string& w) const {
        long long h = 0;
        for (size_t i = 0; i < w.size(); ++i) {
            char c = w[i];
            if (c == 'U') {
                ++h;
                expect(i + 1 < w.size() && w[i + 1] != 'D',
                       id() + ": unmarked peak in '" + w + "'");
            } else if (c == 'D') {
                --h;
                expect(h >= 0, id() + ": path dips below zero in '" + w + "'");
            } else {
                expect(c == 'w' || c == 'b',
                       id() + ": unexpected character in '" + w + "'");
                expect(i > 0 && w[i - 1] == 'U' && i + 1 < w.size() && w[i + 1] == 'D',
                       id() + ": mark outside a peak in '" + w + "'");
            }
        }
        expect(h == 0, id() + ": path does not return to zero in '" + w + "'");
    }
};

// Two-column semistandard tableaux written "L,R;L,R;..." top to bottom; the
// empty tableau is written "()".  norm = rows + 1.
class SsytFamily final : public Family {
public:
    SsytFamily()
        : Family("sch.ssyt", "two-column semistandard tableaux", class_schroeder(),
                 FamilyTier::tier1, 1, "() | rows L,R joined by ';'") {}

    std::string canonicalize(const std::string& text) const override {
        std::string canon = print(parse(text));
        validate_recursive(canon);
        return canon;
    }

    std::string generator(int) const override { return "()"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        auto rows = parse(children[0]);
        long long d = rows.empty() ? 0 : rows.back().second;
        if (map_index == 1) {
            rows.push_back({d + 1, d + 1});
            return print(rows);
        }
        auto block = parse(children[1]);
        if (block.empty()) {
            rows.push_back({d + 1, d + 2});
            return print(rows);
        }
        size_t m = block.size();
        rows.push_back({d + 1, block[0].second + d + 1});
        for (size_t i = 0; i < m; ++i)
            rows.push_back({block[i].first + d + 1,
                            i + 1 < m ? block[i + 1].second + d + 1 : block[m - 1].second + d + 2});
        return print(rows);
    }

    FactorResult factor(const std::string& obj) const override {
        auto rows = parse(obj);
        if (rows.empty()) return FactorResult::irreducible();
        size_t k = rows.size();
        auto head = rows;
        head.pop_back();
        std::string t1 = print(head);
        if (rows[k - 1].first == rows[k - 1].second) {
            expect(apply(1, {t1}) == obj, id() + ": '" + obj + "' does not factor");
            return FactorResult::via(1, {t1});
        }
        if (apply(2, {t1, "()"}) == obj) return FactorResult::via(2, {t1, "()"});
        for (size_t m = 1; m < k; ++m) {
            std::vector<std::pair<long long, long long>> t1_rows(rows.begin(),
                                                                 rows.begin() + (k - 1 - m));
            long long d = t1_rows.empty() ? 0 : t1_rows.back().second;
            std::vector<std::pair<long long, long long>> block(rows.begin() + (k - 1 - m),
                                                               rows.end());
            std::vector<std::pair<long long, long long>> t2;
            bool ok = true;
            for (size_t i = 1; i <= m && ok; ++i) {
                long long L = block[i].first - d - 1;
                long long R = (i == 1 ? block[0].second : block[i - 1].second) - d - 1;
                if (L < 1 || R < 1) ok = false;
                t2.push_back({L, R});
            }
            if (!ok) continue;
            std::string t1s = print(t1_rows), t2s = print(t2);
            try {
                if (apply(2, {t1s, t2s}) == obj) return FactorResult::via(2, {t1s, t2s});
            } catch (const ObjectError&) {
            }
        }
        throw ObjectError(id() + ": '" + obj + "' does not factor");
    }

    long long norm(const std::string& obj) const override {
        return static_cast<long long>(parse(obj).size()) + 1;
    }

private:
    std::vector<std::pair<long long, long long>> parse(const std::string& text) const {
        std::vector<std::pair<long long, long long>> rows;
        if (text == "()") return rows;
        expect(!text.empty(), id() + ": the empty tableau is written ()");
        for (const auto& row : split(text, ';')) {
            auto cells = split(row, ',');
            expect(cells.size() == 2, id() + ": row needs two entries in '" + text + "'");
            long long L = parse_ll(cells[0], id());
            long long R = parse_ll(cells[1], id());
            expect(L >= 1 && L <= R, id() + ": row not weakly increasing in '" + text + "'");
            if (!rows.empty())
                expect(rows.back().first < L && rows.back().second < R,
                       id() + ": columns not strictly increasing in '" + text + "'");
            rows.push_back({L, R});
        }
        return rows;
    }

    std::string print(const std::vector<std::pair<long long, long long>>& rows) const {
        if (rows.empty()) return "()";
        std::vector<std::string> parts;
        parts.reserve(rows.size());
        for (auto r : rows)
            parts.push_back(std::to_string(r.first) + "," + std::to_string(r.second));
        return join(parts, ';');
    }
};

// Diagonal rectangulations: N diagonal points each carrying a vertical or
// horizontal cut "V[lo,hi]" in the square [0,N+1]^2.  norm = N + 1.
class RectangulationFamily final : public Family {
public:
    RectangulationFamily()
        : Family("sch.rectangulations", "diagonal rectangulations", class_schroeder(),
                 FamilyTier::tier2, 1, "N:V[lo,hi];H[lo,hi];... one cut per point") {}

    struct Cut {
        bool vertical = true;
        long long lo = 0, hi = 0;
    };

    std::string canonicalize(const std::string& text) const override {
        auto [n, cuts] = parse(text);
        std::string canon = print(n, cuts);
        validate_recursive(canon);
        return canon;
    }

    std::string generator(int) const override { return "0:"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) {
            auto [n1, p] = parse(children[0]);
            long long n = n1 + 1;
            std::vector<Cut> cuts;
            cuts.push_back({true, 0, n + 1});
            for (const auto& c : p) {
                if (c.vertical)
                    cuts.push_back({true, c.lo == 0 ? 0 : c.lo + 1, c.hi + 1});
                else
                    cuts.push_back({false, c.lo + 1, c.hi + 1});
            }
            return print(n, cuts);
        }
        auto [n1, p1] = parse(children[0]);
        auto [n2, p2] = parse(children[1]);
        long long n = n1 + n2 + 1;
        std::vector<Cut> cuts;
        if (n1 == 0) {
            cuts.push_back({false, 0, n + 1});
            for (const auto& c : p2) {
                if (c.vertical)
                    cuts.push_back({true, c.lo + 1, c.hi + 1});
                else
                    cuts.push_back({false, c.lo == 0 ? 0 : c.lo + 1, c.hi + 1});
            }
            return print(n, cuts);
        }
        bool vertical_fulls = full_orientation(n1, p1);
        long long k = n1 + 1;
        if (!vertical_fulls) {
            // horizontal full cuts in p1: vertical junction
            for (const auto& c : p1) {
                if (c.vertical)
                    cuts.push_back({true, c.lo, c.hi == n1 + 1 ? n + 1 : c.hi});
                else
                    cuts.push_back(c);
            }
            cuts.push_back({true, 0, n + 1});
            for (const auto& c : p2) {
                if (c.vertical)
                    cuts.push_back({true, c.lo == 0 ? 0 : c.lo + k, c.hi + k});
                else
                    cuts.push_back({false, c.lo + k, c.hi + k});
            }
        } else {
            // vertical full cuts in p1: horizontal junction
            for (const auto& c : p1) {
                if (!c.vertical)
                    cuts.push_back({false, c.lo, c.hi == n1 + 1 ? n + 1 : c.hi});
                else
                    cuts.push_back(c);
            }
            cuts.push_back({false, 0, n + 1});
            for (const auto& c : p2) {
                if (!c.vertical)
                    cuts.push_back({false, c.lo == 0 ? 0 : c.lo + k, c.hi + k});
                else
                    cuts.push_back({true, c.lo + k, c.hi + k});
            }
        }
        return print(n, cuts);
    }

    FactorResult factor(const std::string& obj) const override {
        auto [n, cuts] = parse(obj);
        if (n == 0) return FactorResult::irreducible();
        long long firstV = 0, firstH = 0;
        for (long long i = 1; i <= n; ++i) {
            const Cut& c = cuts[i - 1];
            if (c.lo == 0 && c.hi == n + 1) {
                if (c.vertical && firstV == 0) firstV = i;
                if (!c.vertical && firstH == 0) firstH = i;
            }
        }
        expect((firstV == 0) != (firstH == 0),
               id() + ": '" + obj + "' has no unique junction orientation");
        bool vertical = firstV != 0;
        long long k = vertical ? firstV : firstH;
        FactorResult result;
        if (k == 1) {
            std::vector<Cut> child;
            for (long long i = 2; i <= n; ++i) {
                Cut c = cuts[i - 1];
                if (c.vertical == vertical)
                    c.lo = c.lo == 0 ? 0 : c.lo - 1;
                else
                    c.lo -= 1;
                c.hi -= 1;
                child.push_back(c);
            }
            result = vertical ? FactorResult::via(1, {print(n - 1, child)})
                              : FactorResult::via(2, {"0:", print(n - 1, child)});
        } else {
            long long n1 = k - 1;
            std::vector<Cut> p1, p2;
            for (long long i = 1; i < k; ++i) {
                Cut c = cuts[i - 1];
                if (c.vertical == vertical && c.hi == n + 1) c.hi = n1 + 1;
                p1.push_back(c);
            }
            for (long long i = k + 1; i <= n; ++i) {
                Cut c = cuts[i - 1];
                if (c.vertical == vertical)
                    c.lo = c.lo == 0 ? 0 : c.lo - k;
                else
                    c.lo -= k;
                c.hi -= k;
                p2.push_back(c);
            }
            result = FactorResult::via(2, {print(n1, p1), print(n - k, p2)});
        }
        expect(apply(result.map_index, result.children) == obj,
               id() + ": '" + obj + "' does not factor");
        return result;
    }

    long long norm(const std::string& obj) const override { return parse(obj).first + 1; }

private:
    // true when the full cuts of a nonempty rectangulation are vertical
    bool full_orientation(long long n, const std::vector<Cut>& cuts) const {
        bool sawV = false, sawH = false;
        for (const auto& c : cuts)
            if (c.lo == 0 && c.hi == n + 1) (c.vertical ? sawV : sawH) = true;
        expect(sawV != sawH, id() + ": argument lacks a unique junction orientation");
        return sawV;
    }

    std::pair<long long, std::vector<Cut>> parse(const std::string& text) const {
        size_t colon = text.find(':');
        expect(colon != std::string::npos, id() + ": missing ':' in '" + text + "'");
        long long n = parse_ll(text.substr(0, colon), id());
        std::string rest = text.substr(colon + 1);
        std::vector<Cut> cuts;
        if (!rest.empty()) {
            for (const auto& item : split(rest, ';')) {
                expect(item.size() >= 6 && (item[0] == 'V' || item[0] == 'H') && item[1] == '[' &&
                           item.back() == ']',
                       id() + ": bad cut '" + item + "' in '" + text + "'");
                auto nums = split(item.substr(2, item.size() - 3), ',');
                expect(nums.size() == 2, id() + ": bad cut '" + item + "'");
                Cut c;
                c.vertical = item[0] == 'V';
                c.lo = parse_ll(nums[0], id());
                c.hi = parse_ll(nums[1], id());
                cuts.push_back(c);
            }
        }
        expect(static_cast<long long>(cuts.size()) == n,
               id() + ": expected " + std::to_string(n) + " cuts in '" + text + "'");
        for (long long i = 1; i <= n; ++i)
            expect(cuts[i - 1].lo >= 0 && cuts[i - 1].lo < i && i < cuts[i - 1].hi &&
                       cuts[i - 1].hi <= n + 1,
                   id() + ": cut interval must straddle its point in '" + text + "'");
        return {n, cuts};
    }

    std::string print(long long n, const std::vector<Cut>& cuts) const {
        std::string out = std::to_string(n) + ":";
        for (size_t i = 0; i < cuts.size(); ++i) {
            if (i) out.push_back(';');
            out += (cuts[i].vertical ? "V[" : "H[") + std::to_string(cuts[i].lo) + "," +
                   std::to_string(cuts[i].hi) + "]";
        }
        return out;
    }
};

// Unary-binary plane trees counted by internal nodes.  norm = internal + 1.
class SchroederTreeFamily final : public Family {
public:
    SchroederTreeFamily()
        : Family("sch.trees", "unary-binary trees by internal nodes", class_schroeder(),
                 FamilyTier::tier1, 1, "T := o | (T) | (T,T)") {}

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
        return internal_nodes(t) + 1;
    }

private:
    void validate(const PNode& t) const {
        if (t.leaf) return;
        expect(t.children.size() <= 2, id() + ": node with more than two children");
        for (const auto& c : t.children) validate(c);
    }

    static long long internal_nodes(const PNode& t) {
        if (t.leaf) return 0;
        long long n = 1;
        for (const auto& c : t.children) n += internal_nodes(c);
        return n;
    }
};

// Dissections of an N-gon whose diagonals avoid vertices 1 and N.
// norm = N - 3; the 4-gon with no diagonals is the generator.
class DissectionFamily final : public Family {
public:
    DissectionFamily()
        : Family("sch.dissections", "polygon dissections avoiding two vertices",
                 class_schroeder(), FamilyTier::tier2, 1,
                 "N:(a,b)... diagonals with 2 <= a < b <= N-1") {}

    std::string canonicalize(const std::string& text) const override {
        auto [n, diags] = parse(text);
        return print(n, diags);
    }

    std::string generator(int) const override { return "4:"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) {
            auto [n, diags] = parse(children[0]);
            return print(n + 1, diags);
        }
        auto [n1, d1] = parse(children[0]);
        auto [n2, d2] = parse(children[1]);
        long long n = n1 + n2 - 3;
        std::vector<std::pair<long long, long long>> diags;
        diags.push_back({n2 - 2, n - 1});
        for (auto d : d2) {
            if (d.second <= n2 - 2)
                diags.push_back(d);
            else
                diags.push_back({d.first, n - 1});
        }
        for (auto d : d1) diags.push_back({d.first + n2 - 4, d.second + n2 - 4});
        return print(n, diags);
    }

    FactorResult factor(const std::string& obj) const override {
        auto [n, diags] = parse(obj);
        if (n == 4) return FactorResult::irreducible();
        long long k = 0;
        for (auto d : diags)
            if (d.second == n - 1) k = std::max(k, d.first);
        if (k == 0) return FactorResult::via(1, {print(n - 1, diags)});
        std::vector<std::pair<long long, long long>> p1, p2;
        for (auto d : diags) {
            if (d.first == k && d.second == n - 1) continue;
            if (d.second <= k)
                p2.push_back(d);
            else if (d.second == n - 1)
                p2.push_back({d.first, k + 1});
            else {
                expect(d.first >= k && d.second <= n - 2,
                       id() + ": '" + obj + "' does not factor");
                p1.push_back({d.first - k + 2, d.second - k + 2});
            }
        }
        FactorResult result = FactorResult::via(2, {print(n - k + 1, p1), print(k + 2, p2)});
        expect(apply(2, result.children) == obj, id() + ": '" + obj + "' does not factor");
        return result;
    }

    long long norm(const std::string& obj) const override { return parse(obj).first - 3; }

private:
    std::pair<long long, std::vector<std::pair<long long, long long>>> parse(
        const std::string& text) const {
        size_t colon = text.find(':');
        expect(colon != std::string::npos, id() + ": missing ':' in '" + text + "'");
        long long n = parse_ll(text.substr(0, colon), id());
        expect(n >= 4, id() + ": polygon too small in '" + text + "'");
        std::vector<std::pair<long long, long long>> diags;
        size_t pos = colon + 1;
        while (pos < text.size()) {
            expect(text[pos] == '(', id() + ": expected '(' in '" + text + "'");
            size_t close = text.find(')', pos);
            expect(close != std::string::npos, id() + ": unterminated diagonal");
            auto parts = split(text.substr(pos + 1, close - pos - 1), ',');
            expect(parts.size() == 2, id() + ": diagonal needs two vertices");
            long long a = parse_ll(parts[0], id());
            long long b = parse_ll(parts[1], id());
            expect(2 <= a && a + 2 <= b && b <= n - 1,
                   id() + ": bad diagonal (" + parts[0] + "," + parts[1] + ") in '" + text + "'");
            diags.push_back({a, b});
            pos = close + 1;
        }
        std::sort(diags.begin(), diags.end());
        for (size_t i = 0; i + 1 < diags.size(); ++i)
            expect(diags[i] != diags[i + 1], id() + ": repeated diagonal in '" + text + "'");
        for (size_t i = 0; i < diags.size(); ++i)
            for (size_t j = i + 1; j < diags.size(); ++j)
                expect(!(diags[i].first < diags[j].first && diags[j].first < diags[i].second &&
                         diags[i].second < diags[j].second),
                       id() + ": crossing diagonals in '" + text + "'");
        return {n, diags};
    }

    std::string print(long long n,
                      std::vector<std::pair<long long, long long>> diags) const {
        std::sort(diags.begin(), diags.end());
        std::string out = std::to_string(n) + ":";
        for (auto d : diags)
            out += "(" + std::to_string(d.first) + "," + std::to_string(d.second) + ")";
        return out;
    }
};

// Perfect matchings of a triangular grid region; row y of size-n holds
// nodes x in [y-1, 2n-y] (row 0: [0, 2n-1]).  Edges are unit h/v dominoes.
// norm = n + 1.
class AztecFamily final : public Family {
public:
    AztecFamily()
        : Family("sch.aztec", "matchings of a triangular grid", class_schroeder(),
                 FamilyTier::tier2, 1, "n:h(x,y);v(x,y);... perfect matching") {}

    struct Edge {
        long long y = 0, x = 0;
        bool vertical = false;
        bool operator<(const Edge& o) const {
            return std::tie(y, x, vertical) < std::tie(o.y, o.x, o.vertical);
        }
        bool operator==(const Edge& o) const {
            return y == o.y && x == o.x && vertical == o.vertical;
        }
    };

    std::string canonicalize(const std::string& text) const override {
        auto [n, edges] = parse(text);
        return print(n, edges);
    }

    std::string generator(int) const override { return "0:"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        if (map_index == 1) {
            auto [m, edges] = parse(children[0]);
            long long n = m + 1;
            for (const Edge& e : rim(n)) edges.push_back(e);
            return print(n, edges);
        }
        auto [n1, e1] = parse(children[0]);
        auto [n2, e2] = parse(children[1]);
        long long n = n1 + n2 + 1;
        std::vector<Edge> edges = e1;
        for (Edge e : e2) {
            e.x += 2 * n1 + 1;
            e.y += 1;
            edges.push_back(e);
        }
        edges.push_back({0, 2 * n1, true});
        edges.push_back({0, 2 * n - 1, true});
        fill_rows(n, edges);
        return print(n, edges);
    }

    FactorResult factor(const std::string& obj) const override {
        auto [n, edges] = parse(obj);
        if (n == 0) return FactorResult::irreducible();
        std::set<Edge> eset(edges.begin(), edges.end());
        FactorResult result;
        if (eset.count({0, 2 * n - 2, false})) {
            for (const Edge& e : rim(n)) {
                expect(eset.erase(e) == 1, id() + ": '" + obj + "' does not factor");
            }
            result = FactorResult::via(
                1, {print(n - 1, std::vector<Edge>(eset.begin(), eset.end()))});
        } else {
            expect(eset.count({0, 2 * n - 1, true}),
                   id() + ": '" + obj + "' does not factor");
            long long xstar = -1;
            for (const Edge& e : edges)
                if (e.vertical && e.y == 0 && e.x < 2 * n - 1) xstar = std::max(xstar, e.x);
            expect(xstar >= 0 && xstar % 2 == 0, id() + ": '" + obj + "' does not factor");
            long long n1 = xstar / 2, n2 = n - n1 - 1;
            std::vector<Edge> e1, e2;
            for (Edge e : edges) {
                if (edge_in_region(n1, e)) {
                    e1.push_back(e);
                    continue;
                }
                Edge s = e;
                s.x -= 2 * n1 + 1;
                s.y -= 1;
                if (s.y >= 0 && edge_in_region(n2, s)) e2.push_back(s);
            }
            result = FactorResult::via(2, {print(n1, e1), print(n2, e2)});
        }
        expect(apply(result.map_index, result.children) == obj,
               id() + ": '" + obj + "' does not factor");
        return result;
    }

    long long norm(const std::string& obj) const override { return parse(obj).first + 1; }

private:
    static bool in_region(long long n, long long x, long long y) {
        if (y == 0) return x >= 0 && x <= 2 * n - 1;
        if (y >= 1 && y <= n) return x >= y - 1 && x <= 2 * n - y;
        return false;
    }

    static bool edge_in_region(long long n, const Edge& e) {
        if (e.vertical) return in_region(n, e.x, e.y) && in_region(n, e.x, e.y + 1);
        return in_region(n, e.x, e.y) && in_region(n, e.x + 1, e.y);
    }

    static std::vector<Edge> rim(long long n) {
        if (n == 1) return {{0, 0, false}, {1, 0, false}};
        std::vector<Edge> out{{0, 2 * n - 2, false}, {1, 2 * n - 2, false}};
        for (long long y = 2; y <= n - 1; ++y) out.push_back({y, 2 * n - y - 1, false});
        out.push_back({n, n - 1, false});
        return out;
    }

    // pairs all still-uncovered nodes with horizontal edges, row by row
    void fill_rows(long long n, std::vector<Edge>& edges) const {
        std::set<std::pair<long long, long long>> covered;
        for (const Edge& e : edges) {
            covered.insert({e.y, e.x});
            covered.insert(e.vertical ? std::make_pair(e.y + 1, e.x)
                                      : std::make_pair(e.y, e.x + 1));
        }
        for (long long y = 0; y <= n; ++y) {
            long long xlo = y == 0 ? 0 : y - 1;
            long long xhi = y == 0 ? 2 * n - 1 : 2 * n - y;
            long long x = xlo;
            while (x <= xhi) {
                if (covered.count({y, x})) {
                    ++x;
                    continue;
                }
                expect(x + 1 <= xhi && !covered.count({y, x + 1}),
                       id() + ": arguments do not assemble into a matching");
                edges.push_back({y, x, false});
                x += 2;
            }
        }
    }

    std::pair<long long, std::vector<Edge>> parse(const std::string& text) const {
        size_t colon = text.find(':');
        expect(colon != std::string::npos, id() + ": missing ':' in '" + text + "'");
        long long n = parse_ll(text.substr(0, colon), id());
        std::string rest = text.substr(colon + 1);
        std::vector<Edge> edges;
        if (!rest.empty()) {
            for (const auto& item : split(rest, ';')) {
                expect(item.size() >= 6 && (item[0] == 'h' || item[0] == 'v') && item[1] == '(' &&
                           item.back() == ')',
                       id() + ": bad edge '" + item + "' in '" + text + "'");
                auto nums = split(item.substr(2, item.size() - 3), ',');
                expect(nums.size() == 2, id() + ": bad edge '" + item + "'");
                Edge e;
                e.vertical = item[0] == 'v';
                e.x = parse_ll(nums[0], id());
                e.y = parse_ll(nums[1], id());
                expect(edge_in_region(n, e), id() + ": edge outside region in '" + text + "'");
                edges.push_back(e);
            }
        }
        std::set<std::pair<long long, long long>> covered;
        for (const Edge& e : edges) {
            auto a = std::make_pair(e.y, e.x);
            auto b = e.vertical ? std::make_pair(e.y + 1, e.x) : std::make_pair(e.y, e.x + 1);
            expect(covered.insert(a).second && covered.insert(b).second,
                   id() + ": overlapping edges in '" + text + "'");
        }
        expect(static_cast<long long>(covered.size()) == n * (n + 3),
               id() + ": not a perfect matching in '" + text + "'");
        return {n, edges};
    }

    std::string print(long long n, std::vector<Edge> edges) const {
        std::sort(edges.begin(), edges.end());
        std::vector<std::string> parts;
        parts.reserve(edges.size());
        for (const Edge& e : edges)
            parts.push_back(std::string(e.vertical ? "v(" : "h(") + std::to_string(e.x) + "," +
                            std::to_string(e.y) + ")");
        return std::to_string(n) + ":" + join(parts, ';');
    }
};

// Zebras: overlapping columns of white/black strips, "w0.1;b0.2;...".
// Column j occupies rows [b,t); consecutive columns overlap.
// norm = columns + top of last column; the bare pole "|" is the generator.
class ZebraFamily final : public Family {
public:
    ZebraFamily()
        : Family("sch.zebras", "two-colored overlapping column stacks", class_schroeder(),
                 FamilyTier::tier2, 1, "| or columns w<b>.<t> / b<b>.<t> joined by ';'") {}

    struct Col {
        bool black = false;
        long long b = 0, t = 0;
    };

    std::string canonicalize(const std::string& text) const override {
        if (text == "|") return text;
        return print(parse(text));
    }

    std::string generator(int) const override { return "|"; }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        bool black = map_index == 2;
        if (map_index == 2 && children[1] != "|") {
            auto cols = children[0] == "|" ? std::vector<Col>{} : parse(children[0]);
            long long T = cols.empty() ? 1 : cols.back().t;
            for (Col c : parse(children[1])) {
                c.b += T - 1;
                c.t += T;
                cols.push_back(c);
            }
            return print(cols);
        }
        auto cols = children[0] == "|" ? std::vector<Col>{} : parse(children[0]);
        long long t = cols.empty() ? 1 : cols.back().t;
        cols.push_back({black, t - 1, t});
        return print(cols);
    }

    FactorResult factor(const std::string& obj) const override {
        if (obj == "|") return FactorResult::irreducible();
        auto cols = parse(obj);
        size_t c = cols.size();
        if (cols[c - 1].t - cols[c - 1].b == 1) {
            bool black = cols[c - 1].black;
            cols.pop_back();
            std::string rest = cols.empty() ? "|" : print(cols);
            return black ? FactorResult::via(2, {rest, "|"}) : FactorResult::via(1, {rest});
        }
        size_t k = 0;
        for (size_t j = 1; j < c; ++j)
            if (cols[j].b == cols[j - 1].t - 1) k = j;
        long long T = k == 0 ? 1 : cols[k - 1].t;
        std::vector<Col> p1(cols.begin(), cols.begin() + k);
        std::vector<Col> p2;
        for (size_t j = k; j < c; ++j) {
            Col col = cols[j];
            expect(col.t - col.b >= 2, id() + ": '" + obj + "' does not factor");
            col.b -= T - 1;
            col.t -= T;
            p2.push_back(col);
        }
        FactorResult result =
            FactorResult::via(2, {p1.empty() ? "|" : print(p1), print(p2)});
        expect(apply(2, result.children) == obj, id() + ": '" + obj + "' does not factor");
        return result;
    }

    long long norm(const std::string& obj) const override {
        if (obj == "|") return 1;
        auto cols = parse(obj);
        return static_cast<long long>(cols.size()) + cols.back().t;
    }

private:
    std::vector<Col> parse(const std::string& text) const {
        std::vector<Col> cols;
        expect(!text.empty(), id() + ": empty object text");
        for (const auto& item : split(text, ';')) {
            expect(item.size() >= 4 && (item[0] == 'w' || item[0] == 'b'),
                   id() + ": bad column '" + item + "' in '" + text + "'");
            auto nums = split(item.substr(1), '.');
            expect(nums.size() == 2, id() + ": bad column '" + item + "'");
            Col c;
            c.black = item[0] == 'b';
            c.b = parse_ll(nums[0], id());
            c.t = parse_ll(nums[1], id());
            expect(c.t > c.b, id() + ": empty column in '" + text + "'");
            cols.push_back(c);
        }
        expect(cols[0].b == 0, id() + ": first column must start at 0 in '" + text + "'");
        for (size_t j = 1; j < cols.size(); ++j) {
            expect(cols[j].b >= cols[j - 1].b && cols[j].t >= cols[j - 1].t,
                   id() + ": columns must be monotone in '" + text + "'");
            expect(cols[j].b <= cols[j - 1].t - 1,
                   id() + ": consecutive columns must overlap in '" + text + "'");
        }
        return cols;
    }

    std::string print(const std::vector<Col>& cols) const {
        std::vector<std::string> parts;
        parts.reserve(cols.size());
        for (const Col& c : cols)
            parts.push_back(std::string(1, c.black ? 'b' : 'w') + std::to_string(c.b) + "." +
                            std::to_string(c.t));
        return join(parts, ';');
    }
};

}  // namespace

namespace detail {

void add_schroeder_families(std::vector<FamilyPtr>& out) {
    out.push_back(std::make_shared<SchroederPathFamily>());
    out.push_back(std::make_shared<PeakDyckFamily>());
    out.push_back(std::make_shared<SsytFamily>());
    out.push_back(std::make_shared<RectangulationFamily>());
    out.push_back(std::make_shared<SchroederTreeFamily>());
    out.push_back(std::make_shared<DissectionFamily>());
    out.push_back(std::make_shared<AztecFamily>());
    out.push_back(std::make_shared<ZebraFamily>());
}

}  // namespace detail
}  // namespace magma
