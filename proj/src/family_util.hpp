#pragma once

#include <string>
#include <vector>

#include "magma/family.hpp"

namespace magma::detail {

// shared string helpers for the catalog implementations

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

inline long long parse_ll(const std::string& s, const std::string& what) {
    if (s.empty()) throw ObjectError("expected integer for " + what);
    size_t i = 0;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') throw ObjectError("bad integer '" + s + "' in " + what);
    if (s.size() > 1 && s[0] == '0') throw ObjectError("leading zero in " + what + ": '" + s + "'");
    if (s.size() > 12) throw ObjectError("integer out of range in " + what + ": '" + s + "'");
    return std::stoll(s);
}

inline void expect(bool cond, const std::string& msg) {
    if (!cond) throw ObjectError(msg);
}

// plane tree in nested-paren form: leaf "o", node "(child,child,...)"
struct PNode {
    bool leaf = true;
    std::vector<PNode> children;
};

inline size_t parse_pnode(const std::string& s, size_t pos, PNode& out, const std::string& who) {
    expect(pos < s.size(), who + ": unexpected end of tree text");
    if (s[pos] == 'o') {
        out = PNode{};
        return pos + 1;
    }
    expect(s[pos] == '(', who + ": expected 'o' or '(' at position " + std::to_string(pos));
    out.leaf = false;
    out.children.clear();
    ++pos;
    while (true) {
        PNode child;
        pos = parse_pnode(s, pos, child, who);
        out.children.push_back(std::move(child));
        expect(pos < s.size(), who + ": unterminated '('");
        if (s[pos] == ',') {
            ++pos;
            continue;
        }
        expect(s[pos] == ')', who + ": expected ',' or ')' at position " + std::to_string(pos));
        return pos + 1;
    }
}

inline PNode parse_ptree(const std::string& s, const std::string& who) {
    PNode root;
    size_t end = parse_pnode(s, 0, root, who);
    expect(end == s.size(), who + ": trailing characters in tree text");
    return root;
}

inline void print_pnode(const PNode& n, std::string& out) {
    if (n.leaf) {
        out.push_back('o');
        return;
    }
    out.push_back('(');
    for (size_t i = 0; i < n.children.size(); ++i) {
        if (i) out.push_back(',');
        print_pnode(n.children[i], out);
    }
    out.push_back(')');
}

inline std::string print_ptree(const PNode& n) {
    std::string out;
    print_pnode(n, out);
    return out;
}

// splits a balanced bracket word into its top-level groups, each returned with
// its delimiters; rejects stray characters and imbalance
inline std::vector<std::string> split_groups(const std::string& s, char open, char close,
                                             const std::string& who) {
    std::vector<std::string> groups;
    size_t start = 0;
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        expect(c == open || c == close, who + ": unexpected character '" + std::string(1, c) +
                                            "' in '" + s + "'");
        if (c == open) {
            if (depth == 0) start = i;
            ++depth;
        } else {
            expect(depth > 0, who + ": unbalanced '" + s + "'");
            if (--depth == 0) groups.push_back(s.substr(start, i - start + 1));
        }
    }
    expect(depth == 0, who + ": unbalanced '" + s + "'");
    return groups;
}

// registration hooks, one per class file
void add_fibonacci_families(std::vector<FamilyPtr>& out);
void add_motzkin_families(std::vector<FamilyPtr>& out);
void add_schroeder_families(std::vector<FamilyPtr>& out);
void add_fuss_catalan_families(std::vector<FamilyPtr>& out);

}  // namespace magma::detail
