#include "magma/term.hpp"

namespace magma {

TermPtr Term::gen(int index) {
    auto t = std::make_shared<Term>();
    t->map_index = 0;
    t->gen_index = index;
    return t;
}

TermPtr Term::app(int map_index, std::vector<TermPtr> children) {
    auto t = std::make_shared<Term>();
    t->map_index = map_index;
    t->children = std::move(children);
    return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
    std::vector<std::pair<const Term*, const Term*>> stack{{a.get(), b.get()}};
    while (!stack.empty()) {
        auto [x, y] = stack.back();
        stack.pop_back();
        if (x == y) continue;
        if (x->map_index != y->map_index || x->gen_index != y->gen_index ||
            x->children.size() != y->children.size())
            return false;
        for (size_t i = 0; i < x->children.size(); ++i)
            stack.push_back({x->children[i].get(), y->children[i].get()});
    }
    return true;
}

namespace {

const ClassSpec& make_class(ClassId id) {
    static const ClassSpec fib{{{1, 1}}, {{1}, {1, 2}}, ClassId::fibonacci, "fibonacci"};
    static const ClassSpec mot{{{1, 2}}, {{1}, {1, 1}}, ClassId::motzkin, "motzkin"};
    static const ClassSpec sch{{{1, 2}}, {{1}, {1, 0}}, ClassId::schroeder, "schroeder"};
    static const ClassSpec fc{{{3}}, {{1}, {0}}, ClassId::fuss_catalan, "fuss_catalan"};
    switch (id) {
        case ClassId::fibonacci: return fib;
        case ClassId::motzkin: return mot;
        case ClassId::schroeder: return sch;
        default: return fc;
    }
}

}  // namespace

const ClassSpec& class_fibonacci() { return make_class(ClassId::fibonacci); }
const ClassSpec& class_motzkin() { return make_class(ClassId::motzkin); }
const ClassSpec& class_schroeder() { return make_class(ClassId::schroeder); }
const ClassSpec& class_fuss_catalan() { return make_class(ClassId::fuss_catalan); }

const ClassSpec* class_by_name(const std::string& name) {
    if (name == "fibonacci") return &class_fibonacci();
    if (name == "motzkin") return &class_motzkin();
    if (name == "schroeder") return &class_schroeder();
    if (name == "fuss_catalan") return &class_fuss_catalan();
    return nullptr;
}

namespace {

// Recursive-descent parser driven by an explicit stack so deep terms cannot
// overflow the call stack.
struct Parser {
    const std::string& text;
    const Signature& sig;
    int gen_count;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw TermParseError(msg, pos); }

    char peek() const { return pos < text.size() ? text[pos] : '\0'; }

    long long read_digits() {
        size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail("expected digits");
        if (pos - start > 9) fail("index too large");
        return std::stoll(text.substr(start, pos - start));
    }

    TermPtr run() {
        struct Frame {
            int map_index;
            std::vector<TermPtr> children;
        };
        std::vector<Frame> stack;
        for (;;) {
            // Parse one atom: a generator, or a map application opener.
            TermPtr atom;
            if (peek() == 'e') {
                ++pos;
                long long index = 0;
                if (peek() >= '0' && peek() <= '9') index = read_digits();
                if (index >= gen_count)
                    fail("generator index " + std::to_string(index) + " out of range (have " +
                         std::to_string(gen_count) + ")");
                atom = Term::gen(static_cast<int>(index));
            } else if (peek() == 'm') {
                ++pos;
                long long index = read_digits();
                if (index < 1 || index > sig.map_count())
                    fail("map index m" + std::to_string(index) + " out of range");
                if (peek() != '(') fail("expected '('");
                ++pos;
                stack.push_back({static_cast<int>(index), {}});
                continue;
            } else {
                fail(pos >= text.size() ? "unexpected end of input" : "unexpected character");
            }
            // Close as many applications as this atom completes.
            for (;;) {
                if (stack.empty()) {
                    if (pos != text.size()) fail("trailing input");
                    return atom;
                }
                Frame& top = stack.back();
                top.children.push_back(atom);
                int want = sig.arity(top.map_index);
                if (static_cast<int>(top.children.size()) < want) {
                    if (peek() != ',') fail("expected ','");
                    ++pos;
                    break;
                }
                if (peek() != ')') fail("expected ')'");
                ++pos;
                atom = Term::app(top.map_index, std::move(top.children));
                stack.pop_back();
            }
        }
    }
};

}  // namespace

TermPtr parse_term(const std::string& text, const Signature& signature, int gen_count) {
    Parser p{text, signature, gen_count};
    return p.run();
}

std::string print_term(const TermPtr& term) {
    std::string out;
    // Work items: a term to emit, or a literal character (comma / paren).
    struct Item {
        const Term* node;
        char literal;
    };
    std::vector<Item> stack{{term.get(), '\0'}};
    while (!stack.empty()) {
        Item item = stack.back();
        stack.pop_back();
        if (item.node == nullptr) {
            out.push_back(item.literal);
            continue;
        }
        const Term* t = item.node;
        if (t->is_gen()) {
            out.push_back('e');
            if (t->gen_index != 0) out += std::to_string(t->gen_index);
            continue;
        }
        out += "m" + std::to_string(t->map_index) + "(";
        stack.push_back({nullptr, ')'});
        for (size_t i = t->children.size(); i-- > 0;) {
            stack.push_back({t->children[i].get(), '\0'});
            if (i != 0) stack.push_back({nullptr, ','});
        }
    }
    return out;
}

ClassSpec expand_generators(const ClassSpec& cls, int gen_count) {
    ClassSpec out = cls;
    out.norm.gen_norms.resize(static_cast<size_t>(gen_count),
                              cls.norm.gen_norms.empty() ? 1 : cls.norm.gen_norms.front());
    return out;
}

long long term_norm(const TermPtr& term, const ClassSpec& cls) {
    return term_fold<long long>(
        term,
        [&](int g) { return cls.norm.gen_norms.at(static_cast<size_t>(g)); },
        [&](int m, const std::vector<long long>& parts) {
            long long sum = cls.norm.offsets.at(static_cast<size_t>(m - 1));
            for (long long v : parts) sum += v;
            return sum;
        });
}

}  // namespace magma
