#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace magma {

// Arity tuple of a magma class, weakly increasing, 1-based map indices.
struct Signature {
    std::vector<int> arities;

    int map_count() const { return static_cast<int>(arities.size()); }
    int arity(int map_index) const { return arities.at(static_cast<size_t>(map_index - 1)); }
    bool operator==(const Signature&) const = default;
};

// Free-magma element: a generator leaf or a map application.
// map_index == 0 marks a generator (gen_index used); otherwise map_index is
// 1-based and children has the map's arity.
struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    int map_index = 0;
    int gen_index = 0;
    std::vector<TermPtr> children;

    bool is_gen() const { return map_index == 0; }

    static TermPtr gen(int index);
    static TermPtr app(int map_index, std::vector<TermPtr> children);
};

bool term_equal(const TermPtr& a, const TermPtr& b);

// Affine norm: per-generator base values plus a per-map additive offset.
struct NormSpec {
    std::vector<long long> gen_norms;
    std::vector<long long> offsets;
};

enum class ClassId { fibonacci, motzkin, schroeder, fuss_catalan, custom };

struct ClassSpec {
    Signature signature;
    NormSpec norm;
    ClassId id = ClassId::custom;
    std::string name;

    bool same_class(const ClassSpec& other) const {
        return id == other.id && id != ClassId::custom;
    }
};

const ClassSpec& class_fibonacci();
const ClassSpec& class_motzkin();
const ClassSpec& class_schroeder();
const ClassSpec& class_fuss_catalan();
const ClassSpec* class_by_name(const std::string& name);

struct TermParseError : std::runtime_error {
    size_t position;
    TermParseError(const std::string& what, size_t pos)
        : std::runtime_error(what + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
};

TermPtr parse_term(const std::string& text, const Signature& signature, int gen_count);
std::string print_term(const TermPtr& term);
long long term_norm(const TermPtr& term, const ClassSpec& cls);

// Copy of cls whose gen_norms list has gen_count entries (extra generators
// reuse the first base norm). Needed for Cartesian magmas over p generators.
ClassSpec expand_generators(const ClassSpec& cls, int gen_count);

// The unique morphism fixed by the generator images: generators map to
// gen_values, applications to map_fns. Iterative, safe for deep terms.
template <typename V, typename GenFn, typename MapFn>
V term_fold(const TermPtr& term, GenFn&& gen_value, MapFn&& map_apply) {
    struct Frame {
        const Term* node;
        size_t next_child = 0;
        std::vector<V> done;
    };
    std::vector<Frame> stack;
    stack.push_back({term.get()});
    V result{};
    for (;;) {
        Frame& top = stack.back();
        if (top.node->is_gen()) {
            V value = gen_value(top.node->gen_index);
            stack.pop_back();
            if (stack.empty()) return value;
            stack.back().done.push_back(std::move(value));
            continue;
        }
        if (top.next_child < top.node->children.size()) {
            const Term* child = top.node->children[top.next_child].get();
            ++top.next_child;
            stack.push_back({child});
            continue;
        }
        result = map_apply(top.node->map_index, top.done);
        stack.pop_back();
        if (stack.empty()) return result;
        stack.back().done.push_back(std::move(result));
    }
}

}  // namespace magma
