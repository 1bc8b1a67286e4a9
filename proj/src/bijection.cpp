#include "magma/bijection.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace magma {
namespace {

void check_term_fits(const TermPtr& term, const Family& family) {
    const Signature& sig = family.cls().signature;
    std::vector<const Term*> stack{term.get()};
    while (!stack.empty()) {
        const Term* t = stack.back();
        stack.pop_back();
        if (t->is_gen()) {
            if (t->gen_index < 0 || t->gen_index >= family.gen_count())
                throw std::invalid_argument("term generator e" + std::to_string(t->gen_index) +
                                            " does not exist in family " + family.id());
            continue;
        }
        if (t->map_index < 1 || t->map_index > sig.map_count())
            throw std::invalid_argument("term map m" + std::to_string(t->map_index) +
                                        " does not exist in family " + family.id());
        if (static_cast<int>(t->children.size()) != sig.arity(t->map_index))
            throw std::invalid_argument("term map m" + std::to_string(t->map_index) +
                                        " applied to " + std::to_string(t->children.size()) +
                                        " arguments in family " + family.id());
        for (const auto& c : t->children) stack.push_back(c.get());
    }
}

}  // namespace

TermPtr decompose(const Family& family, const std::string& object) {
    struct Frame {
        FactorResult fr;
        std::vector<TermPtr> kids;
    };
    std::string canon = family.canonicalize(object);
    FactorResult root = family.factor(canon);
    if (!root.reducible) return Term::gen(root.gen_index);
    std::vector<Frame> stack;
    stack.push_back({std::move(root), {}});
    for (;;) {
        Frame& top = stack.back();
        if (top.kids.size() == top.fr.children.size()) {
            TermPtr done = Term::app(top.fr.map_index, std::move(top.kids));
            stack.pop_back();
            if (stack.empty()) return done;
            stack.back().kids.push_back(std::move(done));
            continue;
        }
        FactorResult next = family.factor(top.fr.children[top.kids.size()]);
        if (!next.reducible)
            top.kids.push_back(Term::gen(next.gen_index));
        else
            stack.push_back({std::move(next), {}});
    }
}

std::string evaluate(const Family& family, const TermPtr& term) {
    check_term_fits(term, family);
    return term_fold<std::string>(
        term, [&](int gen_index) { return family.generator(gen_index); },
        [&](int map_index, const std::vector<std::string>& children) {
            return family.apply(map_index, children);
        });
}

ConversionRecord convert(const Family& src, const Family& dst, const std::string& object,
                         bool force_signature_only) {
    if (force_signature_only) {
        if (!(src.cls().signature == dst.cls().signature))
            throw std::invalid_argument("signature mismatch: " + src.id() + " and " + dst.id() +
                                        " have different map arities");
    } else if (!src.cls().same_class(dst.cls())) {
        throw std::invalid_argument(
            "class mismatch: " + src.id() + " (" + src.cls().name + ") and " + dst.id() + " (" +
            dst.cls().name + "); conversions stay within one norm class; use "
            "--force-signature-only for the raw term isomorphism");
    }
    if (src.gen_count() != dst.gen_count())
        throw std::invalid_argument("generator count mismatch: " + src.id() + " has " +
                                    std::to_string(src.gen_count()) + ", " + dst.id() + " has " +
                                    std::to_string(dst.gen_count()));
    ConversionRecord rec;
    rec.source_family = src.id();
    rec.source = src.canonicalize(object);
    rec.term = decompose(src, rec.source);
    rec.target_family = dst.id();
    rec.target = evaluate(dst, rec.term);
    rec.source_norm = src.norm(rec.source);
    rec.target_norm = dst.norm(rec.target);
    return rec;
}

bool convert_norm_check(const ConversionRecord& record) {
    if (record.source_norm != record.target_norm) return false;
    FamilyPtr src = family_by_id(record.source_family);
    if (!src || !record.term) return false;
    return term_norm(record.term, src->cls()) == record.source_norm;
}

}  // namespace magma
