#include <string>
#include <vector>

#include "family_util.hpp"
#include "magma/family.hpp"

namespace magma {

namespace {

std::string cartesian_id(ClassId id, int p) {
    std::string base;
    switch (id) {
        case ClassId::fibonacci: base = "cart11"; break;
        case ClassId::motzkin: base = "cart12.motzkin"; break;
        case ClassId::schroeder: base = "cart12.schroeder"; break;
        case ClassId::fuss_catalan: base = "cart3"; break;
    }
    if (p > 1) base += ".p" + std::to_string(p);
    return base;
}

std::string signature_text(const Signature& sig) {
    std::string s = "(";
    for (size_t i = 0; i < sig.arities.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(sig.arities[i]);
    }
    return s + ")";
}

class CartesianFamily final : public Family {
public:
    CartesianFamily(const ClassSpec& cls, int p)
        : Family(cartesian_id(cls.id, p),
                 "free " + signature_text(cls.signature) + "-magma on " + std::to_string(p) +
                     (p == 1 ? " generator" : " generators"),
                 cls, FamilyTier::reference, p,
                 "TERM := e | e<k> | m<i>(TERM,...)") {}

    std::string canonicalize(const std::string& text) const override {
        return print_term(checked_parse(text));
    }

    std::string generator(int gen_index) const override {
        if (gen_index < 0 || gen_index >= gen_count())
            throw ObjectError(id() + ": no generator " + std::to_string(gen_index));
        return print_term(Term::gen(gen_index));
    }

    std::string apply(int map_index, const std::vector<std::string>& children) const override {
        require_arity(map_index, children.size());
        std::vector<TermPtr> parts;
        parts.reserve(children.size());
        for (const auto& c : children) parts.push_back(checked_parse(c));
        return print_term(Term::app(map_index, std::move(parts)));
    }

    FactorResult factor(const std::string& obj) const override {
        TermPtr t = checked_parse(obj);
        if (t->is_gen()) return FactorResult::irreducible(t->gen_index);
        std::vector<std::string> children;
        children.reserve(t->children.size());
        for (const auto& c : t->children) children.push_back(print_term(c));
        return FactorResult::via(t->map_index, std::move(children));
    }

    long long norm(const std::string& obj) const override {
        return term_norm(checked_parse(obj), cls());
    }

private:
    // parse_term enforces map range, arity, and generator bounds
    TermPtr checked_parse(const std::string& text) const {
        try {
            return parse_term(text, cls().signature, gen_count());
        } catch (const TermParseError& e) {
            throw ObjectError(id() + ": " + e.what());
        }
    }
};

}  // namespace

FamilyPtr cartesian_family(const ClassSpec& cls, int p) {
    if (p < 1) throw std::invalid_argument("cartesian_family: p must be >= 1");
    return std::make_shared<CartesianFamily>(cls, p);
}

}  // namespace magma
