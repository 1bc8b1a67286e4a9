#include "magma/family.hpp"

#include <map>
#include <utility>

#include "family_util.hpp"

namespace magma {

std::string tier_name(FamilyTier tier) {
    switch (tier) {
        case FamilyTier::tier1: return "tier1";
        case FamilyTier::tier2: return "tier2";
        case FamilyTier::reference: return "reference";
    }
    return "?";
}

Family::Family(std::string id, std::string display_name, const ClassSpec& cls, FamilyTier tier,
               int gen_count, std::string grammar)
    : id_(std::move(id)),
      display_name_(std::move(display_name)),
      cls_(expand_generators(cls, gen_count)),
      tier_(tier),
      gen_count_(gen_count),
      grammar_(std::move(grammar)) {}

void Family::require_arity(int map_index, size_t got) const {
    if (map_index < 1 || map_index > cls_.signature.map_count())
        throw ObjectError(id_ + ": no map m" + std::to_string(map_index));
    size_t want = static_cast<size_t>(cls_.signature.arity(map_index));
    if (got != want)
        throw ObjectError(id_ + ": m" + std::to_string(map_index) + " expects " +
                          std::to_string(want) + " arguments, got " + std::to_string(got));
}

void Family::validate_recursive(const std::string& obj) const {
    std::vector<std::string> work{obj};
    while (!work.empty()) {
        std::string cur = std::move(work.back());
        work.pop_back();
        FactorResult f = factor(cur);
        if (!f.reducible) {
            if (f.gen_index < 0 || f.gen_index >= gen_count_ || generator(f.gen_index) != cur)
                throw ObjectError(id_ + ": '" + cur + "' is irreducible but not a generator");
            continue;
        }
        if (apply(f.map_index, f.children) != cur)
            throw ObjectError(id_ + ": factorization of '" + cur + "' does not re-apply");
        long long n = norm(cur);
        for (const auto& child : f.children) {
            if (norm(child) >= n)
                throw ObjectError(id_ + ": factor of '" + cur + "' does not reduce the norm");
            work.push_back(child);
        }
    }
}

namespace {

std::vector<FamilyPtr> build_registry() {
    std::vector<FamilyPtr> out;
    for (const auto* cls : {&class_fibonacci(), &class_motzkin(), &class_schroeder(),
                            &class_fuss_catalan()})
        for (int p = 1; p <= 3; ++p) out.push_back(cartesian_family(*cls, p));
    detail::add_fibonacci_families(out);
    detail::add_motzkin_families(out);
    detail::add_schroeder_families(out);
    detail::add_fuss_catalan_families(out);
    return out;
}

}  // namespace

const std::vector<FamilyPtr>& registry_list() {
    static const std::vector<FamilyPtr> registry = build_registry();
    return registry;
}

FamilyPtr family_by_id(const std::string& id) {
    static const std::map<std::string, FamilyPtr> index = [] {
        std::map<std::string, FamilyPtr> m;
        for (const auto& f : registry_list()) m.emplace(f->id(), f);
        return m;
    }();
    auto it = index.find(id);
    return it == index.end() ? nullptr : it->second;
}

std::vector<FamilyPtr> families_in_class(ClassId id) {
    std::vector<FamilyPtr> out;
    for (const auto& f : registry_list())
        if (f->cls().id == id) out.push_back(f);
    return out;
}

std::vector<FamilyPtr> tier1_families(ClassId id) {
    std::vector<FamilyPtr> out;
    for (const auto& f : registry_list())
        if (f->cls().id == id && f->tier() == FamilyTier::tier1) out.push_back(f);
    return out;
}

}  // namespace magma
