#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "magma/term.hpp"

namespace magma {

enum class FamilyTier { tier1, tier2, reference };

std::string tier_name(FamilyTier tier);

struct ObjectError : std::runtime_error {
    explicit ObjectError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorResult {
    bool reducible = false;
    int map_index = 0;  // 1-based when reducible
    std::vector<std::string> children;
    int gen_index = 0;  // generator index when irreducible

    static FactorResult irreducible(int gen_index = 0) {
        FactorResult r;
        r.gen_index = gen_index;
        return r;
    }
    static FactorResult via(int map_index, std::vector<std::string> children) {
        FactorResult r;
        r.reducible = true;
        r.map_index = map_index;
        r.children = std::move(children);
        return r;
    }
};

// A combinatorial family presented as a normed magma: canonical text objects,
// one generator list, per-map apply, one-step factor, and a direct norm.
class Family {
public:
    Family(std::string id, std::string display_name, const ClassSpec& cls, FamilyTier tier,
           int gen_count, std::string grammar);
    virtual ~Family() = default;

    const std::string& id() const { return id_; }
    const std::string& display_name() const { return display_name_; }
    const ClassSpec& cls() const { return cls_; }
    FamilyTier tier() const { return tier_; }
    int gen_count() const { return gen_count_; }
    const std::string& grammar() const { return grammar_; }

    // canonical text of the object denoted by text; throws ObjectError on
    // syntax errors and membership violations
    virtual std::string canonicalize(const std::string& text) const = 0;
    virtual std::string generator(int gen_index) const = 0;
    virtual std::string apply(int map_index, const std::vector<std::string>& children) const = 0;
    virtual FactorResult factor(const std::string& obj) const = 0;
    virtual long long norm(const std::string& obj) const = 0;

protected:
    void require_arity(int map_index, size_t got) const;
    // exhaustively factor obj, re-applying every step; throws ObjectError on
    // the first step that is not exactly invertible
    void validate_recursive(const std::string& obj) const;

private:
    std::string id_;
    std::string display_name_;
    ClassSpec cls_;
    FamilyTier tier_;
    int gen_count_;
    std::string grammar_;
};

using FamilyPtr = std::shared_ptr<const Family>;

// Reference family whose objects are canonical terms over p generators.
FamilyPtr cartesian_family(const ClassSpec& cls, int p);

const std::vector<FamilyPtr>& registry_list();
FamilyPtr family_by_id(const std::string& id);  // nullptr when unknown
std::vector<FamilyPtr> families_in_class(ClassId id);
std::vector<FamilyPtr> tier1_families(ClassId id);

}  // namespace magma
