#pragma once

#include <string>

#include "magma/family.hpp"
#include "magma/term.hpp"

namespace magma {

// One object pushed through the universal bijection: decompose in the source
// family, re-evaluate the term in the target family.
struct ConversionRecord {
    std::string source_family;
    std::string source;
    TermPtr term;
    std::string target_family;
    std::string target;
    long long source_norm = 0;
    long long target_norm = 0;
};

// Full recursive factorization of an object into a term; iterative, so deep
// objects cannot overflow the call stack. Throws ObjectError on non-members.
TermPtr decompose(const Family& family, const std::string& object);

// Fold of a term into a family's objects; the inverse of decompose. Throws
// std::invalid_argument when the term does not fit the family's signature or
// generator count.
std::string evaluate(const Family& family, const TermPtr& term);

// The universal bijection src -> dst. Families must share the full class
// (signature and norm); with force_signature_only, only the signature and
// generator count must match and norms may differ.
ConversionRecord convert(const Family& src, const Family& dst, const std::string& object,
                         bool force_signature_only = false);

// true iff source, target and term norms all agree (term norm taken in the
// source family's class).
bool convert_norm_check(const ConversionRecord& record);

}  // namespace magma
