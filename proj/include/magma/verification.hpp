#pragma once

#include <string>
#include <utility>
#include <vector>

#include "magma/family.hpp"
#include "magma/sequences.hpp"

namespace magma {

struct CheckEntry {
    std::string name;
    bool pass = true;
    std::string counterexample;
    std::string detail;
};

struct CountRow {
    int norm = 0;
    BigInt observed;
    BigInt expected;
};

struct VerificationReport {
    std::string title;
    std::vector<std::string> family_ids;
    int max_norm = 0;
    std::vector<CheckEntry> checks;
    std::vector<CountRow> counts;
    std::vector<std::pair<std::string, std::string>> witnesses;

    bool passed() const;
    std::string to_text() const;
    std::string to_json(int indent = -1) const;
};

// Class default verification bounds: fib 12, mot 10, sch 8, fc 13.
int default_bound(ClassId id);
// Same, but lowered until the family's slice sizes stay desk-scale (matters
// for multi-generator Cartesian families whose slices explode).
int default_bound(const Family& family);

// Expected per-norm count for a class with p generators at the class offset:
// fib F_n(p); mot M_{n-1}(p); sch S_{n-1}(p); fc T_m(p) at n=2m+1, else 0.
BigInt expected_count(ClassId id, int p, int n);

// groups[n-1] = distinct objects of norm n, in term-enumeration order.
std::vector<std::vector<std::string>> enumerate_family(const Family& family, int max_norm);

VerificationReport check_counts(const Family& family, int max_norm);
VerificationReport check_freeness(const Family& family, int max_norm);
VerificationReport check_bijection(const Family& src, const Family& dst, int max_norm);

}  // namespace magma
