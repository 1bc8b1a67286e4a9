#pragma once

#include <vector>

#include "magma/sequences.hpp"
#include "magma/term.hpp"

namespace magma {

// counts[n-1] = number of distinct terms of norm n over gen_count generators,
// for n = 1..max_norm. Dynamic programming, exact arithmetic.
std::vector<BigInt> count_terms_by_norm(const ClassSpec& cls, int gen_count, int max_norm);

// groups[n-1] = all terms of norm n in deterministic order: generators by
// ascending index, then map index, then compositions of the child norms in
// lexicographic order, then child tuples in odometer order.
std::vector<std::vector<TermPtr>> enumerate_terms(const ClassSpec& cls, int gen_count,
                                                  int max_norm);

}  // namespace magma
