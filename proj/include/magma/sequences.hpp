#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace magma {

using BigInt = boost::multiprecision::cpp_int;

enum class SequenceId { p_catalan, p_fibonacci, p_motzkin, p_schroder, p_fuss_catalan };

const SequenceId* sequence_by_name(const std::string& name);
std::string sequence_name(SequenceId id);
std::vector<SequenceId> all_sequences();

enum class SeqMethod { recurrence, closed_form };

struct SequenceQuery {
    SequenceId id;
    int p = 1;
    int n = 0;
    SeqMethod method = SeqMethod::recurrence;
};

BigInt seq_value(const SequenceQuery& q);
std::vector<BigInt> seq_prefix(SequenceId id, int p, int n_max,
                               SeqMethod method = SeqMethod::recurrence);

BigInt binomial(long long n, long long k);

}  // namespace magma
