#include "magma/sequences.hpp"

#include <stdexcept>

namespace magma {

const SequenceId* sequence_by_name(const std::string& name) {
    static const SequenceId ids[] = {SequenceId::p_catalan, SequenceId::p_fibonacci,
                                     SequenceId::p_motzkin, SequenceId::p_schroder,
                                     SequenceId::p_fuss_catalan};
    if (name == "p_catalan") return &ids[0];
    if (name == "p_fibonacci") return &ids[1];
    if (name == "p_motzkin") return &ids[2];
    if (name == "p_schroder") return &ids[3];
    if (name == "p_fuss_catalan") return &ids[4];
    return nullptr;
}

std::string sequence_name(SequenceId id) {
    switch (id) {
        case SequenceId::p_catalan: return "p_catalan";
        case SequenceId::p_fibonacci: return "p_fibonacci";
        case SequenceId::p_motzkin: return "p_motzkin";
        case SequenceId::p_schroder: return "p_schroder";
        case SequenceId::p_fuss_catalan: return "p_fuss_catalan";
    }
    return "?";
}

std::vector<SequenceId> all_sequences() {
    return {SequenceId::p_catalan, SequenceId::p_fibonacci, SequenceId::p_motzkin,
            SequenceId::p_schroder, SequenceId::p_fuss_catalan};
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact at every step: result is binom(n-k+i, i)
    }
    return result;
}

namespace {

BigInt power(BigInt base, long long exp) {
    BigInt result = 1;
    while (exp-- > 0) result *= base;
    return result;
}

// C_0(p) = p; C_n(p) = p^{n+1} binom(2n,n)/(n+1) for n >= 1.
BigInt catalan_closed(int p, int n) {
    if (n == 0) return p;
    BigInt value = power(p, n + 1) * binomial(2LL * n, n);
    value /= n + 1;
    return value;
}

std::vector<BigInt> prefix_recurrence(SequenceId id, int p, int n_max) {
    std::vector<BigInt> v(static_cast<size_t>(n_max) + 1);
    switch (id) {
        case SequenceId::p_fibonacci:
            for (int n = 0; n <= n_max; ++n) {
                if (n == 0) v[n] = 0;
                else if (n == 1) v[n] = p;
                else v[n] = v[n - 1] + v[n - 2];
            }
            break;
        case SequenceId::p_motzkin:
            for (int n = 0; n <= n_max; ++n) {
                if (n <= 1) { v[n] = p; continue; }
                BigInt sum = v[n - 1];
                for (int k = 0; k <= n - 2; ++k) sum += v[k] * v[n - 2 - k];
                v[n] = sum;
            }
            break;
        case SequenceId::p_schroder:
            for (int n = 0; n <= n_max; ++n) {
                if (n == 0) { v[n] = p; continue; }
                BigInt sum = v[n - 1];
                for (int k = 0; k <= n - 1; ++k) sum += v[k] * v[n - 1 - k];
                v[n] = sum;
            }
            break;
        case SequenceId::p_fuss_catalan:
            for (int n = 0; n <= n_max; ++n) {
                if (n == 0) { v[n] = p; continue; }
                BigInt sum = 0;
                for (int i = 0; i <= n - 1; ++i)
                    for (int j = 0; j <= n - 1 - i; ++j) sum += v[i] * v[j] * v[n - 1 - i - j];
                v[n] = sum;
            }
            break;
        case SequenceId::p_catalan:
            for (int n = 0; n <= n_max; ++n) {
                if (n == 0) { v[n] = p; continue; }
                BigInt sum = 0;
                for (int i = 0; i <= n - 1; ++i) sum += v[i] * v[n - 1 - i];
                v[n] = sum;
            }
            break;
    }
    return v;
}

BigInt closed_form(SequenceId id, int p, int n) {
    switch (id) {
        case SequenceId::p_fibonacci: {
            if (n == 0) return 0;
            BigInt sum = 0;
            for (long long k = 0; 2 * k <= n - 1; ++k) sum += binomial(n - k - 1, k);
            return p * sum;
        }
        case SequenceId::p_motzkin: {
            BigInt sum = 0;
            for (int k = 0; 2 * k <= n; ++k) sum += binomial(n, 2LL * k) * catalan_closed(p, k);
            return sum;
        }
        case SequenceId::p_schroder: {
            BigInt sum = 0;
            for (int k = 0; k <= n; ++k)
                sum += binomial(2LL * n - k, k) * catalan_closed(p, n - k);
            return sum;
        }
        case SequenceId::p_fuss_catalan: {
            BigInt value = power(p, 2LL * n + 1) * binomial(3LL * n + 1, n);
            value /= 3 * n + 1;
            return value;
        }
        case SequenceId::p_catalan: return catalan_closed(p, n);
    }
    throw std::logic_error("unreachable");
}

}  // namespace

BigInt seq_value(const SequenceQuery& q) {
    if (q.p < 1) throw std::invalid_argument("p must be positive");
    if (q.n < 0) throw std::invalid_argument("n must be non-negative");
    if (q.method == SeqMethod::closed_form) return closed_form(q.id, q.p, q.n);
    return prefix_recurrence(q.id, q.p, q.n).back();
}

std::vector<BigInt> seq_prefix(SequenceId id, int p, int n_max, SeqMethod method) {
    if (p < 1) throw std::invalid_argument("p must be positive");
    if (n_max < 0) throw std::invalid_argument("n must be non-negative");
    if (method == SeqMethod::recurrence) return prefix_recurrence(id, p, n_max);
    std::vector<BigInt> v;
    v.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) v.push_back(closed_form(id, p, n));
    return v;
}

}  // namespace magma
