#include "magma/enumerate.hpp"

#include <stdexcept>

namespace magma {

namespace {

long long generator_norm(const ClassSpec& cls, int gen_index) {
    const auto& gn = cls.norm.gen_norms;
    if (gn.empty()) return 1;
    size_t i = static_cast<size_t>(gen_index);
    return i < gn.size() ? gn[i] : gn.front();
}

// All ways to split `total` into `parts` ordered summands, each >= 1,
// in lexicographic order.
void compositions_into(long long total, int parts, std::vector<long long>& cur,
                       std::vector<std::vector<long long>>& out) {
    if (parts == 1) {
        if (total < 1) return;
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (long long c = 1; c <= total - (parts - 1); ++c) {
        cur.push_back(c);
        compositions_into(total - c, parts - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<long long>> compositions(long long total, int parts) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    if (total >= parts) compositions_into(total, parts, cur, out);
    return out;
}

}  // namespace

std::vector<BigInt> count_terms_by_norm(const ClassSpec& cls, int gen_count, int max_norm) {
    if (gen_count < 1) throw std::invalid_argument("gen_count must be positive");
    if (max_norm < 1) throw std::invalid_argument("max_norm must be positive");
    std::vector<BigInt> dp(static_cast<size_t>(max_norm) + 1, 0);
    for (int g = 0; g < gen_count; ++g) {
        long long gn = generator_norm(cls, g);
        if (gn <= max_norm) dp[static_cast<size_t>(gn)] += 1;
    }
    for (long long n = 1; n <= max_norm; ++n) {
        for (int m = 1; m <= cls.signature.map_count(); ++m) {
            int arity = cls.signature.arity(m);
            long long offset = cls.norm.offsets.at(static_cast<size_t>(m - 1));
            long long budget = n - offset;
            if (budget < arity) continue;
            // convolution: every child norm is strictly below n, so dp values
            // used here are already final
            std::vector<BigInt> partial{1};
            for (int a = 0; a < arity; ++a) {
                std::vector<BigInt> next(static_cast<size_t>(budget) + 1, 0);
                for (size_t s = 0; s < partial.size(); ++s) {
                    if (partial[s] == 0) continue;
                    for (long long c = 1; static_cast<long long>(s) + c <= budget; ++c)
                        next[s + static_cast<size_t>(c)] += partial[s] * dp[static_cast<size_t>(c)];
                }
                partial = std::move(next);
            }
            if (static_cast<long long>(partial.size()) > budget)
                dp[static_cast<size_t>(n)] += partial[static_cast<size_t>(budget)];
        }
    }
    return std::vector<BigInt>(dp.begin() + 1, dp.end());
}

std::vector<std::vector<TermPtr>> enumerate_terms(const ClassSpec& cls, int gen_count,
                                                  int max_norm) {
    if (gen_count < 1) throw std::invalid_argument("gen_count must be positive");
    if (max_norm < 1) throw std::invalid_argument("max_norm must be positive");
    std::vector<std::vector<TermPtr>> groups(static_cast<size_t>(max_norm));
    auto slice = [&](long long n) -> std::vector<TermPtr>& {
        return groups[static_cast<size_t>(n - 1)];
    };
    for (long long n = 1; n <= max_norm; ++n) {
        for (int g = 0; g < gen_count; ++g)
            if (generator_norm(cls, g) == n) slice(n).push_back(Term::gen(g));
        for (int m = 1; m <= cls.signature.map_count(); ++m) {
            int arity = cls.signature.arity(m);
            long long offset = cls.norm.offsets.at(static_cast<size_t>(m - 1));
            long long budget = n - offset;
            if (budget < arity) continue;
            for (const auto& comp : compositions(budget, arity)) {
                bool feasible = true;
                for (long long c : comp)
                    if (slice(c).empty()) { feasible = false; break; }
                if (!feasible) continue;
                std::vector<size_t> idx(comp.size(), 0);
                for (;;) {
                    std::vector<TermPtr> children;
                    children.reserve(comp.size());
                    for (size_t a = 0; a < comp.size(); ++a)
                        children.push_back(slice(comp[a])[idx[a]]);
                    slice(n).push_back(Term::app(m, std::move(children)));
                    // odometer: rightmost child varies fastest
                    size_t a = comp.size();
                    while (a-- > 0) {
                        if (++idx[a] < slice(comp[a]).size()) break;
                        idx[a] = 0;
                        if (a == 0) goto next_composition;
                    }
                }
            next_composition:;
            }
        }
    }
    return groups;
}

}  // namespace magma
