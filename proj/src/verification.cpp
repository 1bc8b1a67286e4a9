#include "magma/verification.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "magma/bijection.hpp"
#include "magma/enumerate.hpp"

namespace magma {

namespace {

constexpr size_t kWitnessCap = 500;
constexpr int kWitnessNorm = 5;

// Slices above this total are pointless for hand inspection and slow to
// enumerate; default_bound(family) trims until the cumulative count fits.
const BigInt kSliceBudget = 20000;

std::string fmt_app(int map_index, const std::vector<std::string>& children) {
    std::string out = "m" + std::to_string(map_index) + "(";
    for (size_t i = 0; i < children.size(); ++i) {
        if (i) out += ", ";
        out += "\"" + children[i] + "\"";
    }
    return out + ")";
}

void fail(CheckEntry& entry, const std::string& counterexample) {
    if (entry.pass) {
        entry.pass = false;
        entry.counterexample = counterexample;
    }
}

// All compositions of s into a parts, each part >= 1, lex order.
std::vector<std::vector<int>> compositions(int s, int a) {
    std::vector<std::vector<int>> out;
    if (s < a) return out;
    std::vector<int> cur(a);
    std::function<void(int, int)> go = [&](int idx, int rem) {
        if (idx == a - 1) {
            cur[idx] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 1; rem - v >= a - 1 - idx; ++v) {
            cur[idx] = v;
            go(idx + 1, rem - v);
        }
    };
    go(0, s);
    return out;
}

}  // namespace

bool VerificationReport::passed() const {
    for (const CheckEntry& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string VerificationReport::to_text() const {
    std::ostringstream os;
    os << "== " << title << " ==\n";
    os << "families:";
    for (const std::string& f : family_ids) os << " " << f;
    os << "\nmax norm: " << max_norm << "\n";
    if (!counts.empty()) {
        os << "counts (norm: observed / expected):\n";
        for (const CountRow& row : counts) {
            os << "  " << row.norm << ": " << row.observed << " / " << row.expected;
            if (row.observed != row.expected) os << "   <-- mismatch";
            os << "\n";
        }
    }
    os << "checks:\n";
    for (const CheckEntry& c : checks) {
        os << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        if (!c.pass) os << "\n         counterexample: " << c.counterexample;
        os << "\n";
    }
    if (!witnesses.empty()) {
        os << "witnesses (" << witnesses.size() << " pairs):\n";
        size_t shown = 0;
        for (const auto& [a, b] : witnesses) {
            if (shown++ == 100) {
                os << "  ...\n";
                break;
            }
            os << "  \"" << a << "\" <-> \"" << b << "\"\n";
        }
    }
    os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string VerificationReport::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["title"] = title;
    j["families"] = family_ids;
    j["max_norm"] = max_norm;
    j["passed"] = passed();
    j["checks"] = nlohmann::ordered_json::array();
    for (const CheckEntry& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    if (!counts.empty()) {
        j["counts"] = nlohmann::ordered_json::array();
        for (const CountRow& row : counts) {
            j["counts"].push_back({{"norm", row.norm},
                                   {"observed", row.observed.str()},
                                   {"expected", row.expected.str()}});
        }
    }
    if (!witnesses.empty()) {
        j["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& [a, b] : witnesses)
            j["witnesses"].push_back({{"source", a}, {"target", b}});
    }
    return j.dump(indent);
}

int default_bound(ClassId id) {
    switch (id) {
        case ClassId::fibonacci: return 12;
        case ClassId::motzkin: return 10;
        case ClassId::schroeder: return 8;
        case ClassId::fuss_catalan: return 13;
        default: return 8;
    }
}

int default_bound(const Family& family) {
    int bound = default_bound(family.cls().id);
    std::vector<BigInt> counts = count_terms_by_norm(family.cls(), family.gen_count(), bound);
    BigInt cum = 0;
    int best = 1;
    for (int n = 1; n <= bound; ++n) {
        cum += counts[n - 1];
        if (cum <= kSliceBudget) best = n;
    }
    return best;
}

BigInt expected_count(ClassId id, int p, int n) {
    switch (id) {
        case ClassId::fibonacci:
            return seq_value({SequenceId::p_fibonacci, p, n});
        case ClassId::motzkin:
            return seq_value({SequenceId::p_motzkin, p, n - 1});
        case ClassId::schroeder:
            return seq_value({SequenceId::p_schroder, p, n - 1});
        case ClassId::fuss_catalan:
            if (n % 2 == 0) return 0;
            return seq_value({SequenceId::p_fuss_catalan, p, (n - 1) / 2});
        default:
            throw std::invalid_argument("expected_count: no sequence attached to this class");
    }
}

std::vector<std::vector<std::string>> enumerate_family(const Family& family, int max_norm) {
    std::vector<std::vector<TermPtr>> terms =
        enumerate_terms(family.cls(), family.gen_count(), max_norm);
    std::vector<std::vector<std::string>> groups(max_norm);
    for (int n = 1; n <= max_norm; ++n) {
        std::set<std::string> seen;
        for (const TermPtr& t : terms[n - 1]) {
            std::string obj = evaluate(family, t);
            if (seen.insert(obj).second) groups[n - 1].push_back(obj);
        }
    }
    return groups;
}

VerificationReport check_counts(const Family& family, int max_norm) {
    VerificationReport rep;
    rep.title = "count check: " + family.id();
    rep.family_ids = {family.id()};
    rep.max_norm = max_norm;

    CheckEntry agree{"per-norm count agreement"};
    std::vector<BigInt> observed(static_cast<size_t>(max_norm), BigInt(-1));
    if (family.tier() == FamilyTier::reference) {
        observed = count_terms_by_norm(family.cls(), family.gen_count(), max_norm);
        agree.detail = "observed via dynamic programming over canonical terms";
    } else {
        try {
            auto groups = enumerate_family(family, max_norm);
            for (int n = 1; n <= max_norm; ++n) observed[n - 1] = BigInt(groups[n - 1].size());
        } catch (const ObjectError& e) {
            fail(agree, std::string("enumeration aborted: ") + e.what());
        }
        agree.detail = "observed via exhaustive enumeration";
    }

    for (int n = 1; n <= max_norm; ++n) {
        CountRow row;
        row.norm = n;
        row.observed = observed[n - 1];
        row.expected = expected_count(family.cls().id, family.gen_count(), n);
        if (row.observed != row.expected)
            fail(agree, "norm " + std::to_string(n) + ": observed " + row.observed.str() +
                            ", expected " + row.expected.str());
        rep.counts.push_back(row);
    }
    rep.checks.push_back(agree);
    return rep;
}

VerificationReport check_freeness(const Family& family, int max_norm) {
    VerificationReport rep;
    rep.title = "freeness check: " + family.id();
    rep.family_ids = {family.id()};
    rep.max_norm = max_norm;

    const ClassSpec& cls = family.cls();
    CheckEntry gens{"generator norms and irreducibility"};
    CheckEntry inj{"per-map injectivity"};
    CheckEntry disj{"cross-map image disjointness"};
    CheckEntry addi{"norm additivity"};
    CheckEntry round{"factor/apply round-trip"};
    CheckEntry canon{"canonical stability"};

    // origin[obj] = (map_index, children); map_index 0 marks a generator.
    std::map<std::string, std::pair<int, std::vector<std::string>>> origin;
    std::vector<std::vector<std::string>> slices(max_norm + 1);

    for (int g = 0; g < family.gen_count(); ++g) {
        std::string s;
        try {
            s = family.generator(g);
            long long nm = family.norm(s);
            if (nm != cls.norm.gen_norms[g])
                fail(gens, "generator \"" + s + "\" has norm " + std::to_string(nm) +
                               ", declared " + std::to_string(cls.norm.gen_norms[g]));
            FactorResult fr = family.factor(s);
            if (fr.reducible || fr.gen_index != g)
                fail(gens, "factor(\"" + s + "\") does not name generator " + std::to_string(g));
            if (family.canonicalize(s) != s)
                fail(canon, "generator \"" + s + "\" is not canonically stable");
            if (nm >= 1 && nm <= max_norm && !origin.count(s)) {
                origin[s] = {0, {std::to_string(g)}};
                slices[nm].push_back(s);
            }
        } catch (const ObjectError& e) {
            fail(gens, std::string("generator ") + std::to_string(g) + ": " + e.what());
        }
    }

    for (int n = 1; n <= max_norm; ++n) {
        for (int i = 1; i <= cls.signature.map_count(); ++i) {
            int arity = cls.signature.arity(i);
            int kappa = cls.norm.offsets[i - 1];
            for (const std::vector<int>& parts : compositions(n - kappa, arity)) {
                // odometer over the child slices named by parts
                std::vector<size_t> idx(arity, 0);
                bool empty = false;
                for (int j = 0; j < arity; ++j)
                    if (slices[parts[j]].empty()) empty = true;
                if (empty) continue;
                while (true) {
                    std::vector<std::string> tuple(arity);
                    for (int j = 0; j < arity; ++j) tuple[j] = slices[parts[j]][idx[j]];
                    std::string label = fmt_app(i, tuple);
                    try {
                        std::string obj = family.apply(i, tuple);
                        long long nm = family.norm(obj);
                        if (nm != n)
                            fail(addi, label + " = \"" + obj + "\" has norm " +
                                           std::to_string(nm) + ", expected " + std::to_string(n));
                        auto it = origin.find(obj);
                        if (it != origin.end()) {
                            const auto& [pmap, pkids] = it->second;
                            if (pmap == i)
                                fail(inj, label + " collides with " + fmt_app(pmap, pkids) +
                                              " on \"" + obj + "\"");
                            else if (pmap == 0)
                                fail(disj, label + " reproduces generator \"" + obj + "\"");
                            else
                                fail(disj, label + " collides with " + fmt_app(pmap, pkids) +
                                               " on \"" + obj + "\"");
                        } else {
                            origin[obj] = {i, tuple};
                            if (n <= max_norm) slices[n].push_back(obj);
                        }
                        FactorResult fr = family.factor(obj);
                        if (!fr.reducible || fr.map_index != i || fr.children != tuple)
                            fail(round, "factor(\"" + obj + "\") does not invert " + label);
                        if (family.canonicalize(obj) != obj)
                            fail(canon, "\"" + obj + "\" from " + label +
                                            " is not canonically stable");
                    } catch (const ObjectError& e) {
                        fail(round, label + ": " + e.what());
                    }
                    int j = arity - 1;
                    while (j >= 0 && ++idx[j] == slices[parts[j]].size()) idx[j--] = 0;
                    if (j < 0) break;
                }
            }
        }
    }

    gens.detail = std::to_string(family.gen_count()) + " generator(s), all factored irreducible";
    size_t total = origin.size();
    round.detail = std::to_string(total) + " objects factored and re-applied";
    rep.checks = {gens, inj, disj, addi, round, canon};
    return rep;
}

VerificationReport check_bijection(const Family& src, const Family& dst, int max_norm) {
    if (!src.cls().same_class(dst.cls()))
        throw std::invalid_argument("check_bijection: families are not in the same class");

    VerificationReport rep;
    rep.title = "bijection check: " + src.id() + " -> " + dst.id();
    rep.family_ids = {src.id(), dst.id()};
    rep.max_norm = max_norm;

    CheckEntry card{"per-norm cardinality match"};
    CheckEntry norms{"norm preservation"};
    CheckEntry round{"round-trip identity"};
    CheckEntry inj{"image distinctness"};
    CheckEntry member{"image membership in target slice"};

    std::vector<std::vector<std::string>> sgroups = enumerate_family(src, max_norm);
    std::vector<std::vector<std::string>> dgroups = enumerate_family(dst, max_norm);

    size_t converted = 0;
    for (int n = 1; n <= max_norm; ++n) {
        const auto& from = sgroups[n - 1];
        const auto& to = dgroups[n - 1];
        if (from.size() != to.size())
            fail(card, "norm " + std::to_string(n) + ": " + std::to_string(from.size()) + " in " +
                           src.id() + " vs " + std::to_string(to.size()) + " in " + dst.id());
        std::set<std::string> target(to.begin(), to.end());
        std::set<std::string> seen;
        for (const std::string& o : from) {
            try {
                ConversionRecord rec = convert(src, dst, o);
                ++converted;
                if (!convert_norm_check(rec))
                    fail(norms, "\"" + o + "\" -> \"" + rec.target + "\" changes norm (" +
                                    std::to_string(rec.source_norm) + " vs " +
                                    std::to_string(rec.target_norm) + ")");
                if (!target.count(rec.target))
                    fail(member, "\"" + o + "\" -> \"" + rec.target + "\" is outside the " +
                                     dst.id() + " slice at norm " + std::to_string(n));
                if (!seen.insert(rec.target).second)
                    fail(inj, "two objects map to \"" + rec.target + "\" at norm " +
                                  std::to_string(n));
                ConversionRecord back = convert(dst, src, rec.target);
                if (back.target != o)
                    fail(round, "\"" + o + "\" -> \"" + rec.target + "\" -> \"" + back.target +
                                    "\"");
                if (n <= kWitnessNorm && rep.witnesses.size() < kWitnessCap)
                    rep.witnesses.emplace_back(o, rec.target);
            } catch (const ObjectError& e) {
                fail(round, "\"" + o + "\": " + e.what());
            }
        }
    }

    round.detail = std::to_string(converted) + " objects converted both ways";
    rep.checks = {card, norms, round, inj, member};
    return rep;
}

}  // namespace magma
