#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "magma/bijection.hpp"
#include "magma/enumerate.hpp"
#include "magma/family.hpp"
#include "magma/sequences.hpp"
#include "magma/term.hpp"
#include "magma/verification.hpp"

namespace {

using magma::BigInt;
using magma::FamilyPtr;
using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct VerifyFailed {};  // reports already emitted; process must exit 1

int norm_cap() {
    const char* env = std::getenv("MAGMA_MAX_NORM");
    if (!env || !*env) return 20;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw UsageError("MAGMA_MAX_NORM is set but not a positive integer");
    return static_cast<int>(v);
}

void check_bound(int n) {
    if (n < 1) throw UsageError("--max-norm must be at least 1");
    int cap = norm_cap();
    if (n > cap)
        throw UsageError("requested bound " + std::to_string(n) + " exceeds the safety cap " +
                         std::to_string(cap) + " (override with MAGMA_MAX_NORM)");
}

FamilyPtr need_family(const std::string& id) {
    FamilyPtr f = magma::family_by_id(id);
    if (!f) throw UsageError("unknown family id \"" + id + "\" (run: magma families)");
    return f;
}

// Object/term arguments with shell-hostile characters can come from --input
// FILE ("-" reads standard input); only the trailing newline is stripped.
std::string resolve_text(const std::string& positional, bool have_positional,
                         const std::string& input) {
    if (input.empty()) {
        if (!have_positional) throw UsageError("missing argument (inline or via --input)");
        return positional;
    }
    if (have_positional) throw UsageError("give the argument either inline or via --input, not both");
    std::ostringstream buf;
    if (input == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) throw UsageError("cannot open --input file \"" + input + "\"");
        buf << in.rdbuf();
    }
    std::string text = buf.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
}

std::string class_title(magma::ClassId id) {
    switch (id) {
        case magma::ClassId::fibonacci: return "fibonacci";
        case magma::ClassId::motzkin: return "motzkin";
        case magma::ClassId::schroeder: return "schroeder";
        case magma::ClassId::fuss_catalan: return "fuss_catalan";
        default: return "custom";
    }
}

void cmd_families(const std::string& class_filter, bool json_out) {
    std::vector<FamilyPtr> rows;
    for (const FamilyPtr& f : magma::registry_list()) {
        if (!class_filter.empty() && class_title(f->cls().id) != class_filter) continue;
        rows.push_back(f);
    }
    if (!class_filter.empty() && rows.empty())
        throw UsageError("no families in class \"" + class_filter +
                         "\" (classes: fibonacci motzkin schroeder fuss_catalan)");
    if (json_out) {
        ordered_json j;
        j["families"] = ordered_json::array();
        for (const FamilyPtr& f : rows) {
            ordered_json e;
            e["id"] = f->id();
            e["class"] = class_title(f->cls().id);
            e["tier"] = magma::tier_name(f->tier());
            e["display_name"] = f->display_name();
            e["generators"] = f->gen_count();
            e["grammar"] = f->grammar();
            j["families"].push_back(e);
        }
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (const FamilyPtr& f : rows) {
        std::cout << f->id() << "\t" << class_title(f->cls().id) << "\t"
                  << magma::tier_name(f->tier()) << "\t" << f->display_name() << "\n";
    }
}

void cmd_seq(const std::string& name, int p, int n, bool closed, bool json_out) {
    const magma::SequenceId* id = magma::sequence_by_name(name);
    if (!id)
        throw UsageError("unknown sequence \"" + name +
                         "\" (one of: p_catalan p_fibonacci p_motzkin p_schroder p_fuss_catalan)");
    if (p < 1) throw UsageError("--p must be at least 1");
    if (n < 0) throw UsageError("--n must be non-negative");
    if (n > norm_cap())
        throw UsageError("requested index " + std::to_string(n) + " exceeds the safety cap " +
                         std::to_string(norm_cap()) + " (override with MAGMA_MAX_NORM)");
    magma::SeqMethod method = closed ? magma::SeqMethod::closed_form : magma::SeqMethod::recurrence;
    std::vector<BigInt> values = magma::seq_prefix(*id, p, n, method);
    if (json_out) {
        ordered_json j;
        j["sequence"] = name;
        j["p"] = p;
        j["method"] = closed ? "closed_form" : "recurrence";
        j["values"] = ordered_json::array();
        for (const BigInt& v : values) j["values"].push_back(v.str());
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (int k = 0; k <= n; ++k) std::cout << k << ": " << values[k] << "\n";
}

void cmd_enumerate(const std::string& family_id, int max_norm, bool json_out) {
    check_bound(max_norm);
    FamilyPtr fam = need_family(family_id);
    auto groups = magma::enumerate_family(*fam, max_norm);
    if (json_out) {
        ordered_json j;
        j["family"] = fam->id();
        j["norms"] = ordered_json::object();
        for (int n = 1; n <= max_norm; ++n) j["norms"][std::to_string(n)] = groups[n - 1];
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (int n = 1; n <= max_norm; ++n) {
        std::cout << "norm " << n << ":\n";
        for (const std::string& obj : groups[n - 1]) std::cout << "  " << obj << "\n";
    }
}

void cmd_count(const std::string& family_id, int max_norm, bool check, bool json_out) {
    check_bound(max_norm);
    FamilyPtr fam = need_family(family_id);
    if (check) {
        magma::VerificationReport rep = magma::check_counts(*fam, max_norm);
        std::cout << (json_out ? rep.to_json(2) + "\n" : rep.to_text());
        if (!rep.passed()) throw VerifyFailed{};
        return;
    }
    std::vector<BigInt> observed;
    if (fam->tier() == magma::FamilyTier::reference) {
        observed = magma::count_terms_by_norm(fam->cls(), fam->gen_count(), max_norm);
    } else {
        for (const auto& group : magma::enumerate_family(*fam, max_norm))
            observed.push_back(BigInt(group.size()));
    }
    if (json_out) {
        ordered_json j;
        j["family"] = fam->id();
        j["max_norm"] = max_norm;
        j["checked"] = false;
        j["counts"] = ordered_json::array();
        for (int n = 1; n <= max_norm; ++n)
            j["counts"].push_back({{"norm", n}, {"observed", observed[n - 1].str()}});
        std::cout << j.dump(2) << "\n";
        return;
    }
    for (int n = 1; n <= max_norm; ++n) std::cout << n << ": " << observed[n - 1] << "\n";
}

void cmd_decompose(const std::string& family_id, const std::string& object, bool json_out) {
    FamilyPtr fam = need_family(family_id);
    magma::TermPtr term = magma::decompose(*fam, object);
    if (json_out) {
        ordered_json j;
        j["family"] = fam->id();
        j["object"] = fam->canonicalize(object);
        j["term"] = magma::print_term(term);
        j["norm"] = magma::term_norm(term, fam->cls());
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << magma::print_term(term) << "\n";
}

void cmd_evaluate(const std::string& family_id, const std::string& term_text, bool json_out) {
    FamilyPtr fam = need_family(family_id);
    magma::TermPtr term = magma::parse_term(term_text, fam->cls().signature, fam->gen_count());
    std::string object = magma::evaluate(*fam, term);
    if (json_out) {
        ordered_json j;
        j["family"] = fam->id();
        j["term"] = magma::print_term(term);
        j["object"] = object;
        j["norm"] = fam->norm(object);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << object << "\n";
}

void cmd_convert(const std::string& src_id, const std::string& dst_id, const std::string& object,
                 bool show_term, bool force, bool json_out) {
    FamilyPtr src = need_family(src_id);
    FamilyPtr dst = need_family(dst_id);
    if (force)
        std::cerr << "warning: --force-signature-only converts across classes by raw signature;"
                  << " norms are not preserved\n";
    magma::ConversionRecord rec;
    try {
        rec = magma::convert(*src, *dst, object, force);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    if (json_out) {
        ordered_json j;
        j["source_family"] = rec.source_family;
        j["source"] = rec.source;
        j["term"] = magma::print_term(rec.term);
        j["target_family"] = rec.target_family;
        j["target"] = rec.target;
        j["norm"] = rec.source_norm;
        if (rec.target_norm != rec.source_norm) j["target_norm"] = rec.target_norm;
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << rec.target << "\n";
    if (show_term) std::cout << "term: " << magma::print_term(rec.term) << "\n";
}

void cmd_verify(const std::vector<std::string>& ids, bool all, int max_norm, bool json_out) {
    if (all == !ids.empty())
        throw UsageError("verify takes a family, a pair of families, or --all");
    if (max_norm != 0) check_bound(max_norm);

    std::vector<magma::VerificationReport> reports;
    if (all) {
        for (const FamilyPtr& f : magma::registry_list()) {
            int bound = max_norm ? max_norm : magma::default_bound(*f);
            reports.push_back(magma::check_counts(*f, bound));
            reports.push_back(magma::check_freeness(*f, bound));
        }
    } else if (ids.size() == 1) {
        FamilyPtr f = need_family(ids[0]);
        int bound = max_norm ? max_norm : magma::default_bound(*f);
        reports.push_back(magma::check_counts(*f, bound));
        reports.push_back(magma::check_freeness(*f, bound));
    } else {
        FamilyPtr src = need_family(ids[0]);
        FamilyPtr dst = need_family(ids[1]);
        if (!src->cls().same_class(dst->cls()))
            throw UsageError("families " + src->id() + " and " + dst->id() +
                             " are not in the same class");
        int bound = max_norm ? max_norm
                             : std::min(magma::default_bound(*src), magma::default_bound(*dst));
        reports.push_back(magma::check_bijection(*src, *dst, bound));
    }

    bool ok = true;
    for (const magma::VerificationReport& rep : reports) ok = ok && rep.passed();
    if (json_out) {
        if (reports.size() == 1) {
            std::cout << reports[0].to_json(2) << "\n";
        } else {
            ordered_json j;
            j["passed"] = ok;
            j["reports"] = ordered_json::array();
            for (const magma::VerificationReport& rep : reports)
                j["reports"].push_back(nlohmann::ordered_json::parse(rep.to_json()));
            std::cout << j.dump(2) << "\n";
        }
    } else {
        for (size_t i = 0; i < reports.size(); ++i) {
            if (i) std::cout << "\n";
            std::cout << reports[i].to_text();
        }
    }
    if (!ok) throw VerifyFailed{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"free n-magma families, universal bijections, and verification"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json_out = false;
    app.add_flag("--json", json_out, "emit JSON instead of text");

    auto* families = app.add_subcommand("families", "list the family registry");
    std::string class_filter;
    families->add_option("--class", class_filter,
                         "restrict to one class (fibonacci|motzkin|schroeder|fuss_catalan)");

    auto* seq = app.add_subcommand("seq", "print a p-analogue sequence prefix");
    std::string seq_name;
    int seq_p = 1, seq_n = 0;
    bool seq_closed = false;
    seq->add_option("id", seq_name, "sequence id, e.g. p_motzkin")->required();
    seq->add_option("--p", seq_p, "number of generators (default 1)");
    seq->add_option("--n", seq_n, "last index of the prefix")->required();
    seq->add_flag("--closed-form", seq_closed, "use the closed form instead of the recurrence");

    auto* enumerate = app.add_subcommand("enumerate", "list all objects up to a norm bound");
    std::string enum_family;
    int enum_norm = 0;
    enumerate->add_option("family", enum_family, "family id")->required();
    enumerate->add_option("--max-norm", enum_norm, "norm bound")->required();

    auto* count = app.add_subcommand("count", "per-norm object counts");
    std::string count_family;
    int count_norm = 0;
    bool count_check = false;
    count->add_option("family", count_family, "family id")->required();
    count->add_option("--max-norm", count_norm, "norm bound")->required();
    count->add_flag("--check", count_check, "compare against the class sequence");

    auto* decompose = app.add_subcommand("decompose", "factor an object into its canonical term");
    std::string dec_family, dec_object, dec_input;
    bool dec_have_object = false;
    decompose->add_option("family", dec_family, "family id")->required();
    decompose->add_option("object", dec_object, "object text");
    decompose->add_option("--input", dec_input, "read the object from FILE (\"-\" = stdin)");

    auto* evaluate = app.add_subcommand("evaluate", "evaluate a term in a family");
    std::string eval_family, eval_term, eval_input;
    evaluate->add_option("family", eval_family, "family id")->required();
    evaluate->add_option("term", eval_term, "term text, e.g. m1(m2(e))");
    evaluate->add_option("--input", eval_input, "read the term from FILE (\"-\" = stdin)");

    auto* convert = app.add_subcommand("convert", "map an object into another family");
    std::string conv_src, conv_dst, conv_object, conv_input;
    bool conv_show_term = false, conv_force = false;
    convert->add_option("source", conv_src, "source family id")->required();
    convert->add_option("target", conv_dst, "target family id")->required();
    convert->add_option("object", conv_object, "object text");
    convert->add_option("--input", conv_input, "read the object from FILE (\"-\" = stdin)");
    convert->add_flag("--show-term", conv_show_term, "also print the intermediate term");
    convert->add_flag("--force-signature-only", conv_force,
                      "allow cross-class conversion on equal signatures (norms not preserved)");

    auto* verify = app.add_subcommand("verify", "run verification reports");
    std::vector<std::string> verify_ids;
    bool verify_all = false;
    int verify_norm = 0;
    verify->add_option("families", verify_ids, "one family (counts+freeness) or two (bijection)")
        ->expected(0, 2);
    verify->add_flag("--all", verify_all, "verify every registered family");
    verify->add_option("--max-norm", verify_norm, "override the per-family default bound");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (families->parsed()) {
            cmd_families(class_filter, json_out);
        } else if (seq->parsed()) {
            cmd_seq(seq_name, seq_p, seq_n, seq_closed, json_out);
        } else if (enumerate->parsed()) {
            cmd_enumerate(enum_family, enum_norm, json_out);
        } else if (count->parsed()) {
            cmd_count(count_family, count_norm, count_check, json_out);
        } else if (decompose->parsed()) {
            dec_have_object = decompose->count("object") > 0;
            cmd_decompose(dec_family, resolve_text(dec_object, dec_have_object, dec_input),
                          json_out);
        } else if (evaluate->parsed()) {
            cmd_evaluate(eval_family,
                         resolve_text(eval_term, evaluate->count("term") > 0, eval_input),
                         json_out);
        } else if (convert->parsed()) {
            cmd_convert(conv_src, conv_dst,
                        resolve_text(conv_object, convert->count("object") > 0, conv_input),
                        conv_show_term, conv_force, json_out);
        } else if (verify->parsed()) {
            cmd_verify(verify_ids, verify_all, verify_norm, json_out);
        }
    } catch (const VerifyFailed&) {
        return 1;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const magma::ObjectError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const magma::TermParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
