#include "cli_app.hpp"

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hankel_lab/analysis.hpp"
#include "hankel_lab/catalog.hpp"
#include "hankel_lab/contfrac.hpp"
#include "hankel_lab/errors.hpp"
#include "hankel_lab/hankel.hpp"
#include "hankel_lab/pattern.hpp"
#include "hankel_lab/report_json.hpp"
#include "hankel_lab/verify.hpp"

namespace hlab {

namespace {

constexpr int kMaxExpandOrder = 200;
constexpr int kMaxHankelOrder = 60;

using nlohmann::json;

// Accepts "1,2,3", whitespace-separated text, or "@file" with either.
std::vector<std::int64_t> parse_values(const std::string& text) {
    std::string data = text;
    if (!data.empty() && data[0] == '@') {
        std::ifstream in(data.substr(1));
        if (!in) throw Error("cannot open '" + data.substr(1) + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        data = buf.str();
    }
    for (char& ch : data) {
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == '\t') ch = ' ';
    }
    std::vector<std::int64_t> vals;
    std::istringstream is(data);
    std::string tok;
    while (is >> tok) {
        try {
            std::size_t pos = 0;
            long long v = std::stoll(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            vals.push_back(v);
        } catch (const std::exception&) {
            throw Error("not an integer: '" + tok + "'");
        }
    }
    if (vals.empty()) throw Error("empty value list");
    return vals;
}

std::vector<int> parse_signs(const std::string& s) {
    if (s.empty() || s == "-") return {};
    std::vector<int> cycle;
    for (char ch : s) {
        if (ch == '-') {
            cycle.push_back(-1);
        } else if (ch == '+') {
            cycle.push_back(1);
        } else {
            throw Error("sign cycle may contain only '+' and '-', got '" + s + "'");
        }
    }
    return cycle;
}

IntSeq to_intseq(const std::vector<std::int64_t>& v) {
    IntSeq r;
    r.reserve(v.size());
    for (auto x : v) r.emplace_back(x);
    return r;
}

template <typename T>
std::string join(const std::vector<T>& v) {
    std::string s;
    for (const T& x : v) {
        if (!s.empty()) s += ',';
        if constexpr (std::is_same_v<T, Int>) {
            s += x.str();
        } else {
            s += std::to_string(x);
        }
    }
    return s;
}

void print_report_plain(std::ostream& out, const ConjectureReport& rep) {
    out << "verdict: " << rep.verdict << "\n";
    if (!rep.verdict_reason.empty()) out << "reason: " << rep.verdict_reason << "\n";
    out << "source: " << rep.source_kind << " " << join(rep.source_values) << "\n"
        << "signs: " << rep.signs << "\n"
        << "powers: " << join(rep.powers) << "\n"
        << "pattern: " << join(rep.pattern) << "\n"
        << "depth: " << rep.depth << "\n"
        << "a: " << join(rep.a) << "\n"
        << "h: " << join(rep.h.values) << "\n"
        << "expected_support: " << join(rep.expected_support) << "\n"
        << "observed_support: " << join(rep.observed_support) << "\n"
        << "in_unit_set: " << (rep.in_unit_set ? "true" : "false") << "\n"
        << "support_match: " << (rep.support_match ? "true" : "false") << "\n";
    std::string mult;
    for (const auto& [value, count] : rep.multiplicity_table) {
        if (!mult.empty()) mult += ',';
        mult += std::to_string(value) + ":" + std::to_string(count);
    }
    out << "multiplicity_table: " << mult << "\n";
    std::string signs;
    for (int s : rep.nonzero_sign_sequence) {
        if (!signs.empty()) signs += ',';
        signs += (s > 0 ? "+" : "-");
    }
    out << "nonzero_sign_sequence: " << signs << "\n"
        << "window: " << rep.window << "\n";
}

struct Options {
    std::string format = "plain";
    std::string powers;
    std::string pattern;
    std::string seq;
    std::string rule;
    std::string signs;
    std::string name;
    int order = -1;
    int shift = 0;
};

int cmd_expand(const Options& opt, std::ostream& out) {
    if (opt.powers.empty() == opt.rule.empty()) {
        throw Error("expand needs exactly one of --powers or --rule");
    }
    if (opt.order < 0 || opt.order > kMaxExpandOrder) {
        throw Error("--terms must be between 0 and " + std::to_string(kMaxExpandOrder));
    }
    std::vector<int> signs = parse_signs(opt.signs);
    CfSpec spec = opt.rule.empty() ? CfSpec::from_powers(parse_values(opt.powers))
                                   : Catalog::instance().cf_spec(opt.rule);
    spec.sign_cycle = signs;
    std::size_t depth = required_depth(spec.powers, opt.order);
    IntSeq a = cf_expand_with_depth(spec, opt.order, depth);
    if (opt.format == "json") {
        out << json{{"schema_version", kSchemaVersion},
                    {"command", "expand"},
                    {"order", opt.order},
                    {"signs", render_sign_cycle(signs)},
                    {"depth", depth},
                    {"a", seq_json(a)}}
                   .dump(2)
            << "\n";
    } else {
        out << join(a) << "\n";
    }
    return 0;
}

int cmd_hankel(const Options& opt, std::ostream& out) {
    if (opt.seq.empty()) throw Error("hankel needs --seq");
    if (opt.shift < 0) throw Error("--shift must be >= 0");
    IntSeq a = to_intseq(parse_values(opt.seq));
    std::size_t shift = static_cast<std::size_t>(opt.shift);
    if (a.size() >= 1 + shift &&
        (a.size() - 1 - shift) / 2 > static_cast<std::size_t>(kMaxHankelOrder)) {
        throw Error("input implies Hankel order above " + std::to_string(kMaxHankelOrder) +
                    "; pass fewer terms");
    }
    HankelResult h = hankel_transform(a, shift);
    if (opt.format == "json") {
        json j = to_json(h);
        j["schema_version"] = kSchemaVersion;
        j["command"] = "hankel";
        out << j.dump(2) << "\n";
    } else {
        out << "h: " << join(h.values) << "\n"
            << "support: " << join(h.support) << "\n"
            << "in_unit_set: " << (h.in_unit_set ? "true" : "false") << "\n"
            << "shift: " << h.shift << "\n";
    }
    return 0;
}

int cmd_p2b(const Options& opt, std::ostream& out) {
    if (opt.powers.empty()) throw Error("p2b needs --powers");
    std::vector<std::int64_t> p = parse_values(opt.powers);
    PatternSeq b = p_to_b(PowerSeq{p});
    if (opt.format == "json") {
        out << json{{"schema_version", kSchemaVersion},
                    {"command", "p2b"},
                    {"powers", p},
                    {"pattern", b.b}}
                   .dump(2)
            << "\n";
    } else {
        out << join(b.b) << "\n";
    }
    return 0;
}

int cmd_b2p(const Options& opt, std::ostream& out) {
    if (opt.pattern.empty()) throw Error("b2p needs --pattern");
    std::vector<std::int64_t> b = parse_values(opt.pattern);
    PowerSeq p = b_to_p(PatternSeq{b});
    if (opt.format == "json") {
        out << json{{"schema_version", kSchemaVersion},
                    {"command", "b2p"},
                    {"pattern", b},
                    {"powers", p.p}}
                   .dump(2)
            << "\n";
    } else {
        out << join(p.p) << "\n";
    }
    return 0;
}

int cmd_check(const Options& opt, std::ostream& out) {
    if (opt.powers.empty() == opt.pattern.empty()) {
        throw Error("check needs exactly one of --powers or --pattern");
    }
    if (opt.order < 2 || opt.order > kMaxHankelOrder) {
        throw Error("--order must be between 2 and " + std::to_string(kMaxHankelOrder));
    }
    std::vector<int> signs = parse_signs(opt.signs);
    ConjectureSource source =
        opt.powers.empty()
            ? ConjectureSource::from_pattern(parse_values(opt.pattern), signs)
            : ConjectureSource::from_powers(parse_values(opt.powers), signs);
    ConjectureReport rep = check_conjecture(source, opt.order);
    if (opt.format == "json") {
        out << to_json(rep).dump(2) << "\n";
    } else {
        print_report_plain(out, rep);
    }
    return rep.verdict == "FAIL" ? 1 : 0;
}

int cmd_convolve(const Options& opt, std::ostream& out) {
    if (opt.seq.empty()) throw Error("convolve needs --seq");
    IntSeq h = to_intseq(parse_values(opt.seq));
    IntSeq e = eta_convolution(h);
    IntSeq even = even_subsequence(e);
    if (opt.format == "json") {
        out << json{{"schema_version", kSchemaVersion},
                    {"command", "convolve"},
                    {"input", seq_json(h)},
                    {"e", seq_json(e)},
                    {"e_even", seq_json(even)}}
                   .dump(2)
            << "\n";
    } else {
        out << "e: " << join(e) << "\n"
            << "e_even: " << join(even) << "\n";
    }
    return 0;
}

int cmd_catalog(const Options& opt, std::ostream& out) {
    const Catalog& cat = Catalog::instance();
    if (!opt.name.empty()) {
        int order = opt.order < 0 ? 12 : opt.order;
        if (order > kMaxExpandOrder) {
            throw Error("--terms must be at most " + std::to_string(kMaxExpandOrder));
        }
        IntSeq terms = cat.named_terms(opt.name, order);
        if (opt.format == "json") {
            out << json{{"schema_version", kSchemaVersion},
                        {"command", "catalog"},
                        {"name", opt.name},
                        {"order", order},
                        {"terms", seq_json(terms)}}
                       .dump(2)
                << "\n";
        } else {
            out << join(terms) << "\n";
        }
        return 0;
    }
    if (opt.format == "json") {
        json entries = json::array();
        for (const NamedRule& e : cat.entries()) {
            entries.push_back(
                json{{"name", e.name}, {"kind", e.kind}, {"description", e.description}});
        }
        json identities = json::array();
        for (const IdentityRule& e : cat.identities()) {
            identities.push_back(json{{"name", e.name}, {"description", e.description}});
        }
        out << json{{"schema_version", kSchemaVersion},
                    {"command", "catalog"},
                    {"entries", entries},
                    {"identities", identities}}
                   .dump(2)
            << "\n";
    } else {
        for (const NamedRule& e : cat.entries()) {
            out << e.name << "\t" << e.kind << "\t" << e.description << "\n";
        }
    }
    return 0;
}

int cmd_reproduce(const Options& opt, std::ostream& out) {
    std::vector<CheckResult> results = acceptance_battery();
    bool all_pass = true;
    for (const CheckResult& r : results) all_pass = all_pass && r.pass;
    if (opt.format == "json") {
        json arr = json::array();
        for (const CheckResult& r : results) {
            arr.push_back(json{{"id", r.id},
                               {"label", r.label},
                               {"pass", r.pass},
                               {"detail", r.detail}});
        }
        out << json{{"schema_version", kSchemaVersion},
                    {"command", "reproduce-paper"},
                    {"results", arr},
                    {"all_pass", all_pass}}
                   .dump(2)
            << "\n";
    } else {
        for (const CheckResult& r : results) {
            out << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.label;
            if (!r.pass) out << "  (" << r.detail << ")";
            out << "\n";
        }
        out << (all_pass ? "all criteria passed" : "some criteria FAILED") << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Hankel transforms of continued fraction expansions"};
    app.fallthrough(true);
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"plain", "json"}));

    CLI::App* expand = app.add_subcommand(
        "expand", "expand a continued fraction given by CF powers into a_0..a_N");
    expand->add_option("--powers", opt.powers, "CF powers, comma separated or @file");
    expand->add_option("--rule", opt.rule, "catalog power rule name");
    expand->add_option("--signs", opt.signs, "sign cycle such as - or --++");
    expand->add_option("--terms,--order", opt.order, "expansion order N (prints a_0..a_N)");

    CLI::App* hankel = app.add_subcommand("hankel", "Hankel transform of a sequence");
    hankel->add_option("--seq", opt.seq, "sequence terms, comma separated or @file");
    hankel->add_option("--shift", opt.shift, "index shift of the Hankel matrix entries");

    CLI::App* p2b = app.add_subcommand("p2b", "map CF powers to the Hankel pattern sequence");
    p2b->add_option("--powers", opt.powers, "CF powers");

    CLI::App* b2p = app.add_subcommand("b2p", "map a Hankel pattern sequence to CF powers");
    b2p->add_option("--pattern", opt.pattern, "pattern values");

    CLI::App* check = app.add_subcommand(
        "check", "run the full conjecture pipeline from powers or a pattern");
    check->add_option("--powers", opt.powers, "CF powers");
    check->add_option("--pattern", opt.pattern, "pattern values");
    check->add_option("--signs", opt.signs, "sign cycle");
    check->add_option("--order", opt.order, "comparison order N");

    CLI::App* convolve = app.add_subcommand(
        "convolve", "convolve a sequence with its sign-alternating copy");
    convolve->add_option("--seq", opt.seq, "sequence terms");

    CLI::App* catalog = app.add_subcommand("catalog", "list or evaluate registered sequences");
    catalog->add_option("--name", opt.name, "entry to evaluate (also gap_template(r))");
    catalog->add_option("--terms,--order", opt.order, "terms to print (default 13: 0..12)");

    CLI::App* reproduce = app.add_subcommand(
        "reproduce-paper", "recompute every frozen reference table and print a verdict table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*expand) return cmd_expand(opt, out);
        if (*hankel) return cmd_hankel(opt, out);
        if (*p2b) return cmd_p2b(opt, out);
        if (*b2p) return cmd_b2p(opt, out);
        if (*check) return cmd_check(opt, out);
        if (*convolve) return cmd_convolve(opt, out);
        if (*catalog) return cmd_catalog(opt, out);
        if (*reproduce) return cmd_reproduce(opt, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace hlab
