#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"hankel-lab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = hlab::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
    std::istringstream is(text);
    std::string l;
    while (std::getline(is, l)) {
        if (l == line) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("expand prints the expansion as one comma line") {
    CliResult r = run({"expand", "--powers", "1,1,3,4,8,16", "--terms", "14"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1,2,4,8,17,36,76,161,342,726,1541,3272,6948,14753\n");
    CHECK(r.err.empty());
}

TEST_CASE("expand accepts a catalog rule and the order alias") {
    CliResult r = run({"expand", "--rule", "catalan_cf_powers", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1,2,5,14,42\n");

    CliResult gap = run({"expand", "--rule", "gap_cf_powers", "--terms", "8"});
    CliResult tpl = run({"expand", "--rule", "gap_template(3)", "--terms", "8"});
    CHECK(gap.code == 0);
    CHECK(gap.out == tpl.out);
}

TEST_CASE("expand applies sign cycles") {
    CliResult r = run({"expand", "--powers", "1,1,1,1,1,1,1,1,1", "--signs", "+",
                       "--terms", "8"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,-1,2,-5,14,-42,132,-429,1430\n");
}

TEST_CASE("expand reads @file inputs") {
    const std::string path = "/tmp/hlab_cli_expand_values.txt";
    {
        std::ofstream f(path);
        f << "1 1\n3\t4\n8,16\n";
    }
    CliResult r = run({"expand", "--powers", "@" + path, "--terms", "14"});
    CHECK(r.code == 0);
    CHECK(r.out == "1,1,2,4,8,17,36,76,161,342,726,1541,3272,6948,14753\n");

    CliResult missing = run({"expand", "--powers", "@/tmp/does-not-exist-hlab", "--terms", "4"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("cannot open") != std::string::npos);
}

TEST_CASE("expand JSON carries schema, depth, signs") {
    CliResult r = run({"expand", "--powers", "1,1,1,1,1,1", "--terms", "5",
                       "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["schema_version"] == 1);
    CHECK(j["command"] == "expand");
    CHECK(j["order"] == 5);
    CHECK(j["signs"] == "-");
    CHECK(j["depth"] == 6);
    CHECK(j["a"] == json::array({"1", "1", "2", "5", "14", "42"}));

    // --format may come before the subcommand as well
    CliResult pre = run({"--format", "json", "expand", "--powers", "1,1,1,1,1,1",
                         "--terms", "5"});
    CHECK(pre.code == 0);
    CHECK(json::parse(pre.out) == j);
}

TEST_CASE("expand usage errors exit 2") {
    CHECK(run({"expand", "--terms", "5"}).code == 2);
    CHECK(run({"expand", "--powers", "1,1", "--rule", "catalan_cf_powers",
               "--terms", "5"}).code == 2);
    CHECK(run({"expand", "--powers", "1,1"}).code == 2);  // missing --terms
    CHECK(run({"expand", "--powers", "1,1", "--terms", "201"}).code == 2);
    CHECK(run({"expand", "--powers", "1,0", "--terms", "5"}).code == 2);
    CHECK(run({"expand", "--powers", "1,x", "--terms", "5"}).code == 2);
    CHECK(run({"expand", "--powers", "", "--terms", "5"}).code == 2);
    CHECK(run({"expand", "--rule", "natural_pattern", "--terms", "5"}).code == 2);
    CliResult bad_signs =
        run({"expand", "--powers", "1,1", "--signs", "-x", "--terms", "3"});
    CHECK(bad_signs.code == 2);
    CHECK(bad_signs.err.find("sign cycle") != std::string::npos);
}

TEST_CASE("hankel prints values, support, unit flag") {
    CliResult r = run({"hankel", "--seq", "1,1,2,5,14"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "h: 1,1,1"));
    CHECK(has_line(r.out, "support: 0,1,2"));
    CHECK(has_line(r.out, "in_unit_set: true"));
    CHECK(has_line(r.out, "shift: 0"));

    // shift 2: h_0 = a_2 = 2, h_1 = det [[2,5],[5,14]] = 3
    CliResult shifted = run({"hankel", "--seq", "1,1,2,5,14", "--shift", "2"});
    CHECK(shifted.code == 0);
    CHECK(has_line(shifted.out, "h: 2,3"));
    CHECK(has_line(shifted.out, "in_unit_set: false"));
    CHECK(has_line(shifted.out, "shift: 2"));
}

TEST_CASE("hankel JSON round trips the result") {
    CliResult r = run({"hankel", "--seq", "1,0,5", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["command"] == "hankel");
    CHECK(j["values"] == json::array({"1", "5"}));
    CHECK(j["support"] == json::array({0, 1}));
    CHECK(j["in_unit_set"] == false);
    CHECK(j["shift"] == 0);
}

TEST_CASE("hankel guardrails") {
    CHECK(run({"hankel"}).code == 2);
    CHECK(run({"hankel", "--seq", "1,2", "--shift", "-1"}).code == 2);
    CHECK(run({"hankel", "--seq", "1,2", "--shift", "4"}).code == 2);  // too few terms

    std::string many = "1";
    for (int i = 1; i < 123; ++i) many += ",1";
    CliResult big = run({"hankel", "--seq", many});
    CHECK(big.code == 2);
    CHECK(big.err.find("pass fewer terms") != std::string::npos);
}

TEST_CASE("p2b and b2p invert each other") {
    CliResult forward = run({"p2b", "--powers", "1,1,3,4,8"});
    CHECK(forward.code == 0);
    CHECK(forward.out == "0,1,3,5,11\n");

    CliResult back = run({"b2p", "--pattern", "0,1,3,5,11"});
    CHECK(back.code == 0);
    CHECK(back.out == "1,1,3,4,8\n");

    CliResult json_fwd = run({"p2b", "--powers", "1,1,3,4,8", "--format", "json"});
    json j = json::parse(json_fwd.out);
    CHECK(j["command"] == "p2b");
    CHECK(j["powers"] == json::array({1, 1, 3, 4, 8}));
    CHECK(j["pattern"] == json::array({0, 1, 3, 5, 11}));
}

TEST_CASE("b2p rejects unrepresentable patterns with a clear message") {
    CliResult r = run({"b2p", "--pattern", "0,1,1,1,2"});
    CHECK(r.code == 2);
    CHECK(r.err.find("p_3") != std::string::npos);

    CHECK(run({"b2p", "--pattern", "1,2"}).code == 2);
    CHECK(run({"p2b", "--powers", "2,1"}).code == 2);
    CHECK(run({"p2b"}).code == 2);
    CHECK(run({"b2p"}).code == 2);
}

TEST_CASE("check passes and exits 0 on a conforming source") {
    CliResult r = run({"check", "--powers", "1,1,1,1,1,1,1,1,1,1,1", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "verdict: PASS"));
    CHECK(has_line(r.out, "signs: -"));
    CHECK(has_line(r.out, "depth: 11"));
    CHECK(has_line(r.out, "h: 1,1,1,1,1,1"));
    CHECK(has_line(r.out, "expected_support: 0,1,2,3,4,5"));
    CHECK(has_line(r.out, "in_unit_set: true"));
    CHECK(has_line(r.out, "support_match: true"));
    CHECK(has_line(r.out, "multiplicity_table: 0:1,1:2,2:2,3:2,4:2,5:2"));
    CHECK(has_line(r.out, "nonzero_sign_sequence: +,+,+,+,+,+"));
    CHECK(has_line(r.out, "window: 5"));
}

TEST_CASE("check fails with exit 1 and a support diff") {
    CliResult r = run({"check", "--powers", "1,5,1", "--order", "2"});
    CHECK(r.code == 1);
    CHECK(has_line(r.out, "verdict: FAIL"));
    CHECK(has_line(r.out, "reason: support mismatch on [0,1]: expected {0,1}, observed {0}"));
}

TEST_CASE("check reports inconclusive windows with exit 0") {
    CliResult r = run({"check", "--pattern", "0,1", "--order", "5"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "verdict: INCONCLUSIVE"));
    CHECK(has_line(r.out, "window: 0"));
}

TEST_CASE("check usage errors exit 2") {
    CHECK(run({"check", "--powers", "1,1"}).code == 2);  // missing order
    CHECK(run({"check", "--powers", "1,1", "--order", "1"}).code == 2);
    CHECK(run({"check", "--powers", "1,1", "--order", "61"}).code == 2);
    CHECK(run({"check", "--order", "5"}).code == 2);
    CHECK(run({"check", "--powers", "1,1", "--pattern", "0,1", "--order", "5"}).code == 2);
    CHECK(run({"check", "--pattern", "0,2,2,2", "--order", "5"}).code == 2);
    CHECK(run({"check", "--pattern", "0,3,2", "--order", "5"}).code == 2);
    CHECK(run({"check", "--powers", "1,1", "--signs", "?", "--order", "5"}).code == 2);
}

TEST_CASE("check plain and JSON agree") {
    std::vector<std::string> base = {"check", "--pattern", "0,1,3,5,11,21,43,85,171",
                                     "--order", "8"};
    CliResult plain = run(base);
    std::vector<std::string> jargs = base;
    jargs.push_back("--format");
    jargs.push_back("json");
    CliResult jres = run(jargs);
    CHECK(plain.code == 0);
    CHECK(jres.code == 0);

    json j = json::parse(jres.out);
    CHECK(j["verdict"] == "PASS");
    CHECK(j["schema_version"] == 1);
    CHECK(j["source"]["kind"] == "pattern");
    CHECK(j["derived"]["kind"] == "powers");
    CHECK(j["derived"]["values"] == json::array({1, 1, 3, 4, 8, 16, 32, 64, 128}));
    CHECK(j["window"] == 8);

    std::string joined;
    for (const auto& v : j["h"]["values"]) {
        if (!joined.empty()) joined += ',';
        joined += v.get<std::string>();
    }
    CHECK(has_line(plain.out, "h: " + joined));
    CHECK(has_line(plain.out, "verdict: " + j["verdict"].get<std::string>()));
    CHECK(has_line(plain.out, "window: " + std::to_string(j["window"].get<long long>())));
}

TEST_CASE("convolve prints the alternating self-convolution") {
    CliResult r = run({"convolve", "--seq", "1,0,-1,0,1"});
    CHECK(r.code == 0);
    CHECK(has_line(r.out, "e: 1,0,-2,0,3"));
    CHECK(has_line(r.out, "e_even: 1,-2,3"));

    CliResult j = run({"convolve", "--seq", "1,1", "--format", "json"});
    json parsed = json::parse(j.out);
    CHECK(parsed["e"] == json::array({"1", "0"}));
    CHECK(parsed["e_even"] == json::array({"1"}));
    CHECK(run({"convolve"}).code == 2);
}

TEST_CASE("catalog lists and evaluates entries") {
    CliResult listing = run({"catalog"});
    CHECK(listing.code == 0);
    CHECK(listing.out.find("catalan\tterms\t") != std::string::npos);
    CHECK(listing.out.find("pentagonal_cf_powers\tcf-powers\t") != std::string::npos);

    CliResult fib = run({"catalog", "--name", "fibonacci", "--terms", "9"});
    CHECK(fib.code == 0);
    CHECK(fib.out == "0,1,1,2,3,5,8,13,21,34\n");

    CliResult tpl = run({"catalog", "--name", "gap_template(5)", "--terms", "5"});
    CHECK(tpl.code == 0);
    CHECK(tpl.out == "1,5,6,2,2,2\n");

    CliResult dflt = run({"catalog", "--name", "natural_pattern"});
    CHECK(dflt.code == 0);
    CHECK(dflt.out == "0,1,2,3,4,5,6,7,8,9,10,11,12\n");

    CHECK(run({"catalog", "--name", "nope"}).code == 2);
    CHECK(run({"catalog", "--name", "catalan", "--terms", "500"}).code == 2);
}

TEST_CASE("catalog JSON includes identities") {
    CliResult r = run({"catalog", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["entries"].size() == 34);
    CHECK(j["identities"].size() == 20);
    bool saw = false;
    for (const auto& e : j["entries"]) {
        if (e["name"] == "motzkin_cf_powers") {
            saw = true;
            CHECK(e["kind"] == "cf-powers");
        }
    }
    CHECK(saw);
}

TEST_CASE("reproduce-paper reruns the full battery") {
    CliResult r = run({"reproduce-paper"});
    CHECK(r.code == 0);
    int pass_lines = 0;
    std::istringstream is(r.out);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("[PASS] ", 0) == 0) ++pass_lines;
        CHECK(line.rfind("[FAIL]", 0) != 0);
    }
    CHECK(pass_lines == 15);
    CHECK(has_line(r.out, "all criteria passed"));
}

TEST_CASE("reproduce-paper JSON verdict") {
    CliResult r = run({"reproduce-paper", "--format", "json"});
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["all_pass"] == true);
    CHECK(j["results"].size() == 15);
    for (const auto& res : j["results"]) CHECK(res["pass"] == true);
}

TEST_CASE("top-level usage") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"expand", "--powers", "1,1", "--terms", "3",
               "--format", "yaml"}).code == 2);
}
