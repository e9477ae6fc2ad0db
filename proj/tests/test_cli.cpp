// End-to-end checks of the cikit binary: exit-code contract, deterministic
// output, golden comparisons against library results.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "cikit/cikit.hpp"

#ifndef CIKIT_BIN
#error "CIKIT_BIN must point at the cikit executable"
#endif
#ifndef CIKIT_DATA_DIR
#error "CIKIT_DATA_DIR must point at the sample data directory"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

std::string temp_dir() {
    static const std::string dir = [] {
        std::string d = "/tmp/cikit-cli-test-XXXXXX";
        std::vector<char> buf(d.begin(), d.end());
        buf.push_back('\0');
        if (!mkdtemp(buf.data())) throw std::runtime_error("mkdtemp failed");
        return std::string(buf.data());
    }();
    return dir;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

RunResult run(const std::string& args) {
    static int counter = 0;
    std::string out_file = temp_dir() + "/out" + std::to_string(counter++) + ".txt";
    std::string cmd = std::string(CIKIT_BIN) + " " + args + " > " + out_file + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.stdout_text = slurp(out_file);
    return r;
}

std::string data(const std::string& name) { return std::string(CIKIT_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = temp_dir() + "/" + name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    return path;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("check reports the contraction violation and exits 1") {
        RunResult r = run("check " + data("contraction-gap.rel") + " --rules D,U,C,L");
        CHECK(r.exit_code == 1);
        CHECK(r.stdout_text.find("D: closed") != std::string::npos);
        CHECK(r.stdout_text.find("U: closed") != std::string::npos);
        CHECK(r.stdout_text.find("C: violation:") != std::string::npos);
        CHECK(r.stdout_text.find("[a ; b c ;]") != std::string::npos);
        CHECK(r.stdout_text.find("L: closed") != std::string::npos);
    }

    TEST_CASE("check exits 0 when every rule is closed") {
        RunResult r = run("check " + data("lp-pair.rel") + " --rules L,P");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("L: closed") != std::string::npos);
        CHECK(r.stdout_text.find("P: closed") != std::string::npos);
    }

    TEST_CASE("dual applied twice is byte-identical to the canonical serialization") {
        RunResult once = run("dual " + data("contraction-gap.rel"));
        REQUIRE(once.exit_code == 0);
        std::string once_path = write_temp("dual-once.rel", once.stdout_text);
        RunResult twice = run("dual " + once_path);
        REQUIRE(twice.exit_code == 0);

        cikit::Relation original = cikit::load_relation(data("contraction-gap.rel"));
        CHECK(twice.stdout_text == cikit::format_relation(original));
    }

    TEST_CASE("close emits the least fixed point") {
        RunResult r = run("close " + data("contraction-gap.rel") + " --rules D,U,C");
        REQUIRE(r.exit_code == 0);
        cikit::Relation closed = cikit::close_under(
            cikit::load_relation(data("contraction-gap.rel")),
            {cikit::Rule::D, cikit::Rule::U, cikit::Rule::C});
        CHECK(r.stdout_text == cikit::format_relation(closed));
    }

    TEST_CASE("close refuses non-Horn rules with exit 2") {
        RunResult r = run("close " + data("contraction-gap.rel") + " --rules DT");
        CHECK(r.exit_code == 2);
    }

    TEST_CASE("separation emits the four-path relation") {
        RunResult r = run("separation " + data("four-path.graph"));
        REQUIRE(r.exit_code == 0);
        cikit::Relation sep =
            cikit::separation_relation(cikit::load_graph(data("four-path.graph")));
        CHECK(r.stdout_text == cikit::format_relation(sep));
    }

    TEST_CASE("extract-graph recovers the four-path from its separation relation") {
        std::string sep_path = write_temp(
            "four-path-sep.rel",
            cikit::format_relation(
                cikit::separation_relation(cikit::load_graph(data("four-path.graph")))));
        RunResult r = run("extract-graph " + sep_path + " --mode un");
        REQUIRE(r.exit_code == 0);
        CHECK(r.stdout_text == cikit::format_graph(cikit::load_graph(data("four-path.graph"))));

        RunResult adj = run("extract-graph " + sep_path + " --mode un --adjacency");
        CHECK(adj.stdout_text.find("# adj a:") != std::string::npos);
    }

    TEST_CASE("gaussian extracts the chain independence") {
        RunResult r = run("gaussian " + data("three-chain.cov"));
        REQUIRE(r.exit_code == 0);
        CHECK(r.stdout_text ==
              "ground: a b c\n"
              "a ; c ; b\n");
    }

    TEST_CASE("verify passes pseudo-conc at p=3 with exit 0") {
        RunResult r = run("verify pseudo-conc --p 3");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("result: PASSED") != std::string::npos);
        CHECK(r.stdout_text.find("counterexamples: 0") != std::string::npos);
    }

    TEST_CASE("verify falsifies the deliberately false claim with exit 1") {
        RunResult r = run("verify localizable-implies-C --p 3");
        CHECK(r.exit_code == 1);
        CHECK(r.stdout_text.find("result: FALSIFIED") != std::string::npos);
    }

    TEST_CASE("verify rejects unknown claims with exit 2") {
        RunResult r = run("verify not-a-claim");
        CHECK(r.exit_code == 2);
    }

    TEST_CASE("parse errors exit 2") {
        std::string bad = write_temp("bad.rel", "ground: a b\na ; a ;\n");
        RunResult r = run("check " + bad + " --rules D");
        CHECK(r.exit_code == 2);
        RunResult missing = run("check /nonexistent.rel --rules D");
        CHECK(missing.exit_code == 2);
    }

    TEST_CASE("usage errors exit 2") {
        CHECK(run("").exit_code == 2);
        CHECK(run("close").exit_code == 2);
        CHECK(run("check " + data("lp-pair.rel") + " --rules Q").exit_code == 2);
        CHECK(run("verify semi-parsim --p 4 --exhaustive").exit_code == 2);
    }

    TEST_CASE("identical seeds give byte-identical reports") {
        std::string args = "search dual-operator-PR --p 4 --budget 300 --seed 12";
        RunResult a = run(args);
        RunResult b = run(args);
        CHECK(a.exit_code == 0);
        CHECK(a.stdout_text == b.stdout_text);
        CHECK(a.stdout_text.find("seed: 12") != std::string::npos);
        CHECK(a.stdout_text.find("budget: 300") != std::string::npos);
    }

    TEST_CASE("json reports are machine readable") {
        RunResult r = run("verify semi-parsim --p 3 --json");
        CHECK(r.exit_code == 0);
        CHECK(r.stdout_text.find("\"passed\": true") != std::string::npos);
        CHECK(r.stdout_text.find("\"checked\": 512") != std::string::npos);
    }

    TEST_CASE("out flag writes the same bytes as stdout") {
        std::string out_path = temp_dir() + "/sep-out.rel";
        RunResult direct = run("separation " + data("four-path.graph"));
        RunResult to_file = run("separation " + data("four-path.graph") + " --out " + out_path);
        CHECK(to_file.exit_code == 0);
        CHECK(to_file.stdout_text.empty());
        CHECK(slurp(out_path) == direct.stdout_text);
    }
}
