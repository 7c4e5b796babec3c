#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tca/cli.hpp"
#include "tca/families.hpp"
#include "tca/io.hpp"

using namespace tca;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path, std::ios::binary);
    file << content;
    return path.string();
}

std::string t_file() { return temp_file("tca_cli_T.aut", serialize_automaton(automaton_T())); }
std::string cerny4_file() { return temp_file("tca_cli_c4.aut", serialize_automaton(cerny(4))); }

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli: decide") {
    CliResult yes = run({"decide", t_file()});
    CHECK(yes.code == 0);
    CHECK(contains(yes.out, "verdict: totally compatible"));

    CliResult no = run({"decide", cerny4_file(), "--witness-pairs"});
    CHECK(no.code == 1);
    CHECK(contains(no.out, "not totally compatible"));
    CHECK(contains(no.out, "{1,3}"));
    CHECK(contains(no.out, "{2,4}"));
}

TEST_CASE("cli: decide --json output is byte-stable") {
    CliResult first = run({"decide", cerny4_file(), "--json"});
    CliResult second = run({"decide", cerny4_file(), "--json"});
    CHECK(first.code == 1);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "\"totally_compatible\": false"));
    CHECK(contains(first.out, "\"witness_pairs\""));
}

TEST_CASE("cli: decide --dot writes the pair graph") {
    auto dot_path = std::filesystem::temp_directory_path() / "tca_cli_T.dot";
    CliResult res = run({"decide", t_file(), "--dot", dot_path.string()});
    CHECK(res.code == 0);
    std::ifstream file(dot_path);
    std::stringstream buf;
    buf << file.rdbuf();
    CHECK(contains(buf.str(), "digraph pair_graph {"));
    CHECK(contains(buf.str(), "\"{1,2}\" [peripheries=2];"));
    CHECK(contains(buf.str(), "\"{1,3}\" -> \"{1,2}\" [label=\"c\"];"));
}

TEST_CASE("cli: classify") {
    CliResult res = run({"classify", t_file()});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "c: permutation"));
    CHECK(contains(res.out, "t: 1-defect exc=2 dup=1 root={1,2}"));
}

TEST_CASE("cli: defect-word") {
    CliResult ok = run({"defect-word", t_file(), "1", "3"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "word: ct"));

    CliResult unreachable = run({"defect-word", cerny4_file(), "1", "3"});
    CHECK(unreachable.code == 1);
    CHECK(contains(unreachable.err, "not totally compatible"));

    CHECK(run({"defect-word", t_file(), "1", "1"}).code == 2);
    CHECK(run({"defect-word", t_file(), "1", "9"}).code == 2);
}

TEST_CASE("cli: synthesize") {
    CliResult ok = run({"synthesize", t_file(), "1,2,3"});
    CHECK(ok.code == 0);
    CHECK(contains(ok.out, "word: tct"));

    CliResult fails = run({"synthesize", cerny4_file(), "1,3|2|4"});
    CHECK(fails.code == 1);

    CHECK(run({"synthesize", t_file(), "1,2"}).code == 2);  // state 3 missing
}

TEST_CASE("cli: witness") {
    CliResult t = run({"witness", t_file()});
    CHECK(t.code == 0);
    CHECK(contains(t.out, "partitions: 5"));
    CHECK(contains(t.out, "all 5 partitions have verified words"));
    CHECK(contains(t.out, "1,2,3"));
    CHECK(contains(t.out, "ε"));

    CliResult c4 = run({"witness", cerny4_file()});
    CHECK(c4.code == 1);
    CHECK(contains(c4.out, "partitions have no word"));
}

TEST_CASE("cli: oracle modes and exit codes") {
    CHECK(run({"oracle", t_file(), "tc"}).code == 0);
    CHECK(run({"oracle", t_file(), "sync"}).code == 0);
    CHECK(run({"oracle", t_file(), "minimal"}).code == 1);  // T is not minimal

    CliResult c4tc = run({"oracle", cerny4_file(), "tc"});
    CHECK(c4tc.code == 1);
    CHECK(contains(c4tc.out, "1,3|2|4"));
    CHECK(run({"oracle", cerny4_file(), "reach"}).code == 0);

    CHECK(run({"oracle", t_file(), "bogus"}).code == 2);
    CHECK(run({"oracle", t_file(), "tc", "--cap", "2"}).code == 2);
}

TEST_CASE("cli: gen output parses back") {
    CliResult t = run({"gen", "t"});
    CHECK(t.code == 0);
    CHECK(parse_automaton(t.out) == automaton_T());

    CliResult c4 = run({"gen", "cerny", "4", "--format", "json"});
    CHECK(c4.code == 0);
    CHECK(parse_automaton(c4.out) == cerny(4));

    CliResult r1 = run({"gen", "random", "5", "3", "7"});
    CliResult r2 = run({"gen", "random", "5", "3", "7"});
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    CHECK(parse_automaton(r1.out) == random_automaton(5, 3, 7));

    CHECK(run({"gen", "bogus"}).code == 2);
    CHECK(run({"gen", "cerny"}).code == 2);
    CHECK(run({"gen", "cerny", "1"}).code == 2);
}

TEST_CASE("cli: reads stdin when the file is '-'") {
    std::istringstream input(serialize_automaton(automaton_T()));
    auto* old = std::cin.rdbuf(input.rdbuf());
    CliResult res = run({"decide", "-"});
    std::cin.rdbuf(old);
    CHECK(res.code == 0);
    CHECK(contains(res.out, "verdict: totally compatible"));
}

TEST_CASE("cli: bench runs a tiny grid") {
    CliResult res = run({"bench", "--sizes", "4,8", "--reps", "1", "--seed", "1"});
    CHECK(res.code == 0);
    CHECK(contains(res.out, "log-log slope"));
}

TEST_CASE("cli: usage errors") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"decide"}).code == 2);
    CHECK(run({"decide", "/nonexistent/file.aut"}).code == 2);
    CHECK(run({"--help"}).code == 0);
    CHECK(contains(run({"--help"}).out, "decide"));
}

TEST_CASE("cli: rejects malformed automata with parse context") {
    std::string bad = temp_file("tca_cli_bad.aut", "states: 3\nletters: c t\nc: 2 3\nt: 1 1 3\n");
    CliResult res = run({"decide", bad});
    CHECK(res.code == 2);
    CHECK(contains(res.err, "line 3"));
}
