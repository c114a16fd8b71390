#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string cli = QGC_CLI_PATH;
const std::string fixtures = QGC_FIXTURES_DIR;

struct RunResult {
    int status = -1;
    std::string out;
};

// run the binary, capturing stdout; stderr goes to a scratch file
RunResult run(const std::string& args) {
    std::string out_path = "/tmp/qgc_cli_test_out.txt";
    std::string cmd = cli + " " + args + " > " + out_path + " 2>/tmp/qgc_cli_test_err.txt";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(out_path);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string write_temp(const std::string& name, const std::string& text) {
    std::string path = "/tmp/" + name;
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(run("").status == 2);
    CHECK(run("bogus-subcommand").status == 2);
    CHECK(run("compile").status == 2);          // missing argument
    CHECK(run("--help").status == 0);
}

TEST_CASE("missing or malformed files exit with 1 and name the path") {
    CHECK(run("stats /tmp/definitely_missing.txt").status == 1);
    std::string err = slurp("/tmp/qgc_cli_test_err.txt");
    CHECK(err.find("error:") != std::string::npos);
    CHECK(err.find("/tmp/definitely_missing.txt") != std::string::npos);

    std::string bad = write_temp("qgc_bad_graph.txt", "not a graph\n");
    CHECK(run("compile " + bad).status == 1);
    CHECK(slurp("/tmp/qgc_cli_test_err.txt").find("qgc_bad_graph.txt") != std::string::npos);
}

TEST_CASE("stats prints key=value metrics") {
    RunResult r = run("stats " + fixtures + "/pattern_k3.txt");
    CHECK(r.status == 0);
    CHECK(r.out.find("measurements=") != std::string::npos);
    CHECK(r.out.find("rounds=") != std::string::npos);
    CHECK(r.out.find("area=") != std::string::npos);
}

TEST_CASE("convert emits graph code blocks and a circuit") {
    RunResult r = run("convert " + fixtures + "/code_6q.txt");
    CHECK(r.status == 0);
    CHECK(r.out.find("6 4 2") == 0);
    CHECK(r.out.find("perm 1 2 3 4 5 6") != std::string::npos);
}

TEST_CASE("graph emits the augmented graph, optionally as dot") {
    RunResult r = run("graph " + fixtures + "/code_6q.txt");
    CHECK(r.status == 0);
    CHECK(r.out.find("8 ") == 0);  // 6 code vertices + 2 inputs
    RunResult d = run("graph --dot " + fixtures + "/code_6q.txt");
    CHECK(d.status == 0);
    CHECK(d.out.find("graph g {") == 0);
}

TEST_CASE("compile/verify/run round trip") {
    std::string gpath = write_temp("qgc_k3.txt", "3 3\n1 2\n1 3\n2 3\n");
    std::string ppath = "/tmp/qgc_k3_pattern.txt";
    CHECK(run("compile " + gpath + " -o " + ppath).status == 0);
    CHECK(slurp(ppath).find("lattice ") == 0);

    RunResult v = run("verify " + ppath + " " + gpath + " --seed 5");
    CHECK(v.status == 0);
    CHECK(v.out == "pass\n");

    RunResult t = run("run " + ppath + " --seed 5");
    CHECK(t.status == 0);
    CHECK(t.out.find("outcome m1.0 = ") != std::string::npos);

    // compact layout also verifies
    std::string cpath = "/tmp/qgc_k3_compact.txt";
    CHECK(run("compile --compact " + gpath + " -o " + cpath).status == 0);
    CHECK(run("verify " + cpath + " " + gpath + " --seed 6").out == "pass\n");

    // verifying against the wrong target fails with exit 1
    std::string wrong = write_temp("qgc_p3.txt", "3 2\n1 2\n2 3\n");
    RunResult w = run("verify " + ppath + " " + wrong + " --seed 5");
    CHECK(w.status == 1);
    CHECK(w.out == "fail\n");
}

TEST_CASE("encode prints the stabilizers of the encoded state") {
    std::string in = write_temp("qgc_input.txt", "2 2\n00|10 +\n00|01 +\n");
    RunResult r = run("encode " + fixtures + "/code_6q.txt " + in + " --seed 1");
    CHECK(r.status == 0);
    CHECK(r.out.find("6 6") == 0);  // six generators on six qubits
}
