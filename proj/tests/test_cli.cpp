#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cli.hpp"
#include "qshuffle/errors.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
    std::string err;
};

// one invocation with process-like isolation: the global caps are restored
// afterward so cap flags cannot leak between cases
RunResult run(const std::vector<std::string>& args) {
    qshuffle::Caps saved = qshuffle::caps();
    std::ostringstream out, err;
    RunResult r;
    r.code = qshuffle::run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    qshuffle::caps() = saved;
    return r;
}

int count_lines(const std::string& text) {
    int lines = 0;
    for (char c : text) lines += c == '\n' ? 1 : 0;
    return lines;
}

} // namespace

TEST_CASE("prob prints the exact rational") {
    RunResult r = run({"prob", "--perm", "213", "--weights", "x=1/2,1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/8\n");
    CHECK(r.err.empty());

    RunResult comma = run({"prob", "--perm", "2,1,3", "--weights", "x=1/2,1/2"});
    CHECK(comma.out == "1/8\n");

    RunResult geo = run({"prob", "--perm", "21", "--weights", "geom:t=1/2"});
    CHECK(geo.code == 0);
    CHECK(geo.out == "1/3\n");

    RunResult uq = run({"prob", "--n", "2", "--perm", "21", "--weights", "q=2"});
    CHECK(uq.code == 0);
    CHECK(uq.out == "1/4\n");
}

TEST_CASE("prob json envelope carries command, parameters, result") {
    RunResult r =
        run({"prob", "--perm", "213", "--weights", "x=1/2,1/2", "--format", "json"});
    CHECK(r.code == 0);
    json doc = json::parse(r.out);
    CHECK(doc["command"] == "prob");
    CHECK(doc["parameters"]["n"] == 3);
    CHECK(doc["parameters"]["perm"] == "213");
    CHECK(doc["parameters"]["weights"] == "x=1/2,1/2");
    CHECK(doc["result"]["prob"] == "1/8");
    CHECK(doc["result"]["prob_decimal"] == "0.125000000000");
}

TEST_CASE("prob csv quotes fields containing commas") {
    RunResult r =
        run({"prob", "--perm", "21", "--weights", "x=1/3,2/3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out == "n,perm,weights,prob\n2,21,\"x=1/3,2/3\",2/9\n");
}

TEST_CASE("dist lists every permutation and the total") {
    RunResult r = run({"dist", "--n", "2", "--weights", "x=1/2,1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "12 3/4\n21 1/4\ntotal 1\n");

    RunResult js = run({"dist", "--n", "2", "--weights", "q=2", "--format", "json"});
    json doc = json::parse(js.out);
    CHECK(doc["result"]["probs"]["12"] == "3/4");
    CHECK(doc["result"]["probs"]["21"] == "1/4");
    CHECK(doc["result"]["total"] == "1");
}

TEST_CASE("dist on a geometric law totals one through the closed form") {
    RunResult r = run({"dist", "--n", "3", "--weights", "geom:t=1/2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("total 1\n") != std::string::npos);
}

TEST_CASE("sample reruns are byte identical and honor count") {
    std::vector<std::string> args{"sample", "--n",    "5",  "--weights",
                                  "q=4",    "--seed", "42", "--count",
                                  "3"};
    RunResult first = run(args);
    RunResult second = run(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(count_lines(first.out) == 3);

    RunResult other_seed = run({"sample", "--n", "5", "--weights", "q=4", "--seed", "43",
                                "--count", "3"});
    CHECK(other_seed.out != first.out);

    RunResult csv = run({"sample", "--n", "3", "--weights", "q=2", "--format", "csv"});
    CHECK(csv.out.rfind("index,permutation\n1,", 0) == 0);
}

TEST_CASE("oracle reports exact agreement") {
    RunResult r = run({"oracle", "--n", "3", "--weights", "x=1/2,1/3,1/6"});
    CHECK(r.code == 0);
    CHECK(r.out == "equal on 6 permutations, total 1\n");
}

TEST_CASE("spectrum emits eigenvalue rows with multiplicities") {
    RunResult r = run({"spectrum", "--n", "3", "--weights", "q=2", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("cycle_type,eigenvalue,multiplicity\n", 0) == 0);
    CHECK(r.out.find("(3),1/4,2\n") != std::string::npos);
    CHECK(r.out.find("\"(2,1)\",1/2,3\n") != std::string::npos);
    CHECK(r.out.find("\"(1,1,1)\",1,1\n") != std::string::npos);

    RunResult text = run({"spectrum", "--n", "3", "--weights", "q=2"});
    CHECK(text.out.find("traces ok; numeric spectrum ok") != std::string::npos);
}

TEST_CASE("convolve confirms the product law") {
    RunResult r = run({"convolve", "--n", "3", "--weights", "q=2", "--weights2", "q=3"});
    CHECK(r.code == 0);
    CHECK(r.out == "convolution equals the product-weight law on 6 permutations\n");
}

TEST_CASE("bhr confirms the face walk assembly") {
    RunResult r = run({"bhr", "--n", "3", "--weights", "x=1/2,1/3,1/6"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "face walk equals the direct walk on 6x6 entries; 13 faces with total weight 1\n");
}

TEST_CASE("majinv prints the polynomial and route count") {
    RunResult r = run({"majinv", "--n", "2", "--weights", "x=1/2,1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "3/4 + 1/4*t\nall routes agree (5 routes)\n");
}

TEST_CASE("moments rejects truncating weight families") {
    RunResult r = run({"moments", "--n", "3", "--weights", "geom:t=1/2"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.rfind("usage error: ", 0) == 0);

    RunResult ok = run({"moments", "--n", "3", "--weights", "x=1/2,1/2"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("E(maj) = 3/4") != std::string::npos);
    CHECK(ok.out.find("formulas agree") != std::string::npos);
}

TEST_CASE("cycles rsk descents lis print exact laws") {
    RunResult cycles = run({"cycles", "--n", "3", "--weights", "x=1/2,1/2"});
    CHECK(cycles.code == 0);
    CHECK(cycles.out.find("(3) 1/4\n") != std::string::npos);
    CHECK(cycles.out.find("total 1\n") != std::string::npos);

    RunResult rsk = run({"rsk", "--n", "3", "--weights", "x=1/2,1/2"});
    CHECK(rsk.code == 0);
    CHECK(rsk.out.find("(3) 1/2\n") != std::string::npos);
    CHECK(rsk.out.find("per-tableau fibers ok\n") != std::string::npos);

    RunResult descents = run({"descents", "--n", "3", "--weights", "x=1/2,1/2"});
    CHECK(descents.code == 0);
    CHECK(descents.out.find("(1,2) 1/4\n") != std::string::npos);

    RunResult lis = run({"lis", "--n", "3", "--weights", "q=2"});
    CHECK(lis.code == 0);
    CHECK(lis.out == "5/2\n");
}

TEST_CASE("f1 table renders exact and decimal columns") {
    RunResult r = run({"f1", "--max", "3", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "n,f1,f1_over_n,f1_over_n_decimal\n"
          "1,0,0,0.000000\n"
          "2,1/2,1/4,0.250000\n"
          "3,1,1/3,0.333333\n");
}

TEST_CASE("mc passes at moderate sample counts") {
    RunResult r = run({"mc", "--n", "2", "--weights", "q=2", "--samples", "20000",
                       "--seed", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("reproducible; pass") != std::string::npos);

    RunResult too_few = run({"mc", "--n", "2", "--weights", "q=2", "--samples", "100"});
    CHECK(too_few.code == 2);
    CHECK(too_few.err.rfind("usage error: ", 0) == 0);
}

TEST_CASE("verify runs one suite and reports a summary") {
    RunResult r = run({"verify", "--suite", "uq-closed-form", "--n", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find(" 0 failed\n") != std::string::npos);
    CHECK(r.out.rfind("PASS ", 0) == 0);
    // timings go to the diagnostic stream, one per check plus a total
    CHECK(r.err.rfind("# ", 0) == 0);
    CHECK(r.err.find("# total: ") != std::string::npos);
    CHECK(count_lines(r.err) == count_lines(r.out));

    RunResult unknown = run({"verify", "--suite", "nonsense"});
    CHECK(unknown.code == 2);
    CHECK(unknown.err.rfind("usage error: unknown suite", 0) == 0);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"prob", "--perm", "213"}).code == 2);                       // missing weights
    CHECK(run({"prob", "--perm", "213", "--weights", "y=1"}).code == 2);   // bad spec
    CHECK(run({"prob", "--n", "4", "--perm", "213", "--weights", "q=2"}).code == 2);
    CHECK(run({"sample", "--n", "0", "--weights", "q=2"}).code == 2);
    CHECK(run({"sample", "--n", "3", "--weights", "q=2", "--count", "0"}).code == 2);
    CHECK(run({"dist", "--n", "2", "--weights", "q=2", "--format", "yaml"}).code == 2);
}

TEST_CASE("help prints usage and exits cleanly") {
    RunResult r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Usage") != std::string::npos);
    RunResult sub = run({"prob", "--help"});
    CHECK(sub.code == 0);
    CHECK(sub.out.find("--perm") != std::string::npos);
}

TEST_CASE("cap refusals exit with code three") {
    RunResult r = run({"dist", "--n", "9", "--weights", "q=2"});
    CHECK(r.code == 3);
    CHECK(r.err.rfind("refused: ", 0) == 0);

    RunResult lowered = run({"dist", "--n", "4", "--weights", "q=2", "--cap-factorial", "3"});
    CHECK(lowered.code == 3);

    RunResult matrix = run({"spectrum", "--n", "3", "--weights", "q=2", "--cap-matrix", "2"});
    CHECK(matrix.code == 3);

    RunResult bhr = run({"bhr", "--n", "4", "--weights", "q=2", "--cap-bhr", "3"});
    CHECK(bhr.code == 3);

    RunResult raised = run({"dist", "--n", "4", "--weights", "q=2", "--cap-factorial", "3",
                            "--cap-factorial", "4"});
    CHECK(run({"dist", "--n", "4", "--weights", "q=2"}).code == 0);
    CHECK((raised.code == 0 || raised.code == 2)); // repeated flag: last wins or rejected
}

TEST_CASE("cap flags do not leak across invocations") {
    RunResult lowered = run({"dist", "--n", "4", "--weights", "q=2", "--cap-factorial", "3"});
    CHECK(lowered.code == 3);
    RunResult after = run({"dist", "--n", "4", "--weights", "q=2"});
    CHECK(after.code == 0);
}
