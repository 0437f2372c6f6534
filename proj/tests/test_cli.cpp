#include "qsuper/qsuper.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out, err;
};

std::string read_all(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch() {
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("qsuper-cli-" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

std::string sample(const std::string& name) { return std::string(QSUPER_SAMPLES_DIR) + "/" + name; }

Run run(const std::string& args) {
    const auto out = scratch() / "stdout", err = scratch() / "stderr";
    const std::string cmd = std::string("'") + QSUPER_CLI_PATH + "' " + args + " > '" + out.string() + "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read_all(out), read_all(err)};
}

}  // namespace

TEST(Cli, VerifyCatalogHeisenberg) {
    const auto file = (scratch() / "h.alg").string();
    ASSERT_EQ(run("catalog heisenberg --weights 1,2 --out " + file).code, 0);
    const auto r = run("verify " + file);
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    for (const char* check : {"jacobi", "invariance", "degree", "rank"}) {
        const auto pos = r.out.find(check);
        ASSERT_NE(pos, std::string::npos) << check;
        EXPECT_EQ(r.out.substr(pos + 16, 4), "PASS") << check;
    }
    EXPECT_NE(r.out.find("rank            PASS  6/6"), std::string::npos);
}

TEST(Cli, CatalogMatchesShippedSamples) {
    EXPECT_EQ(run("catalog heisenberg --weights 1,2").out, read_all(sample("heisenberg.alg")));
    EXPECT_EQ(run("catalog odd-dim1 --eta 2 --d 3 --w 1").out, read_all(sample("odd-dim1.alg")));
}

TEST(Cli, VerifyReportsFailures) {
    const auto file = (scratch() / "bad.alg").string();
    std::ofstream(file) << "algebra bad\nbasis 2\na 0\nb 0\nbracket 1\n0 1 1 1\nmetric 0 2\n0 0 1\n1 1 1\nend\n";
    const auto r = run("verify " + file);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("super-skew      FAIL"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("grading         PASS"), std::string::npos) << r.out;
}

TEST(Cli, ExtendSuperCyclicViolation) {
    const auto r = run("extend --context " + sample("super-cyclic-violation.ctx"));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("super cyclic condition"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("super-cyclic at ("), std::string::npos) << r.err;
}

TEST(Cli, ExtendThenDecompose) {
    const auto alg = (scratch() / "even.alg").string(), ctx = (scratch() / "even.ctx").string();
    ASSERT_EQ(run("extend --context " + sample("even-nonabelian.ctx") + " --out " + alg).code, 0);
    const auto ideal = (scratch() / "even.ideal").string();
    std::ofstream(ideal) << "ideal 5 2\n0 0 0 1 0\n0 0 0 0 1\nend\n";
    const auto r = run("decompose " + alg + " --ideal " + ideal + " --out " + ctx);
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(qsuper::read_context(read_all(ctx)), qsuper::read_context(read_all(sample("even-nonabelian.ctx"))));
}

TEST(Cli, DecomposeAutoOnSample) {
    const auto r = run("decompose " + sample("heisenberg.alg") + " --ideal auto");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, read_all(sample("heisenberg.ctx")));
    const auto f = run("decompose " + sample("heisenberg.alg") + " --ideal " + sample("heisenberg.ideal"));
    EXPECT_EQ(f.out, r.out);
}

TEST(Cli, DecomposeAutoExplainsCentralRestriction) {
    const auto file = (scratch() / "aniso.alg").string();
    std::ofstream(file) << "algebra aniso\nbasis 1\nz 0\nbracket 0\nmetric 0 1\n0 0 1\nend\n";
    const auto r = run("decompose " + file + " --ideal auto");
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("central"), std::string::npos) << r.err;
}

TEST(Cli, RoundtripShippedContexts) {
    for (const char* name : {"heisenberg.ctx", "odd-dim1.ctx", "even-nonabelian.ctx"}) {
        const auto r = run(std::string("roundtrip ") + sample(name));
        EXPECT_EQ(r.code, 0) << name << r.out << r.err;
        EXPECT_NE(r.out.find("isometry        PASS"), std::string::npos) << name;
    }
    EXPECT_EQ(run("roundtrip " + sample("super-cyclic-violation.ctx")).code, 1);
}

TEST(Cli, JsonFormat) {
    const auto text = run("catalog odd-dim1 --eta 2 --d 3 --w 1");
    const auto json = run("catalog odd-dim1 --eta 2 --d 3 --w 1 --format json");
    ASSERT_EQ(json.code, 0);
    EXPECT_EQ(json.out.front(), '{');
    EXPECT_EQ(qsuper::read_algebra(json.out), qsuper::read_algebra(text.out));
    EXPECT_EQ(run("--format json catalog odd-dim1 --eta 2 --d 3 --w 1").out, json.out);
}

TEST(Cli, InputErrorsExitTwo) {
    EXPECT_EQ(run("verify /nonexistent/file.alg").code, 2);
    const auto file = (scratch() / "garbage.alg").string();
    std::ofstream(file) << "algebra x\nbasis 1\nx 3\n";
    const auto r = run("verify " + file);
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("catalog heisenberg --weights 1,x").code, 2);
    EXPECT_EQ(run("extend").code, 2);
}

TEST(Cli, HeisenbergZeroWeightSkipsIsometry) {
    // t = 0 leaves omega degenerate: the algebra is still written, Psi is not asserted
    const auto r = run("catalog heisenberg --weights 0");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(qsuper::read_algebra(r.out).bracket.size(), 0U);
}

TEST(Cli, OutputsAreDeterministic) {
    for (const std::string& args : std::vector<std::string>{"catalog heisenberg --weights 1,2,3", "catalog odd-dim1 --eta 1/2 --d -2 --w 3",
                                   "extend --context " + sample("heisenberg.ctx"),
                                   "decompose " + sample("odd-dim1.alg") + " --ideal auto",
                                   "roundtrip " + sample("even-nonabelian.ctx"), "verify " + sample("odd-dim1.alg")}) {
        const auto a = run(args), b = run(args);
        EXPECT_EQ(a.code, 0) << args << a.err;
        EXPECT_EQ(a.out, b.out) << args;
        EXPECT_FALSE(a.out.empty()) << args;
    }
}
