#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef DUPCODEC_CLI_PATH
#define DUPCODEC_CLI_PATH "dupcodec"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
    int exitCode;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DUPCODEC_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        output.append(buf, got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("dupcodec_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name) const {
        return (path / name).string();
    }
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

}  // namespace

TEST_CASE("cli: lemma1 verification prints the witness and passes") {
    auto res = run("verify lemma1 --base 012 --cap 13");
    CHECK(res.exitCode == 0);
    CHECK(res.output.find("max=13") != std::string::npos);
    CHECK(res.output.find("witness=0120103212012") != std::string::npos);
    CHECK(res.output.find("PASS") != std::string::npos);
}

TEST_CASE("cli: encode/decode round-trips through files") {
    TempDir tmp;
    spit(tmp.file("msg.hex"), "00000000000\n123456789ab\nfedcba98765\n");
    auto enc = run("encode --in " + tmp.file("msg.hex") + " --out " +
                   tmp.file("seq.txt"));
    CHECK(enc.exitCode == 0);
    auto dec = run("decode --in " + tmp.file("seq.txt") + " --out " +
                   tmp.file("back.hex"));
    CHECK(dec.exitCode == 0);
    CHECK(dec.output.find("status=ok") != std::string::npos);
    CHECK(slurp(tmp.file("back.hex")) == slurp(tmp.file("msg.hex")));

    // pure duplications leave the decoded messages intact
    auto damaged = slurp(tmp.file("seq.txt"));
    std::size_t line2 = damaged.find('\n') + 1;
    damaged.insert(line2 + 40, damaged.substr(line2 + 38, 2));
    spit(tmp.file("dup.txt"), damaged);
    auto dec2 = run("decode --in " + tmp.file("dup.txt") + " --out " +
                    tmp.file("back2.hex"));
    CHECK(dec2.exitCode == 0);
    CHECK(slurp(tmp.file("back2.hex")) == slurp(tmp.file("msg.hex")));
}

TEST_CASE("cli: dna rendering round-trips") {
    TempDir tmp;
    spit(tmp.file("msg.hex"), "0123456789a\n");
    CHECK(run("encode --dna --in " + tmp.file("msg.hex") + " --out " +
              tmp.file("seq.dna"))
              .exitCode == 0);
    std::string seq = slurp(tmp.file("seq.dna"));
    CHECK(seq.find_first_not_of("ACGT\n") == std::string::npos);
    auto dec = run("decode --dna --in " + tmp.file("seq.dna") + " --out " +
                   tmp.file("back.hex"));
    CHECK(dec.exitCode == 0);
    CHECK(slurp(tmp.file("back.hex")) == slurp(tmp.file("msg.hex")));
}

TEST_CASE("cli: decode failure sets exit code 1") {
    TempDir tmp;
    spit(tmp.file("bad.txt"), "01230123012301230\n");
    auto res = run("decode --in " + tmp.file("bad.txt"));
    CHECK(res.exitCode == 1);
    CHECK(res.output.find("status=fail") != std::string::npos);
}

TEST_CASE("cli: simulate is deterministic and reports a clean rate") {
    auto a = run("simulate --trials 50 --max-dups 6 --seed 11 --threads 4");
    auto b = run("simulate --trials 50 --max-dups 6 --seed 11 --threads 2");
    CHECK(a.exitCode == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("trials=50 successes=50 failures=0 "
                        "success_rate=1.000000") != std::string::npos);

    auto noDups = run("simulate --trials 10 --max-dups 0 --no-substitution");
    CHECK(noDups.exitCode == 0);
    CHECK(noDups.output.find("success_rate=1.000000") != std::string::npos);
}

TEST_CASE("cli: rates emits the fixed CSV header and is reproducible") {
    auto a = run("rates --q 4 --m-range 18..20 --sigma 01201");
    CHECK(a.exitCode == 0);
    CHECK(a.output.find("sigma,m,M,lambda,rate_exact,rate_lb,"
                        "rate_asymptotic\n") != std::string::npos);
    CHECK(a.output.find("01201,18,11900743,2.6534,") != std::string::npos);
    auto b = run("rates --q 4 --m-range 18..20 --sigma 01201");
    CHECK(a.output == b.output);
    auto best = run("rates --q 4 --m-range 18..18 --best-sigma");
    CHECK(best.exitCode == 0);
    CHECK(best.output.find("01201,18,") != std::string::npos);
    CHECK(best.output.find("2.6534") != std::string::npos);
}

TEST_CASE("cli: verify graph and theorem1 pass for the default alphabet") {
    auto g = run("verify graph --q 4");
    CHECK(g.exitCode == 0);
    CHECK(g.output.rfind("PASS\n") == g.output.size() - 5);
    auto t = run("verify theorem1 --trials 500 --seed 3");
    CHECK(t.exitCode == 0);
    CHECK(t.output.find("window_violations=0") != std::string::npos);
}

TEST_CASE("cli: replay applies traces from plain and simulate files") {
    TempDir tmp;
    spit(tmp.file("trace.txt"), "D 1 3\nS 7 1\n");
    auto res = run("replay --trace " + tmp.file("trace.txt") +
                   " --word 1201210 --q 4");
    CHECK(res.exitCode == 0);
    CHECK(res.output.find("output 1201201210") == std::string::npos);
    CHECK(res.output.find("output 1201201110") != std::string::npos);

    spit(tmp.file("failures.txt"),
         "# trial 0 input 012 reason demo\nD 0 1\n"
         "# trial 3 input 0123 reason demo\nD 0 3\nS 1 3\n");
    auto picked = run("replay --trace " + tmp.file("failures.txt") +
                      " --trial 3 --q 4");
    CHECK(picked.exitCode == 0);
    CHECK(picked.output.find("input  0123") != std::string::npos);
    CHECK(picked.output.find("output 0320123") != std::string::npos);
}

TEST_CASE("cli: usage and file errors exit with code 2") {
    CHECK(run("").exitCode == 2);
    CHECK(run("encode --in /nonexistent --out /tmp/x").exitCode == 2);
    CHECK(run("rates --q 4 --m-range bogus").exitCode == 2);
    TempDir tmp;
    spit(tmp.file("bad.hex"), "zz\n");
    CHECK(run("encode --in " + tmp.file("bad.hex") + " --out " +
              tmp.file("seq.txt"))
              .exitCode == 2);
}
