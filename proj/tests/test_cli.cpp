// End-to-end checks of the CLI binary: exact output bytes, exit codes,
// determinism, and checkpoint resume. The binary path arrives as argv[1].
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("gen bfile matches the unrolled prefix") {
    auto r = run("gen --family rowland --n-max 5 --format bfile");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 8\n3 9\n4 10\n5 15\n");
}

TEST_CASE("gen csv carries the fixed header and columns") {
    auto r = run("gen --family rowland --n-max 4 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n,value,delta,gcd_arg\n2,8,1,2\n3,9,1,3\n4,10,1,4\n");
}

TEST_CASE("gen jsonl mirrors the step fields") {
    auto r = run("gen --family three-n --m 5 --t 10 --n-max 5 --format jsonl");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "{\"n\":5,\"value\":15,\"delta\":5,\"gcd_arg\":5}\n");
}

TEST_CASE("gen rejects a broken seed with exit 2") {
    auto r = run("gen --family three-n --m 4 --t 7 --n-max 10");
    CHECK(r.exit_code == 2);
    CHECK(r.out.empty());
}

TEST_CASE("gen output is byte-identical across runs") {
    std::string args = "gen --family parity-s-c --n-max 500 --format csv";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
}

TEST_CASE("gen --p shorthand builds the c_P family") {
    auto direct = run("gen --family three-n --m 7 --t 14 --n-max 30 --format bfile");
    auto shorthand = run("gen --family three-n --p 7 --n-max 30 --format bfile");
    CHECK(direct.exit_code == 0);
    CHECK(direct.out == shorthand.out);
}

TEST_CASE("verify exits 0 on the classic theorem family") {
    auto r = run("verify --family rowland --n-max 10000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("status: theorem verified on range") != std::string::npos);
}

TEST_CASE("verify reports conjecture wording for parity-gcd-l") {
    auto r = run("verify --family parity-gcd-l --n-max 10000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("status: conjecture consistent with range") != std::string::npos);
    CHECK(r.out.find("ones: ") != std::string::npos);
    CHECK(r.out.find("prime-steps: ") != std::string::npos);
}

TEST_CASE("records bfile lists the first conjecture-1 records") {
    auto r = run("records --family parity-gcd-c --n-max 1000 --format bfile");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 7\n2 13\n3 43\n4 139\n5 313\n6 661\n");
}

TEST_CASE("records with threshold 0 includes the opening 1-delta") {
    auto r = run("records --family rowland --threshold 0 --n-max 23 --format bfile");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1\n2 5\n3 11\n4 23\n");
}

TEST_CASE("records of the s-C family begin 7, 13, 31") {
    auto r = run("records --family parity-s-c --n-max 100 --format bfile");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("1 7\n2 13\n3 31\n", 0) == 0);
}

TEST_CASE("distinct emits the computed list") {
    auto r = run("distinct --count 7");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2 7 17 19 31 43 53\n");
    CHECK(run("distinct --count 1").out == "2\n");
    CHECK(run("distinct --count 2").out == "2 7\n");
}

TEST_CASE("distinct exhaustion exits 5") {
    auto r = run("distinct --count 30 --n-probe 60");
    CHECK(r.exit_code == 5);
}

TEST_CASE("leap-bench verifies equivalence") {
    auto r = run("leap-bench --family rowland --n-max 100000");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("equivalence: OK") != std::string::npos);

    auto two = run("leap-bench --family two-n --m 4 --t 6 --n-max 100000");
    CHECK(two.exit_code == 0);
    CHECK(two.out.find("equivalence: OK") != std::string::npos);
}

TEST_CASE("leap-bench rejects non-leap families with a usage error") {
    auto r = run("leap-bench --family parity-gcd-c --n-max 100");
    CHECK(r.exit_code == 2);
}

TEST_CASE("unknown flags and families exit 2") {
    CHECK(run("gen --family martian --n-max 5").exit_code == 2);
    CHECK(run("gen --family rowland --n-max 5 --format xml").exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
}

TEST_CASE("checkpoint resume equals an uninterrupted run") {
    std::string dir = "cli_test_tmp";
    std::string ck = dir + "/resume.jsonl";
    std::remove(ck.c_str());
    std::filesystem::create_directories(dir);

    auto full = run("gen --family parity-gcd-l --n-max 300 --format csv");
    REQUIRE(full.exit_code == 0);

    auto part1 = run("gen --family parity-gcd-l --n-max 150 --format csv --checkpoint " + ck);
    REQUIRE(part1.exit_code == 0);
    std::string saved = slurp(ck);
    CHECK(saved.find("\"kind\":\"parity-gcd-l\"") != std::string::npos);
    CHECK(saved.find("\"n\":150") != std::string::npos);

    auto part2 = run("gen --family parity-gcd-l --n-max 300 --format csv --checkpoint " + ck);
    REQUIRE(part2.exit_code == 0);

    // part1 + part2 (minus the repeated header) must equal the full run
    std::string header = "n,value,delta,gcd_arg\n";
    REQUIRE(part2.out.rfind(header, 0) == 0);
    CHECK(part1.out + part2.out.substr(header.size()) == full.out);
}

TEST_CASE("checkpoint for a different family is rejected") {
    std::string dir = "cli_test_tmp";
    std::string ck = dir + "/mismatch.jsonl";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(ck);
        out << R"({"kind":"rowland","n":50,"value":120})" << "\n";
    }
    auto r = run("gen --family parity-gcd-c --n-max 100 --checkpoint " + ck);
    CHECK(r.exit_code == 2);
}

TEST_CASE("gen --output writes the file and stdout stays empty") {
    std::string dir = "cli_test_tmp";
    std::string path = dir + "/terms.bfile";
    std::filesystem::create_directories(dir);
    auto r = run("gen --family rowland --n-max 5 --format bfile --output " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(path) == "2 8\n3 9\n4 10\n5 15\n");
}

TEST_CASE("gen to an unwritable path exits 1") {
    auto r = run("gen --family rowland --n-max 5 --output /nonexistent-dir/x.csv");
    CHECK(r.exit_code == 1);
}

TEST_CASE("a run that would overflow the 64-bit engine exits 3") {
    std::string dir = "cli_test_tmp";
    std::string ck = dir + "/near_top.jsonl";
    std::filesystem::create_directories(dir);
    {
        std::ofstream out(ck);
        out << R"({"kind":"rowland","n":5,"value":18446744073709551614})" << "\n";
    }
    auto r = run("gen --family rowland --n-max 10 --checkpoint " + ck);
    CHECK(r.exit_code == 3);
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
        return 1;
    }
    g_cli = argv[1];
    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    return context.run();
}
