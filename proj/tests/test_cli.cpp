// End-to-end checks of the qtcat binary. The binary path arrives via the
// QTCAT_BIN environment variable set by CTest.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const char* bin = std::getenv("QTCAT_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("compute text output") {
    SECTION("nested-loc n=2 m=1 prints the worked example") {
        RunResult r = run("compute nested-loc --n 2 --m 1 --format text");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out == "t + q + t^2 + q*t + q^2\n");
    }
    SECTION("catalan-comb n=1 prints 1") {
        RunResult r = run("compute catalan-comb --n 1");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out == "1\n");
    }
    SECTION("cells table has top index k-1") {
        RunResult r = run("compute cells --n 5");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out == "1: 1\n2: 1 1\n3: 1 2 1\n4: 1 2 3 1\n5: 1 2 4 4 1\n");
    }
}

TEST_CASE("compute json output mentions the schema fields") {
    RunResult r = run("compute catalan-loc --n 2 --m 1 --format json");
    REQUIRE(r.exit_code == 0);
    for (const char* needle :
         {"\"kind\": \"catalan-loc\"", "\"n\": 2", "\"m\": 1", "\"terms\"", "\"engine\""})
        REQUIRE(r.out.find(needle) != std::string::npos);
}

TEST_CASE("argument errors exit nonzero") {
    REQUIRE(run("compute bogus-kind --n 2").exit_code != 0);
    REQUIRE(run("compute catalan-comb").exit_code != 0);
    REQUIRE(run("compute catalan-comb --n 0").exit_code != 0);
    REQUIRE(run("verify no-such-suite").exit_code != 0);
    REQUIRE(run("compute nested-comb --n 3 --m 2").exit_code != 0);
}

TEST_CASE("verify suites") {
    SECTION("catalan-match exits zero") {
        RunResult r = run("verify catalan-match --n-max 5");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("FAIL") == std::string::npos);
    }
    SECTION("positivity is a conjecture report") {
        RunResult r = run("verify positivity --n-max 3 --m-max 2");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("conjecture") != std::string::npos);
    }
    SECTION("pieri-c passes") {
        RunResult r = run("verify pieri-c --n-max 5");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("FAIL") == std::string::npos);
    }
    SECTION("pieri-d-calibrate reports the calibrated variant") {
        RunResult r = run("verify pieri-d-calibrate --n-max 4");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("matches all pairs") != std::string::npos);
        REQUIRE(r.out.find("mu=(1)") != std::string::npos);
    }
    SECTION("counts passes") {
        RunResult r = run("verify counts --n-max 6");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("FAIL") == std::string::npos);
    }
    SECTION("nested-match reports the closed-form discrepancy note") {
        RunResult r = run("verify nested-match --n-max 3");
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.out.find("check ") != std::string::npos);
        REQUIRE(r.out.find("check-negative") == std::string::npos);
    }
}

TEST_CASE("table output is byte-identical across runs and matches compute") {
    RunResult a = run("table --m 1 --n-max 3");
    RunResult b = run("table --m 1 --n-max 3");
    REQUIRE(a.exit_code == 0);
    REQUIRE(a.out == b.out);
    REQUIRE(a.out.find("N^(1)_1 = t + q + t^2 + q*t + q^2\n") != std::string::npos);
    REQUIRE(a.out.find("N^(1)_2 = ") != std::string::npos);

    // m=2 labels carry the engine n itself
    RunResult c = run("table --m 2 --n-max 2");
    REQUIRE(c.out == "N^(2)_2 = t^2 + q*t + q^2 + t^3 + q*t^2 + q^2*t + q^3\n");
}

TEST_CASE("cache reuse renders identically") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "qtcat-cli-cache";
    fs::remove_all(dir);
    std::string flag = " --cache-dir " + dir.string();

    RunResult fresh = run("compute nested-loc --n 3 --m 1 --format json" + flag);
    REQUIRE(fresh.exit_code == 0);
    REQUIRE(fs::exists(dir / "nested-loc-3-1.json"));
    RunResult cached = run("compute nested-loc --n 3 --m 1 --format json" + flag);
    REQUIRE(cached.exit_code == 0);
    REQUIRE(cached.out == fresh.out);

    RunResult no_cache = run("compute nested-loc --n 3 --m 1 --format json");
    REQUIRE(no_cache.out == fresh.out);
    fs::remove_all(dir);
}
