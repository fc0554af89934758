// Exercises the pgaut binary end to end: exit codes, report schema, and the
// byte-exact cache round trip.  Invoked as: test_cli <path-to-pgaut>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

#define REQUIRE(cond, msg)                                              \
    do {                                                                \
        if (!(cond)) {                                                  \
            std::cerr << "[FAIL] " << __LINE__ << ": " << msg << "\n";  \
            ++failures;                                                 \
        }                                                               \
    } while (0)

std::string g_bin;
fs::path g_tmp;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    fs::path outfile = g_tmp / "out.txt";
    std::string cmd = g_bin + " " + args + " > " + outfile.string() + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream is(outfile);
    std::stringstream ss;
    ss << is.rdbuf();
    r.out = ss.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <pgaut binary>\n";
        return 2;
    }
    g_bin = argv[1];
    g_tmp = fs::temp_directory_path() / "pgaut-cli-test";
    fs::remove_all(g_tmp);
    fs::create_directories(g_tmp);

    {
        auto r = run("info 3 3 1");
        REQUIRE(r.code == 0, "info exit code");
        REQUIRE(r.out.find("LOW") != std::string::npos, "info prints the regime");
        REQUIRE(r.out.find("13122") != std::string::npos, "info prints the expected |Aut(S)|");
        REQUIRE(r.out.find("243") != std::string::npos, "info prints |S|");
    }
    {
        auto r = run("info 3 3 2");
        REQUIRE(r.code == 0, "info exit code");
        REQUIRE(r.out.find("i = n-1") != std::string::npos, "info notes the subcase");
        REQUIRE(r.out.find("1296") != std::string::npos, "info prints 1296");
    }
    {
        auto r = run("info 3 2 1");
        REQUIRE(r.out.find("n = 2") != std::string::npos, "info notes the n = 2 exception");
    }
    {
        // regime-mismatched suite: skipped cleanly, exit 0
        auto r = run("verify --suite aut-high --p 3 --n 3 --i 1");
        REQUIRE(r.code == 0, "mismatched suite exits 0");
        REQUIRE(r.out.find("regime mismatch") != std::string::npos, "mismatch reason printed");
    }
    {
        fs::path rep = g_tmp / "report.json";
        auto r = run("verify --suite appendix 3 3 1 --out " + rep.string());
        REQUIRE(r.code == 0, "appendix suite exits 0");
        auto j = nlohmann::json::parse(slurp(rep));
        for (const char* key : {"params", "constants", "checks", "stats", "version", "seed"})
            REQUIRE(j.contains(key), std::string("report has ") + key);
        bool found = false;
        for (const auto& c : j["checks"])
            if (c["id"] == "ap.040-aut-order") {
                found = true;
                REQUIRE(c["status"] == "pass", "aut order check passes");
                REQUIRE(std::string(c["witness"]).find("486") != std::string::npos, "|Aut(U)| = 486 recorded");
            }
        REQUIRE(found, "ap.040 present in the report");
    }
    {
        auto r = run("verify --suite nosuch 3 3 1");
        REQUIRE(r.code == 2, "unknown suite is invalid parameters");
    }
    {
        auto r = run("info 4 3 1");
        REQUIRE(r.code == 2, "p = 4 rejected with exit 2");
    }
    {
        auto r = run("oracle 3 6 3");  // |S| = 3^11 over the guard
        REQUIRE(r.code == 3, "resource guard exit 3");
    }
    {
        auto r = run("oracle 3 3 2 --threads 2");
        REQUIRE(r.code == 0, "oracle exit 0");
        REQUIRE(r.out.find("1296") != std::string::npos, "oracle finds 1296");
        REQUIRE(r.out.find("partition") != std::string::npos, "per-partition stats printed");
    }
    {
        // cache: compute, then load; files byte-identical across fresh runs
        fs::path c1 = g_tmp / "cache1";
        fs::path c2 = g_tmp / "cache2";
        auto r1 = run("aut --mode brute 3 3 2 --cache " + c1.string());
        REQUIRE(r1.code == 0, "aut brute exit 0");
        REQUIRE(r1.out.find("1296") != std::string::npos, "aut brute count");
        REQUIRE(r1.out.find("computed") != std::string::npos, "first run computes");
        auto r2 = run("aut --mode brute 3 3 2 --cache " + c1.string());
        REQUIRE(r2.out.find("loaded from cache") != std::string::npos, "second run loads");
        REQUIRE(r2.out.find("1296") != std::string::npos, "cached count identical");
        auto r3 = run("aut --mode brute 3 3 2 --cache " + c2.string());
        REQUIRE(r3.code == 0, "aut brute exit 0 (fresh dir)");
        fs::path f1, f2;
        for (const auto& e : fs::directory_iterator(c1)) f1 = e.path();
        for (const auto& e : fs::directory_iterator(c2)) f2 = e.path();
        REQUIRE(!f1.empty() && !f2.empty(), "cache files written");
        REQUIRE(slurp(f1) == slurp(f2), "cache files are byte-identical");

        auto r4 = run("aut --mode closure 3 3 2 --cache " + c1.string());
        REQUIRE(r4.code == 0, "aut closure exit 0");
        REQUIRE(r4.out.find("1296") != std::string::npos, "closure count matches");
    }
    {
        auto r = run("ratio 3 3 2");
        REQUIRE(r.code == 0, "ratio exit 0");
        auto j = nlohmann::json::parse(r.out);
        REQUIRE(j["z_s"] == 3, "z(S) = 3");
        REQUIRE(j["ratio_u"] == "3/2", "ratio for U");
    }

    if (failures == 0) std::cout << "test_cli: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
