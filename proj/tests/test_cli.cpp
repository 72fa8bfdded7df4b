#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BCRYSTAL_CLI_PATH
#define BCRYSTAL_CLI_PATH "./bcrystal"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    const std::string out_path =
        "bcry_cli_test_" + std::to_string(++counter) + ".out";
    const std::string cmd =
        std::string(BCRYSTAL_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::remove(out_path.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, buf.str()};
}

}  // namespace

TEST_CASE("decompose exits 0 and prints the components") {
    RunResult r = run("decompose \"V(1) (x) V(1)\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("V(2)") != std::string::npos);
    CHECK(r.out.find("V(0)") != std::string::npos);
}

TEST_CASE("associatively nested inputs give the same multiset") {
    RunResult left = run("decompose \"(V(1) (x) V(1)) (x) V(1)\" --format json");
    RunResult right = run("decompose \"V(1) (x) (V(1) (x) V(1))\" --format json");
    CHECK(left.exit_code == 0);
    CHECK(right.exit_code == 0);
    const auto components = [](const std::string& s) {
        return nlohmann::json::parse(s)["components"];
    };
    CHECK(components(left.out) == components(right.out));
}

TEST_CASE("parse errors exit 1") {
    CHECK(run("decompose \"V(1) (x)\"").exit_code == 1);
    CHECK(run("decompose \"W(1)\"").exit_code == 1);
    CHECK(run("rules \"V(1):b0\"").exit_code == 1);
}

TEST_CASE("window exhaustion exits 2") {
    RunResult r = run("decompose \"V(20) (x) V(20)\" --window 30");
    CHECK(r.exit_code == 2);
}

TEST_CASE("oracle and graph subcommands work") {
    RunResult orc = run("oracle \"M(0) (x) V(1)\"");
    CHECK(orc.exit_code == 0);
    CHECK(orc.out.find("case 1") != std::string::npos);
    CHECK(orc.out.find("M(-1)") != std::string::npos);

    RunResult gra = run("graph \"T(1)\" --window 10");
    CHECK(gra.exit_code == 0);
    CHECK(gra.out.find("style=dashed") != std::string::npos);

    RunResult chr = run("character \"M(2) (x) V(3)\" --min -6");
    CHECK(chr.exit_code == 0);
    CHECK(chr.out.find("wt 5: 1") != std::string::npos);

    RunResult rul = run("rules \"V(1):b0 (x) V(1):b1\" --format json");
    CHECK(rul.exit_code == 0);
    CHECK(rul.out.find("\"fRule\": \"F2\"") != std::string::npos);
}

TEST_CASE("verify suites run from the cli") {
    RunResult r = run("verify axioms --range 0..1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("axioms: pass") != std::string::npos);
}

TEST_CASE("window defaults come from bcrystal.conf when present") {
    {
        std::ofstream conf("bcrystal.conf");
        conf << "window = 24\nsafe_margin = 10  # trimmed\n";
    }
    RunResult r = run("decompose \"M(1) (x) M(0)\"");
    std::remove("bcrystal.conf");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("wt >= -24") != std::string::npos);
    CHECK(r.out.find("down to -14") != std::string::npos);

    // flags still win over the config file
    {
        std::ofstream conf("bcrystal.conf");
        conf << "window = 24\n";
    }
    RunResult flag = run("decompose \"M(1) (x) M(0)\" --window 30");
    std::remove("bcrystal.conf");
    CHECK(flag.out.find("wt >= -30") != std::string::npos);
}
