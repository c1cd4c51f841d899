#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& tag) {
    const fs::path out_path = fs::temp_directory_path() / ("sdwave_cli_" + tag + ".txt");
    const std::string cmd =
        std::string(SDWAVE_CLI_PATH) + " " + args + " > " + out_path.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream is(out_path);
    std::stringstream buf;
    buf << is.rdbuf();
    fs::remove(out_path);
    return {WEXITSTATUS(status), buf.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::stringstream buf;
    buf << is.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("alpha prints the closed-form exponent") {
    const RunResult r = run_cli("alpha --symbol power-law:beta=0 --n 3 --s 0", "alpha");
    CHECK(r.exit_code == 0);
    CHECK(std::stod(r.out) == doctest::Approx(1.5).epsilon(0.01));
}

TEST_CASE("unknown symbol exits 2 and writes nothing") {
    const fs::path out = fs::temp_directory_path() / "sdwave_unknown_symbol.csv";
    fs::remove(out);
    const RunResult r = run_cli(
        "solve --symbol not-a-symbol --times 1:10:8 --output " + out.string(), "badsym");
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("supported") != std::string::npos);
    CHECK(!fs::exists(out));
}

TEST_CASE("solve writes the documented CSV header") {
    const fs::path out = fs::temp_directory_path() / "sdwave_solve.csv";
    const RunResult r = run_cli("solve --symbol fractional --n 3 --u0 gaussian:1 "
                                "--quantity solution --zone interior --times 1:100:8 --output " +
                                    out.string(),
                                "solve");
    CHECK(r.exit_code == 0);
    const std::string csv = slurp(out);
    CHECK(csv.rfind("t,norm,quantity,zone,symbol,n\n", 0) == 0);
    fs::remove(out);
}

TEST_CASE("scenarios --list names every canned experiment") {
    const RunResult r = run_cli("scenarios --list", "list");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("example-2.1-fractional-interior") != std::string::npos);
    CHECK(r.out.find("hypC-sigma-1-energy") != std::string::npos);
}

TEST_CASE("oracle-check passes for a catalog symbol") {
    const RunResult r = run_cli("oracle-check --symbol logarithmic:gamma=1 --seed 7", "oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ok") != std::string::npos);
}

TEST_CASE("a single scenario rerun is byte-identical") {
    const fs::path dir_a = fs::temp_directory_path() / "sdwave_scen_a";
    const fs::path dir_b = fs::temp_directory_path() / "sdwave_scen_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    const std::string scenario = "example-2.1-fractional-interior";
    const RunResult ra =
        run_cli("scenarios --run " + scenario + " --output-dir " + dir_a.string(), "scen_a");
    const RunResult rb =
        run_cli("scenarios --run " + scenario + " --output-dir " + dir_b.string(), "scen_b");
    CHECK(ra.exit_code == 0);
    CHECK(rb.exit_code == 0);
    CHECK(slurp(dir_a / (scenario + ".csv")) == slurp(dir_b / (scenario + ".csv")));
    CHECK(slurp(dir_a / "summary.csv") == slurp(dir_b / "summary.csv"));
    CHECK(!slurp(dir_a / "summary.csv").empty());
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
}

TEST_CASE("config file supplies defaults, flags override") {
    const fs::path conf = fs::temp_directory_path() / "sdwave_test.conf";
    {
        std::ofstream os(conf);
        os << "[alpha]\n"
           << "symbol = \"power-law:beta=1\"\n"
           << "n = 3\n"
           << "s = 0\n";
    }
    const RunResult file_only = run_cli("alpha --config " + conf.string(), "conf1");
    CHECK(file_only.exit_code == 0);
    CHECK(std::stod(file_only.out) == doctest::Approx(1.0).epsilon(0.01));  // (2s+n)/(2+beta)

    const RunResult overridden =
        run_cli("alpha --config " + conf.string() + " --s 1.5", "conf2");
    CHECK(overridden.exit_code == 0);
    CHECK(std::stod(overridden.out) == doctest::Approx(2.0).epsilon(0.01));  // (3+3)/3
    fs::remove(conf);
}

TEST_CASE("hypothesis-check reports the classification") {
    const RunResult r = run_cli("hypothesis-check --symbol hypC-log:sigma=1", "hyp");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("HypC") != std::string::npos);
    CHECK(r.out.find("Finite") != std::string::npos);
}
