#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args)
{
    const std::string cmd = std::string(INVOSC_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r{-1, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ',')) fields.push_back(f);
        rows.push_back(fields);
    }
    return rows;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("eval samples psi1 on the box")
{
    const Run r = run("eval --n 1 --l0 3.14159265358979 --omega 0.5 --t 0 --grid 8 --out eval_psi1.csv");
    CHECK(r.status == 0);
    const auto rows = parse_csv(slurp("eval_psi1.csv"));
    REQUIRE(rows.size() == 10);
    CHECK(rows[0] == std::vector<std::string>{"t", "x", "re", "im", "abs2"});
    CHECK(std::stod(rows[1][4]) == 0.0);
}

TEST_CASE("eval of the plane-wave family has constant modulus")
{
    const Run r = run("eval --k 1 --omega 0.5 --t 1 --grid 16");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 18);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(std::stod(rows[i][4]) == doctest::Approx(std::exp(-1.0)).epsilon(1e-13));
}

TEST_CASE("eval validation errors")
{
    CHECK(run("eval --n 0").status == 1);
    CHECK(run("eval --k 1 --omega 0").status == 1);
    CHECK(run("eval --n 1 --k 1").status == 1);
    CHECK(run("eval --n 1 --grid 7").status == 1);
    CHECK(run("eval --n 1 --l0 -2").status == 1);
    CHECK(run("eval --n 1 --out /nonexistent-dir/x.csv").status == 3);
}

TEST_CASE("propagate with defaults reports a small l2 error")
{
    const Run r = run("propagate --out prop_default.csv");
    CHECK(r.status == 0);
    const auto summary = parse_csv(r.out);
    REQUIRE(summary.size() == 1);
    REQUIRE(summary[0].size() == 2);
    CHECK(summary[0][0] == "l2_error");
    CHECK(std::stod(summary[0][1]) < 1e-5);
    CHECK(parse_csv(slurp("prop_default.csv")).size() == 2050);
}

TEST_CASE("propagated superposition keeps unit norm")
{
    const Run r = run("propagate --coeffs 1:0.7071,2:0.7071 --out prop_super.csv");
    CHECK(r.status == 0);
    const auto rows = parse_csv(slurp("prop_super.csv"));
    // Simpson over the abs2 column.
    std::vector<double> x, a;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        x.push_back(std::stod(rows[i][1]));
        a.push_back(std::stod(rows[i][4]));
    }
    const double h = (x.back() - x.front()) / (x.size() - 1);
    double s = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) s += (j == 0 || j + 1 == a.size() ? 1.0 : (j % 2 ? 4.0 : 2.0)) * a[j];
    CHECK(std::abs(s * h / 3.0 - 1.0) < 1e-10);
}

TEST_CASE("propagate validation")
{
    CHECK(run("propagate --t-max 0").status == 1);
    CHECK(run("propagate --coeffs 1:1,1:1").status == 1);
    CHECK(run("propagate --coeffs garbage").status == 1);
}

TEST_CASE("verify exit status follows the report")
{
    const Run ok = run("verify");
    CHECK(ok.status == 0);
    CHECK(ok.out.rfind("check,params,value,tolerance,pass\n", 0) == 0);
    CHECK(ok.out.find(",false\n") == std::string::npos);

    const Run bad = run("verify --phase-convention as-printed --out verify_printed.csv");
    CHECK(bad.status == 2);
    const std::string report = slurp("verify_printed.csv");
    CHECK(report.find("residual_exact,") != std::string::npos);
    CHECK(report.find(",false\n") != std::string::npos);
}

TEST_CASE("gas cooling curve")
{
    const Run r = run("gas --beta0 1 --omega 0.5 --t 0,1");
    CHECK(r.status == 0);
    const auto rows = parse_csv(r.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::vector<std::string>{"t", "L", "U", "T", "TL2"});
    CHECK(std::stod(rows[1][3]) == 1.0);
    CHECK(std::stod(rows[2][3]) == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));

    const auto uniform = parse_csv(run("gas").out);
    const double tl2 = std::stod(uniform[1][4]);
    for (std::size_t i = 1; i < uniform.size(); ++i) CHECK(std::abs(std::stod(uniform[i][4]) - tl2) / tl2 < 1e-12);

    CHECK(run("gas --beta0 -1").status == 1);
    CHECK(run("gas --t 1,0").status == 1);
}

TEST_CASE("identical flags give identical bytes")
{
    CHECK(run("eval --n 2 --t 0,0.5 --grid 64").out == run("eval --n 2 --t 0,0.5 --grid 64").out);
    CHECK(run("gas --t 0,0.5,1").out == run("gas --t 0,0.5,1").out);
}

TEST_CASE("help lists defaults")
{
    const Run r = run("verify --help");
    CHECK(r.status == 0);
    CHECK(r.out.find("8192") != std::string::npos);
    CHECK(r.out.find("--phase-convention") != std::string::npos);
}
