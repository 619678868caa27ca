#include "doctest.h"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hvf/cli.hpp"
#include "hvf/io.hpp"

using namespace hvf;
using io::json;

namespace
{

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "hvf");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch_dir(const std::string &name)
{
    auto p = std::filesystem::temp_directory_path() / ("hvf_cli_test_" + name);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

} // namespace

TEST_CASE("eisenstein table")
{
    const auto r = run_cli({"eisenstein", "--mu", "3", "--n", "8", "--a1=-24/1"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("coefficients").at("2").at(1) == "-24/1");
    CHECK(j.at("coefficients").at("4").at(1) == "240/1");
    CHECK(j.at("coefficients").at("6").at(1) == "-504/1");
    CHECK(j.at("exact") == true);

    // A negative value given as a separate token also parses.
    const auto r2 = run_cli({"eisenstein", "--mu", "3", "--n", "8", "--a1", "-24/1"});
    CHECK(r2.code == 0);
    CHECK(r2.out == r.out);

    const auto csv = run_cli({"eisenstein", "--mu", "4", "--n", "4", "--a1", "1/1", "--format", "csv"});
    REQUIRE(csv.code == 0);
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,E2,E4,E6,E8,closure_residual");
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.substr(line.rfind(',') + 1) == "0/1");
        ++rows;
    }
    CHECK(rows == 5);

    CHECK(run_cli({"eisenstein", "--mu", "2", "--n", "8", "--a1", "1/1"}).code == cli::usage);
    CHECK(run_cli({"eisenstein", "--mu", "3", "--n", "1", "--a1", "1/1"}).code == cli::usage);
    CHECK(run_cli({"eisenstein", "--mu", "3", "--a1", "x/y"}).code == cli::usage);
    CHECK(run_cli({"--mu", "3"}).code == cli::usage);
    CHECK(run_cli({"frobnicate"}).code == cli::usage);
}

TEST_CASE("degenerate recursion is reported with its order")
{
    const auto r = run_cli({"eisenstein", "--mu", "6", "--n", "8", "--a1", "1/1"});
    CHECK(r.code == cli::degeneracy);
    const json j = json::parse(r.out);
    CHECK(j.at("error") == "degenerate_recursion");
    CHECK(j.at("mu") == 6);
    CHECK(j.at("order") == 2);

    const auto pinned = run_cli({"eisenstein", "--mu", "6", "--n", "8", "--a1", "1/1", "--pin", "2=-1/2"});
    CHECK(pinned.code == 0);
    CHECK(json::parse(pinned.out).at("coefficients").at("2").at(2) == "-1/2");
    // Pinning a determined order is refused.
    CHECK(run_cli({"eisenstein", "--mu", "6", "--n", "8", "--a1", "1/1", "--pin", "3=1"}).code == cli::usage);

    const auto r10 = run_cli({"eisenstein", "--mu", "10", "--n", "8", "--a1", "1/1"});
    CHECK(r10.code == cli::degeneracy);
    CHECK(json::parse(r10.out).at("order") == 3);
}

TEST_CASE("multiplier and symcheck")
{
    const auto r = run_cli({"multiplier", "--mu", "5", "--r", "2", "--format", "latex"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("1 + \\varpi") != std::string::npos);
    CHECK(r.out.find("\\varpi^2") == std::string::npos);

    const auto j = json::parse(run_cli({"multiplier", "--mu", "5", "--r", "2"}).out);
    CHECK(j.at("minimal_polynomial").get<std::string>().find("x^2") != std::string::npos);
    // Entry (2,0) is varpi^2 reduced to 1 + varpi.
    CHECK(j.at("epsilon_T").at(2).at(0) == json::array({"1/1", "1/1"}));
    CHECK(j.at("epsilon_S").at(0).at(2) == "1/1");

    const auto s = run_cli({"symcheck", "--mu", "7", "--r", "5"});
    CHECK(s.code == 0);
    CHECK(json::parse(s.out).at("pass") == true);
    CHECK(run_cli({"symcheck", "--mu", "7", "--r", "-1"}).code == cli::usage);
}

TEST_CASE("extremal and dim")
{
    const auto r = run_cli({"extremal", "--n", "10"});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("coeffs").at(2) == "1/1");
    CHECK(j.at("coeffs").at(8) == "620/1");
    CHECK(j.at("integral") == true);
    CHECK(j.at("depth_basis").at("E2^3") == "1/10368");
    CHECK(j.at("depth_basis").at("E2*E4") == "-1/17280");
    CHECK(j.at("depth_basis").at("E6") == "-1/25920");

    const auto d = run_cli({"dim", "--mu", "3", "--weight", "12"});
    REQUIRE(d.code == 0);
    CHECK(json::parse(d.out).at("dim") == 2);
    CHECK(run_cli({"dim", "--mu", "5", "--weight", "8", "--format", "text"}).out == "2\n");
    CHECK(run_cli({"dim", "--mu", "5", "--weight", "6"}).code == cli::usage);
    CHECK(run_cli({"dim", "--mu", "5"}).code == cli::usage);
}

TEST_CASE("calibration and its cache")
{
    const auto dir = scratch_dir("cal");
    const std::vector<std::string> base{"calibrate", "--mu", "3", "--n", "64", "--tol", "1e-8", "--cache-dir",
                                        dir.string()};
    const auto first = run_cli(base);
    REQUIRE(first.code == 0);
    const json j1 = json::parse(first.out);
    CHECK(j1.at("cached") == false);
    CHECK(std::abs(j1.at("a1").get<double>() + 24.0) < 1e-6);
    CHECK(std::filesystem::exists(dir / "calibration.json"));

    const auto second = run_cli(base);
    REQUIRE(second.code == 0);
    const json j2 = json::parse(second.out);
    CHECK(j2.at("cached") == true);
    CHECK(j2.at("a1_text") == j1.at("a1_text"));

    auto no_cache = base;
    no_cache.push_back("--no-cache");
    CHECK(json::parse(run_cli(no_cache).out).at("cached") == false);

    const auto d6 = run_cli({"calibrate", "--mu", "6", "--n", "48", "--tol", "1e-8", "--cache-dir", dir.string()});
    REQUIRE(d6.code == 0);
    CHECK(std::abs(json::parse(d6.out).at("pin_scales").at("2").get<double>() + 0.5) < 1e-6);

    CHECK(run_cli({"calibrate", "--mu", "3", "--format", "csv"}).code == cli::usage);
    std::filesystem::remove_all(dir);
}

TEST_CASE("verify")
{
    const auto dir = scratch_dir("verify");
    const auto r = run_cli({"verify", "--mu", "3", "--which", "vector_S", "--weight", "6", "--depth", "3",
                            "--cache-dir", dir.string()});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("check") == "vector_S");
    CHECK(j.at("max_residual").get<double>() < 1e-6);
    CHECK(j.at("pass") == true);
    CHECK(j.at("points").size() == 12);
    const auto rep = io::report_from_json(j);
    CHECK(io::to_json(rep) == j);

    // Determinism for a fixed seed.
    CHECK(run_cli({"verify", "--mu", "3", "--which", "vector_S", "--weight", "6", "--depth", "3", "--cache-dir",
                   dir.string()})
              .out == r.out);

    const auto all = run_cli({"verify", "--mu", "3", "--a1=-24", "--weight", "2", "--depth", "1"});
    REQUIRE(all.code == 0);
    CHECK(json::parse(all.out).at("reports").size() == 6);

    const auto e4 = run_cli({"verify", "--mu", "4", "--a1=-8", "--which", "automorphic", "--form", "E4"});
    CHECK(e4.code == 0);

    // Wrong structure constant: the anomaly check fails with exit 3.
    const auto bad = run_cli({"verify", "--mu", "4", "--a1=-8", "--which", "E2_anomaly", "--structure-constant",
                              "lcm"});
    CHECK(bad.code == cli::verification_failed);
    CHECK(json::parse(bad.out).at("pass") == false);

    CHECK(run_cli({"verify", "--mu", "3", "--a1=-24", "--which", "nonsense"}).code == cli::usage);
    CHECK(run_cli({"verify", "--mu", "3", "--a1=-24", "--which", "vector_T"}).code == cli::usage);
    CHECK(run_cli({"verify", "--mu", "4", "--a1=-8", "--which", "vector_T", "--form", "D63"}).code == cli::usage);

    const auto text = run_cli({"verify", "--mu", "3", "--a1=-24", "--which", "E2_anomaly", "--format", "text"});
    CHECK(text.out.rfind("E2_anomaly mu=3", 0) == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("hauptbuch output and quasiform files")
{
    const auto dir = scratch_dir("form");
    const json form{{"mu", 3},
                    {"weight", 6},
                    {"depth", 3},
                    {"components",
                     {{{"weight", 6}, {"monomials", {{{"coeff", "-2/51840"}, {"factors", {6}}}}}},
                      {{"weight", 4}, {"monomials", {{{"coeff", "-3/51840"}, {"factors", {4}}}}}},
                      {{"weight", 2}, {"coeffs", {"0"}}},
                      {{"weight", 0}, {"coeffs", {"5/51840"}}}}}};
    const auto path = dir / "d63.json";
    std::ofstream(path) << form.dump();

    const auto r = run_cli({"hauptbuch", "--mu", "3", "--n", "12", "--a1=-24", "--form", path.string()});
    REQUIRE(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j.at("exact") == true);
    CHECK(j.at("depth") == 3);
    REQUIRE(j.at("components").size() == 4);
    // ghat_0 is D63 itself; the explicit constant component truncates the form to order 0.
    CHECK(j.at("components").at(0).at("coeffs").size() == 1);

    // The built-in form keeps the full truncation.
    const auto b = run_cli({"hauptbuch", "--mu", "3", "--n", "12", "--a1=-24", "--form", "D63"});
    REQUIRE(b.code == 0);
    const json jb = json::parse(b.out);
    const auto g0 = io::series_from_json(jb.at("components").at(0).at("coeffs"));
    CHECK(g0 == extremal_D63(12));
    CHECK(jb.at("components").at(1).at("c_power") == 1);
    CHECK(jb.at("components").at(3).at("weight") == 0);

    std::ofstream(dir / "broken.json") << "{not json";
    CHECK(run_cli({"hauptbuch", "--mu", "3", "--a1=-24", "--form", (dir / "broken.json").string()}).code ==
          cli::usage);
    CHECK(run_cli({"hauptbuch", "--mu", "3", "--a1=-24", "--form", (dir / "missing.json").string()}).code ==
          cli::usage);
    std::filesystem::remove_all(dir);
}

TEST_CASE("json round trips")
{
    const auto fam = hecke_eisenstein<Rational>(5, 6, Rational(-7, 3));
    const json j = io::family_to_json(fam);
    for (int w = 2; w <= 10; w += 2) {
        CHECK(io::series_from_json(j.at("coefficients").at(std::to_string(w))) == fam.series(w));
    }
    const auto a = FieldElement::varpi(7) * FieldElement::constant(7, Rational(3, 4)) + FieldElement(Rational(-1, 9));
    CHECK(io::field_from_json(7, io::to_json(a)) == a);
    const auto u = quasiform_D63(hecke_eisenstein<Rational>(3, 10, Rational(-24)));
    const auto back = io::quasiform_from_json(io::quasiform_to_json(u), hecke_eisenstein<Rational>(3, 10, Rational(-24)));
    CHECK(back.components == u.components);
}

TEST_CASE("the installed binary")
{
    const std::string cmd = std::string(HVF_BINARY) + " dim --mu 3 --weight 24 --format text 2>/dev/null";
    FILE *pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 128> buf{};
    std::string out;
    while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
        out += buf.data();
    }
    const int status = pclose(pipe);
    CHECK(status == 0);
    CHECK(out == "3\n");

    const std::string bad = std::string(HVF_BINARY) + " eisenstein --mu 6 --n 4 --a1 1/1 >/dev/null 2>&1";
    const int st = std::system(bad.c_str());
    CHECK(WEXITSTATUS(st) == 2);
}
