#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "hecke/cli.hpp"
#include "hecke/io.hpp"

namespace fs = std::filesystem;
using hecke::json;

namespace {

struct result {
    int code;
    std::string out, err;
};

result heckerpf(std::vector<std::string> args)
{
    args.insert(args.begin(), "heckerpf");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = hecke::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

struct scratch {
    fs::path dir;
    scratch()
    {
        dir = fs::temp_directory_path() / ("heckerpf-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(dir);
    }
    ~scratch() { fs::remove_all(dir); }
    std::string operator/(const std::string& name) const { return (dir / name).string(); }
};

struct budget_env {
    explicit budget_env(const char* v) { setenv("RPF_BUDGET", v, 1); }
    ~budget_env() { unsetenv("RPF_BUDGET"); }
};

} // namespace

TEST_CASE("forms enumerate lists the two classes of discriminant 14")
{
    auto r = heckerpf({"forms", "enumerate", "--p", "4", "--disc", "14"});
    REQUIRE(r.code == hecke::cli::exit_ok);
    json j = json::parse(r.out);
    CHECK(j.at("class_number") == 2);
    CHECK(j.at("simple_forms") == 4);
    CHECK(j.at("cycles")[0].at("label") == "[1, -L, -3]");
    CHECK(j.at("cycles")[1].at("label") == "[3, -L, -1]");

    auto tex = heckerpf({"--latex", "forms", "enumerate", "--p", "4", "--disc", "14"});
    CHECK(tex.out == "A_{1}: [1, -\\sqrt{2}, -3] [1, \\sqrt{2}, -3]\n"
                     "A_{2}: [3, -\\sqrt{2}, -1] [3, \\sqrt{2}, -1]\n");
    // Global flags are accepted after the subcommand as well.
    CHECK(heckerpf({"forms", "enumerate", "--p", "4", "--disc", "14", "--latex"}).out == tex.out);
}

TEST_CASE("build, verify and analyze")
{
    scratch tmp;
    auto b = heckerpf({"rpf", "build", "--p", "4", "--disc", "14", "--k", "1", "--theorem", "1", "--class", "1",
                       "--out", tmp / "q.json"});
    REQUIRE(b.code == hecke::cli::exit_ok);
    CHECK(slurp(tmp / "q.json") == b.out);

    auto v = heckerpf({"rpf", "verify", "--in", tmp / "q.json"});
    CHECK(v.code == hecke::cli::exit_ok);
    json verdict = json::parse(v.out);
    CHECK(verdict.at("verified") == true);
    CHECK(verdict.at("isp_report").size() == 1);
    CHECK(verdict.at("isp_report")[0].at("symmetric") == false);

    auto a = heckerpf({"rpf", "analyze", "--in", tmp / "q.json"});
    CHECK(a.code == hecke::cli::exit_ok);
    CHECK(json::parse(a.out).at("isp_report") == verdict.at("isp_report"));

    // One coefficient of the realized function changed to 2.
    json q = json::parse(b.out);
    json& c = q["realized"]["den"][0]["a"]["coeffs"][0];
    REQUIRE(c == "1");
    c = "2";
    std::ofstream(tmp / "bad.json") << q.dump();
    auto bad = heckerpf({"rpf", "verify", "--in", tmp / "bad.json"});
    CHECK(bad.code == hecke::cli::exit_not_verified);
    json bv = json::parse(bad.out);
    CHECK(bv.at("verified") == false);
    CHECK(bv.at("terms_match_realized") == false);
}

TEST_CASE("other constructions through the CLI")
{
    scratch tmp;
    std::vector<std::vector<std::string>> builds{
        {"--p", "4", "--disc", "14", "--k", "3", "--theorem", "2", "--class", "1", "--class", "2"},
        {"--p", "3", "--disc", "5", "--k", "2", "--construction", "theorem3", "--class", "1"},
        {"--p", "5", "--k", "1", "--construction", "zero", "--a0", "3/2", "--b1", "L"},
        {"--p", "4", "--disc", "14", "--k", "2", "--theorem", "1", "--class", "2=1+r", "--c0", "L", "--tail",
         "0,1,0"},
    };
    for (auto args : builds) {
        args.insert(args.begin(), {"rpf", "build", "--out", tmp / "q.json"});
        CAPTURE(args.back());
        REQUIRE(heckerpf(args).code == hecke::cli::exit_ok);
        auto v = heckerpf({"rpf", "verify", "--in", tmp / "q.json"});
        // The general shape with an arbitrary tail is only a candidate.
        bool expect_ok = std::find(args.begin(), args.end(), "--tail") == args.end();
        CHECK(v.code == (expect_ok ? hecke::cli::exit_ok : hecke::cli::exit_not_verified));
    }
}

TEST_CASE("cfrac, group and field commands")
{
    auto e = heckerpf({"cfrac", "expand", "--p", "4", "--alpha", "(sqrt2+sqrt14)/2"});
    REQUIRE(e.code == hecke::cli::exit_ok);
    json j = json::parse(e.out);
    CHECK(j.at("expansion").at("period").size() == 2);
    CHECK(j.at("automorph").at("mat")[0].at("coeffs") == json::parse(R"(["0","2"])"));

    auto g = heckerpf({"group", "word", "--p", "5", "--word", "UUUUU"});
    CHECK(json::parse(g.out).at("kind") == "identity");
    auto u = heckerpf({"group", "upow", "--p", "7", "--t", "3"});
    CHECK(json::parse(u.out).at("kind") == "elliptic");

    auto f = heckerpf({"field", "--p", "5", "--elem", "L^2-L-1"});
    CHECK(json::parse(f.out).at("element").at("sign") == 0);
}

TEST_CASE("usage and input errors exit with 1")
{
    using hecke::cli::exit_error;
    CHECK(heckerpf({}).code == exit_error);
    CHECK(heckerpf({"frobnicate"}).code == exit_error);
    CHECK(heckerpf({"forms", "enumerate", "--p", "4"}).code == exit_error);
    CHECK(heckerpf({"forms", "enumerate", "--p", "2", "--disc", "5"}).code == exit_error);
    CHECK(heckerpf({"forms", "enumerate", "--p", "4", "--disc", "14+"}).code == exit_error);
    CHECK(heckerpf({"forms", "enumerate", "--p", "4", "--disc", "-3"}).code == exit_error);
    CHECK(heckerpf({"forms", "isp", "--p", "4", "--disc", "14", "--class", "3"}).code == exit_error);
    CHECK(heckerpf({"cfrac", "expand", "--p", "4", "--alpha", "3/2"}).code == exit_error);
    CHECK(heckerpf({"rpf", "build", "--p", "4", "--disc", "14", "--k", "2", "--theorem", "2", "--class", "1"})
              .code == exit_error);
    CHECK(heckerpf({"rpf", "verify", "--in", "/nonexistent/q.json"}).code == exit_error);

    scratch tmp;
    std::ofstream(tmp / "junk.json") << "{\"p\": 4,";
    auto r = heckerpf({"rpf", "verify", "--in", tmp / "junk.json"});
    CHECK(r.code == exit_error);
    CHECK(!r.err.empty());

    CHECK(heckerpf({"--help"}).code == hecke::cli::exit_ok);
}

TEST_CASE("budget exhaustion exits with 3")
{
    budget_env env("1");
    auto e = heckerpf({"cfrac", "expand", "--p", "4", "--alpha", "(sqrt2+sqrt14)/2"});
    CHECK(e.code == hecke::cli::exit_budget);
    CHECK(e.err.find("budget exhausted") != std::string::npos);
    CHECK(heckerpf({"forms", "enumerate", "--p", "4", "--disc", "14"}).code == hecke::cli::exit_budget);
}

TEST_CASE("manifests are deterministic and replayable")
{
    scratch tmp;
    std::vector<std::string> args{"--manifest", tmp / "m.json", "forms", "enumerate", "--p", "4", "--disc", "14"};
    auto first = heckerpf(args);
    REQUIRE(first.code == 0);
    std::string m1 = slurp(tmp / "m.json");
    json m = json::parse(m1);
    CHECK(m.at("p") == 4);
    CHECK(m.at("command") == "forms enumerate");
    CHECK(m.at("parameters").at("disc") == "14");
    CHECK(m.at("budget") == 10000);
    CHECK(m.at("output_sha256").get<std::string>().size() == 64);

    std::vector<std::string> replay;
    for (const auto& a : m.at("command_line"))
        replay.push_back(a.get<std::string>());
    auto second = heckerpf(replay);
    CHECK(second.out == first.out);
    CHECK(slurp(tmp / "m.json") == m1);

    // The digest tracks the printed bytes.
    heckerpf({"--manifest", tmp / "m2.json", "forms", "enumerate", "--p", "4", "--disc", "14", "--latex"});
    CHECK(json::parse(slurp(tmp / "m2.json")).at("output_sha256") != m.at("output_sha256"));
}
