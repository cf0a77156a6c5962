#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "mpgb/json_io.hpp"
#include "test_util.hpp"

using namespace mpgb;
using mpgb::cli::cmd_bench;
using mpgb::cli::cmd_generate;
using mpgb::cli::cmd_homology;
using mpgb::cli::cmd_matrices;
using mpgb::cli::cmd_validate;

namespace {

std::string demo_path() { return mpgb::test::data_path("demo.mf"); }

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name, const std::string& content = "") {
        path = std::string("/tmp/mpgb_test_") + name;
        if (!content.empty()) {
            std::ofstream f(path);
            f << content;
        }
    }
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("validate exits 0 on the demo, 1 on violations, 2 on io errors") {
    std::ostringstream out, err;
    CHECK(cmd_validate(demo_path(), out, err) == 0);
    CHECK(out.str().rfind("ok", 0) == 0);

    TempFile broken("broken.mf",
                    "dim 2\nsimplex 0 @ (0,0)\nsimplex 1 @ (1,0)\nsimplex 0 1 @ (0,0)\n");
    std::ostringstream out1, err1;
    CHECK(cmd_validate(broken.path, out1, err1) == 1);
    CHECK(out1.str().find("violation") != std::string::npos);
    CHECK(out1.str().find("[1]") != std::string::npos);

    std::ostringstream out2, err2;
    CHECK(cmd_validate("/nonexistent/file.mf", out2, err2) == 2);

    TempFile syntax("syntax.mf", "dim 2\nsimplex 0 @ oops\n");
    std::ostringstream out3, err3;
    CHECK(cmd_validate(syntax.path, out3, err3) == 2);
    CHECK(err3.str().find("line 2") != std::string::npos);
}

TEST_CASE("homology text output carries the expected generator counts") {
    mpgb::cli::HomologyConfig cfg;
    cfg.path = demo_path();
    std::ostringstream out, err;
    REQUIRE(cmd_homology(cfg, out, err) == 0);
    std::string s = out.str();
    CHECK(s.find("v' = (3,2)") != std::string::npos);
    CHECK(s.find("cycles (7 generators") != std::string::npos);
    CHECK(s.find("boundaries (7 generators") != std::string::npos);
    CHECK(s.find("cycles (3 generators") != std::string::npos);
    CHECK(s.find("boundaries (1 generators") != std::string::npos);

    mpgb::cli::HomologyConfig one_dim = cfg;
    one_dim.dims = {1};
    std::ostringstream out1, err1;
    REQUIRE(cmd_homology(one_dim, out1, err1) == 0);
    CHECK(out1.str().find("dimension 1") != std::string::npos);
    CHECK(out1.str().find("dimension 0") == std::string::npos);
}

TEST_CASE("homology json re-parses to the same modules as the direct run") {
    mpgb::cli::HomologyConfig cfg;
    cfg.path = demo_path();
    cfg.format = "json";
    std::ostringstream out, err;
    REQUIRE(cmd_homology(cfg, out, err) == 0);
    auto j = nlohmann::json::parse(out.str());
    CHECK(j["v_prime"] == nlohmann::json({3, 2}));
    CHECK(j["field"] == "q");
    CHECK(j["order"] == "pot-grlex");
    REQUIRE(j["dimensions"].size() == 3);

    auto mf = mpgb::test::load_demo();
    MonomialOrder order;
    auto res = run_pipeline<Rational>(mf, Rational::Field{}, order);
    for (const auto& jd : j["dimensions"]) {
        int n = jd["n"].get<int>();
        const auto& sp = res.spaces[n];
        for (auto part : {"boundaries", "cycles"}) {
            std::vector<FreeModuleElement<Rational>> parsed;
            for (const auto& jg : jd[part])
                parsed.push_back(element_from_json<Rational>(jg, sp, order));
            const auto& direct = std::string(part) == "boundaries"
                                     ? res.dimensions[n].boundaries.generators
                                     : res.dimensions[n].cycles.generators;
            CHECK(module_equal(parsed, direct, sp.D, order).equal);
        }
    }
}

TEST_CASE("homology rejects bad inputs with the documented exit codes") {
    TempFile invalid("invalid.mf",
                     "dim 2\nsimplex 0 @ (0,0)\nsimplex 1 @ (1,0)\nsimplex 0 1 @ (0,0)\n");
    mpgb::cli::HomologyConfig cfg;
    cfg.path = invalid.path;
    std::ostringstream out, err;
    CHECK(cmd_homology(cfg, out, err) == 1);

    mpgb::cli::HomologyConfig missing;
    missing.path = "/nonexistent.mf";
    std::ostringstream o2, e2;
    CHECK(cmd_homology(missing, o2, e2) == 2);

    mpgb::cli::HomologyConfig badfield;
    badfield.path = demo_path();
    badfield.field = "gf:6";
    std::ostringstream o3, e3;
    CHECK(cmd_homology(badfield, o3, e3) == 2);

    mpgb::cli::HomologyConfig badorder;
    badorder.path = demo_path();
    badorder.order = "mystery";
    std::ostringstream o4, e4;
    CHECK(cmd_homology(badorder, o4, e4) == 2);
}

TEST_CASE("homology over gf(2) and alternate orders still passes the oracle") {
    mpgb::cli::HomologyConfig cfg;
    cfg.path = demo_path();
    cfg.field = "gf:2";
    cfg.oracle = true;
    std::ostringstream out, err;
    CHECK(cmd_homology(cfg, out, err) == 0);
    CHECK(out.str().find("oracle dimension 1") != std::string::npos);

    mpgb::cli::HomologyConfig lex = cfg;
    lex.field = "q";
    lex.order = "pot-lex";
    std::ostringstream o2, e2;
    CHECK(cmd_homology(lex, o2, e2) == 0);

    mpgb::cli::HomologyConfig top = cfg;
    top.field = "q";
    top.order = "top-grlex";
    std::ostringstream o3, e3;
    CHECK(cmd_homology(top, o3, e3) == 0);
}

TEST_CASE("empty complexes succeed with no dimensions") {
    TempFile empty("empty.mf", "dim 2\n");
    mpgb::cli::HomologyConfig cfg;
    cfg.path = empty.path;
    std::ostringstream out, err;
    CHECK(cmd_homology(cfg, out, err) == 0);
}

TEST_CASE("generate writes a validating staircase file") {
    TempFile csv("two.csv", "0,0\n2,0\n");
    TempFile out_mf("two.mf");
    mpgb::cli::GenerateConfig cfg;
    cfg.csv_path = csv.path;
    cfg.direction = {1, 0};
    cfg.grid = {2, 2, 4, 4};
    cfg.max_dim = 1;
    cfg.out_path = out_mf.path;
    std::ostringstream out, err;
    REQUIRE(cmd_generate(cfg, out, err) == 0);

    std::ostringstream vo, ve;
    CHECK(cmd_validate(out_mf.path, vo, ve) == 0);

    std::ifstream in(out_mf.path);
    auto mf = parse_multifiltration(in);
    const SimplexEntry* e = mf.find(Simplex{{0, 1}});
    REQUIRE(e != nullptr);
    CHECK(e->grades == std::vector<Grade>{Grade{2, 0}});
}

TEST_CASE("generate handles single points and bad csv") {
    TempFile csv("one.csv", "x,y\n0.5,0.5\n");
    mpgb::cli::GenerateConfig cfg;
    cfg.csv_path = csv.path;
    cfg.grid = {1, 1, 2, 2};
    cfg.out_path = "-";
    std::ostringstream out, err;
    REQUIRE(cmd_generate(cfg, out, err) == 0);
    CHECK(out.str().find("simplex 0 @ (0,0)") != std::string::npos);

    TempFile bad("bad.csv", "0,0\nnope,3\n");
    mpgb::cli::GenerateConfig bcfg = cfg;
    bcfg.csv_path = bad.path;
    std::ostringstream o2, e2;
    CHECK(cmd_generate(bcfg, o2, e2) == 2);
}

TEST_CASE("generate from aligned points is not one-critical") {
    TempFile csv("three.csv", "0,0\n1.2,0\n0,1.2\n");
    TempFile out_mf("three.mf");
    mpgb::cli::GenerateConfig cfg;
    cfg.csv_path = csv.path;
    cfg.direction = {1, 0};
    cfg.grid = {2, 2, 8, 8};
    cfg.max_dim = 2;
    cfg.out_path = out_mf.path;
    std::ostringstream out, err;
    REQUIRE(cmd_generate(cfg, out, err) == 0);
    CHECK(err.str().find("non one-critical") != std::string::npos);
    std::ifstream in(out_mf.path);
    CHECK_FALSE(is_one_critical(parse_multifiltration(in)));
}

TEST_CASE("bench prints one row per size and a slope") {
    mpgb::cli::BenchConfig cfg;
    cfg.sizes = {10, 20};
    cfg.seed = 5;
    std::ostringstream out, err;
    REQUIRE(cmd_bench(cfg, out, err) == 0);
    std::string s = out.str();
    CHECK(s.find("size") != std::string::npos);
    CHECK(s.find("10") != std::string::npos);
    CHECK(s.find("20") != std::string::npos);
    CHECK(s.find("log-log slope") != std::string::npos);

    // identical seeds rebuild identical inputs, so the size column repeats
    std::ostringstream out2, err2;
    REQUIRE(cmd_bench(cfg, out2, err2) == 0);
    auto first_col = [](const std::string& text) {
        std::vector<std::string> sizes;
        std::istringstream is(text);
        std::string line;
        while (std::getline(is, line)) {
            std::istringstream ls(line);
            std::string w;
            ls >> w;
            sizes.push_back(w);
        }
        return sizes;
    };
    CHECK(first_col(out.str()) == first_col(out2.str()));

    mpgb::cli::BenchConfig none;
    std::ostringstream o3, e3;
    CHECK(cmd_bench(none, o3, e3) == 2);
}

TEST_CASE("matrices dump lists one labeled column per fundamental element") {
    mpgb::cli::MatricesConfig cfg;
    cfg.path = demo_path();
    std::ostringstream out, err;
    REQUIRE(cmd_matrices(cfg, out, err) == 0);
    std::string s = out.str();
    CHECK(s.find("column ([1 2], (0,2))") != std::string::npos);
    CHECK(s.find("column ([1 2 4], (2,2))") != std::string::npos);

    mpgb::cli::MatricesConfig jcfg = cfg;
    jcfg.format = "json";
    std::ostringstream o2, e2;
    REQUIRE(cmd_matrices(jcfg, o2, e2) == 0);
    auto j = nlohmann::json::parse(o2.str());
    REQUIRE(j.size() == 3);
    CHECK(j[1]["columns"].size() == 8);
}

TEST_CASE("thread cap comes from the environment") {
    unsetenv("MPGB_THREADS");
    CHECK(mpgb::cli::threads_from_env() == 1);
    setenv("MPGB_THREADS", "4", 1);
    CHECK(mpgb::cli::threads_from_env() == 4);
    setenv("MPGB_THREADS", "bogus", 1);
    CHECK(mpgb::cli::threads_from_env() == 1);
    unsetenv("MPGB_THREADS");
}
