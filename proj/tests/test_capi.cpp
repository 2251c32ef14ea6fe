#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dkc/dkc.h"

namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("dkc_capi_" + tag);
        fs::remove_all(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string str() const { return path.string(); }
};

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(DKC_CLI_PATH) + " " + args;
    int rc = std::system(cmd.c_str());
    REQUIRE(rc >= 0);
    return WEXITSTATUS(rc);
}

} // namespace

TEST_CASE("version string") {
    CHECK(std::string(dkc_version()) == "0.1.0");
}

TEST_CASE("parse, override, run") {
    dkc_scenario* sc = nullptr;
    REQUIRE(dkc_scenario_parse("expansion_time = 1.5\nharmonic = true\n", &sc) ==
            DKC_OK);
    REQUIRE(sc != nullptr);

    TempDir dir("run");
    CHECK(dkc_run(sc, "simulate", dir.str().c_str(), 1) == DKC_OK);
    CHECK(fs::exists(dir.path / "summary.csv"));
    CHECK(fs::exists(dir.path / "manifest.txt"));

    // overriding a key changes the result
    CHECK(dkc_scenario_set(sc, "expansion_time", "3.0") == DKC_OK);
    TempDir dir2("run2");
    CHECK(dkc_run(sc, "simulate", dir2.str().c_str(), 1) == DKC_OK);
    CHECK(slurp(dir.path / "summary.csv") != slurp(dir2.path / "summary.csv"));

    dkc_scenario_free(sc);
}

TEST_CASE("config errors come back as status 2") {
    dkc_scenario* sc = nullptr;
    CHECK(dkc_scenario_parse("expansion_time = banana\n", &sc) == DKC_ERR_CONFIG);
    CHECK(sc == nullptr);
    CHECK(std::string(dkc_last_error()).size() > 0);

    CHECK(dkc_scenario_parse("expansion_time = -1\n", &sc) == DKC_ERR_CONFIG);

    // invalid override leaves the handle usable
    REQUIRE(dkc_scenario_parse("expansion_time = 1.5\nharmonic = true\n", &sc) ==
            DKC_OK);
    CHECK(dkc_scenario_set(sc, "expansion_time", "-5") == DKC_ERR_CONFIG);
    TempDir dir("still_ok");
    CHECK(dkc_run(sc, "simulate", dir.str().c_str(), 1) == DKC_OK);
    dkc_scenario_free(sc);

    CHECK(dkc_scenario_open("/nonexistent/path.cfg", &sc) == DKC_ERR_CONFIG);
    CHECK(dkc_run(nullptr, "simulate", "/tmp", 1) == DKC_ERR_CONFIG);
}

TEST_CASE("physics errors come back as status 3") {
    dkc_scenario* sc = nullptr;
    // degenerate doublet: both lenses share a width
    REQUIRE(dkc_scenario_parse("expansion_time = 10\n"
                               "widths[0] = 15\nwidths[1] = 15\n"
                               "design_mode = classical\n",
                               &sc) == DKC_OK);
    TempDir dir("degenerate");
    CHECK(dkc_run(sc, "simulate", dir.str().c_str(), 1) == DKC_ERR_PHYSICS);
    CHECK(std::string(dkc_last_error()).size() > 0);
    dkc_scenario_free(sc);
}

TEST_CASE("design strengths through the C surface") {
    dkc_scenario* sc = nullptr;
    REQUIRE(dkc_scenario_parse("expansion_time = 30\n"
                               "widths[0] = 15\nwidths[1] = 14\n"
                               "design_mode = classical\n",
                               &sc) == DKC_OK);
    double out[4] = {0, 0, 0, 0};
    int n = 0;
    REQUIRE(dkc_design_strengths(sc, out, 4, &n) == DKC_OK);
    REQUIRE(n == 2);
    CHECK(out[0] == doctest::Approx(29.094827586206897).epsilon(1e-12));
    CHECK(out[1] == doctest::Approx(-22.078160919540231).epsilon(1e-12));

    CHECK(dkc_design_strengths(sc, out, 1, &n) == DKC_ERR_CONFIG);
    dkc_scenario_free(sc);
}

TEST_CASE("harmonic strength helper") {
    double v = 0.0;
    REQUIRE(dkc_harmonic_strength(1.5, &v) == DKC_OK);
    CHECK(v == doctest::Approx(6.0 / 13.0).epsilon(1e-14));
    CHECK(dkc_harmonic_strength(-1.0, &v) == DKC_ERR_CONFIG);
    CHECK(dkc_harmonic_strength(1.5, nullptr) == DKC_ERR_CONFIG);
}

TEST_CASE("committed presets parse and the cheap ones run") {
    fs::path cfgs(DKC_CONFIG_DIR);
    for (const char* name : {"harmonic_example.cfg", "rb87_example.cfg", "fig1.cfg",
                             "fig2.cfg", "fig4.cfg", "fig5.cfg"}) {
        dkc_scenario* sc = nullptr;
        CHECK(dkc_scenario_open((cfgs / name).string().c_str(), &sc) == DKC_OK);
        dkc_scenario_free(sc);
    }

    dkc_scenario* sc = nullptr;
    REQUIRE(dkc_scenario_open((cfgs / "fig1.cfg").string().c_str(), &sc) == DKC_OK);
    TempDir dir("fig1");
    CHECK(dkc_run(sc, "wigner", dir.str().c_str(), 1) == DKC_OK);
    CHECK(fs::exists(dir.path / "wigner.csv"));
    dkc_scenario_free(sc);

    REQUIRE(dkc_scenario_open((cfgs / "fig5.cfg").string().c_str(), &sc) == DKC_OK);
    double out[2];
    int n = 0;
    REQUIRE(dkc_design_strengths(sc, out, 2, &n) == DKC_OK);
    CHECK(n == 2);
    CHECK(out[0] > 0.0);
    CHECK(out[1] < 0.0);
    dkc_scenario_free(sc);
}

TEST_CASE("reproduce through the C surface") {
    TempDir dir("repro");
    CHECK(dkc_reproduce("fig1", dir.str().c_str(), 1) == DKC_OK);
    CHECK(fs::exists(dir.path / "fig1_kick3.csv"));
    CHECK(fs::exists(dir.path / "manifest.txt"));
    CHECK(dkc_reproduce("fig9", dir.str().c_str(), 1) == DKC_ERR_CONFIG);
}

TEST_CASE("cli exit codes") {
    TempDir cfgdir("cli_cfg");
    fs::create_directories(cfgdir.path);
    fs::path cfg = cfgdir.path / "scenario.cfg";
    {
        std::ofstream f(cfg);
        f << "expansion_time = 1.5\nharmonic = true\n";
    }

    SUBCASE("success is exit 0") {
        TempDir out("cli_ok");
        CHECK(run_cli("simulate --config " + cfg.string() + " --out " + out.str()) == 0);
        CHECK(fs::exists(out.path / "summary.csv"));
    }

    SUBCASE("--set override works") {
        TempDir out("cli_set");
        CHECK(run_cli("simulate --config " + cfg.string() + " --out " + out.str() +
                      " --set expansion_time=2.5") == 0);
        CHECK(slurp(out.path / "manifest.txt").find("expansion_time = 2.5") !=
              std::string::npos);
    }

    SUBCASE("config problems are exit 2") {
        TempDir out("cli_bad");
        CHECK(run_cli("simulate --config /nonexistent.cfg --out " + out.str()) == 2);
        CHECK(run_cli("simulate --config " + cfg.string() + " --out " + out.str() +
                      " --set expansion_time=-1") == 2);
    }

    SUBCASE("physics problems are exit 3") {
        fs::path bad = cfgdir.path / "degenerate.cfg";
        {
            std::ofstream f(bad);
            f << "expansion_time = 10\nwidths[0] = 15\nwidths[1] = 15\n"
                 "design_mode = classical\n";
        }
        TempDir out("cli_phys");
        CHECK(run_cli("simulate --config " + bad.string() + " --out " + out.str()) == 3);
    }
}
