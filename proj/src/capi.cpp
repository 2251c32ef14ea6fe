#include "dkc/dkc.h"

#include <cstring>
#include <string>

#include "config.hpp"
#include "errors.hpp"
#include "scenario.hpp"

using namespace dkc;

struct dkc_scenario {
    Config config;
};

namespace {

thread_local std::string g_last_error;

dkc_status status_for(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::config:
        return DKC_ERR_CONFIG;
    case ErrorKind::physics:
    case ErrorKind::resource:
        return DKC_ERR_PHYSICS;
    }
    return DKC_ERR_INTERNAL;
}

template <typename Fn>
dkc_status guarded(Fn&& fn) {
    try {
        fn();
        return DKC_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_for(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DKC_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return DKC_ERR_INTERNAL;
    }
}

dkc_status require(bool ok, const char* msg) {
    if (!ok) {
        g_last_error = msg;
        return DKC_ERR_CONFIG;
    }
    return DKC_OK;
}

} // namespace

extern "C" {

const char* dkc_version(void) { return library_version(); }

const char* dkc_last_error(void) { return g_last_error.c_str(); }

dkc_status dkc_scenario_open(const char* path, dkc_scenario** out) {
    if (dkc_status s = require(path && out, "null argument"); s != DKC_OK)
        return s;
    return guarded([&] {
        Config cfg = Config::parse_file(path);
        Scenario::from_config(cfg); // validate early
        *out = new dkc_scenario{std::move(cfg)};
    });
}

dkc_status dkc_scenario_parse(const char* text, dkc_scenario** out) {
    if (dkc_status s = require(text && out, "null argument"); s != DKC_OK)
        return s;
    return guarded([&] {
        Config cfg = Config::parse(text);
        Scenario::from_config(cfg);
        *out = new dkc_scenario{std::move(cfg)};
    });
}

dkc_status dkc_scenario_set(dkc_scenario* sc, const char* key, const char* value) {
    if (dkc_status s = require(sc && key && value, "null argument"); s != DKC_OK)
        return s;
    return guarded([&] {
        Config trial = sc->config;
        trial.set(key, value);
        Scenario::from_config(trial); // keep the handle valid on failure
        sc->config = std::move(trial);
    });
}

void dkc_scenario_free(dkc_scenario* sc) { delete sc; }

dkc_status dkc_run(dkc_scenario* sc, const char* command, const char* out_dir,
                   int threads) {
    if (dkc_status s = require(sc && command && out_dir, "null argument"); s != DKC_OK)
        return s;
    return guarded([&] {
        Scenario scenario = Scenario::from_config(sc->config);
        run_scenario(scenario, command, out_dir, threads > 0 ? threads : 1);
    });
}

dkc_status dkc_reproduce(const char* figure, const char* out_dir, int threads) {
    if (dkc_status s = require(figure && out_dir, "null argument"); s != DKC_OK)
        return s;
    return guarded([&] { reproduce_figures(figure, out_dir, threads > 0 ? threads : 1); });
}

dkc_status dkc_design_strengths(dkc_scenario* sc, double* out, int capacity,
                                int* n_out) {
    if (dkc_status s = require(sc && out && n_out, "null argument"); s != DKC_OK)
        return s;
    return guarded([&] {
        Scenario scenario = Scenario::from_config(sc->config);
        if (scenario.widths.empty())
            fail_config("design requires widths[]");
        DriveKind kind = scenario.design_mode == "classical" ? DriveKind::focal
                                                             : DriveKind::scaling;
        DesignResult r = design_kicks(scenario.widths, scenario.expansion_time, kind);
        if (static_cast<int>(r.strengths.size()) > capacity)
            fail_config("output capacity too small");
        std::memcpy(out, r.strengths.data(), r.strengths.size() * sizeof(double));
        *n_out = static_cast<int>(r.strengths.size());
    });
}

dkc_status dkc_harmonic_strength(double t_f, double* out) {
    if (dkc_status s = require(out != nullptr, "null argument"); s != DKC_OK)
        return s;
    return guarded([&] { *out = harmonic_kick_strength(t_f).strength; });
}

} // extern "C"
