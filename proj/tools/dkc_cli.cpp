// Command-line front end; all the work happens behind the C API.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dkc/dkc.h"

namespace {

int finish(dkc_status status) {
    if (status != DKC_OK)
        std::fprintf(stderr, "error: %s\n", dkc_last_error());
    return static_cast<int>(status);
}

struct ScenarioHandle {
    dkc_scenario* ptr = nullptr;
    ~ScenarioHandle() { dkc_scenario_free(ptr); }
};

int run_command(const std::string& command, const std::string& config_path,
                const std::string& out_dir, int threads,
                const std::vector<std::string>& overrides) {
    ScenarioHandle sc;
    dkc_status status = config_path.empty()
                            ? dkc_scenario_parse("", &sc.ptr)
                            : dkc_scenario_open(config_path.c_str(), &sc.ptr);
    if (status != DKC_OK)
        return finish(status);
    for (const auto& kv : overrides) {
        std::size_t eq = kv.find('=');
        if (eq == std::string::npos) {
            std::fprintf(stderr, "error: --set expects key=value, got '%s'\n", kv.c_str());
            return static_cast<int>(DKC_ERR_CONFIG);
        }
        status = dkc_scenario_set(sc.ptr, kv.substr(0, eq).c_str(),
                                  kv.substr(eq + 1).c_str());
        if (status != DKC_OK)
            return finish(status);
    }
    return finish(dkc_run(sc.ptr, command.c_str(), out_dir.c_str(), threads));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delta-kick cooling design and simulation toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    int threads = 1;
    std::vector<std::string> overrides;
    std::string figure;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* opt = cmd->add_option("--config", config_path, "Scenario config file");
        if (needs_config)
            opt->required();
        cmd->add_option("--out", out_dir, "Output directory");
        cmd->add_option("--threads", threads, "Worker threads for sweeps and maps");
        cmd->add_option("--set", overrides, "Override a config field (key=value)");
    };

    const char* verbs[] = {"design", "simulate", "sweep", "sensitivity", "wigner"};
    const char* descriptions[] = {
        "Compute kick strengths and write them as a config",
        "Run the full protocol and export the requested observables",
        "Sweep the expansion time and record cooling ratios",
        "Map doublet performance over kick-strength scalings",
        "Export the Wigner map of the final state",
    };
    for (int i = 0; i < 5; ++i)
        add_common(app.add_subcommand(verbs[i], descriptions[i]), false);

    auto* reproduce = app.add_subcommand(
        "reproduce", "Emit the data files behind a figure preset");
    reproduce->add_option("figure", figure, "fig1 | fig2 | fig4 | fig5")->required();
    reproduce->add_option("--out", out_dir, "Output directory");
    reproduce->add_option("--threads", threads, "Worker threads");

    CLI11_PARSE(app, argc, argv);

    auto* sub = app.get_subcommands().front();
    if (sub->get_name() == "reproduce")
        return finish(dkc_reproduce(figure.c_str(), out_dir.c_str(), threads));
    return run_command(sub->get_name(), config_path, out_dir, threads, overrides);
}
