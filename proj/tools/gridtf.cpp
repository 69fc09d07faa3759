#include "gridtf/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace {

struct CommonOpts {
    std::string config_path;
    std::string out_dir;
    int order = 0;
    std::string alpha;
    std::string baseline;
    bool force = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "scenario config (JSON)");
    cmd->add_option("--out", opts.out_dir, "output directory");
    cmd->add_option("--order", opts.order, "Pade order n (1..10)")->check(CLI::Range(1, 10));
    cmd->add_option("--alpha", opts.alpha, "curve parameter source")
        ->check(CLI::IsMember({"min-req", "max-lim", "explicit"}));
    cmd->add_option("--baseline", opts.baseline, "baseline selection")
        ->check(CLI::IsMember({"vi-fast", "vi-slow", "none"}));
    cmd->add_flag("--force", opts.force, "proceed despite infeasible curve parameters");
}

gridtf::ScenarioConfig build_config(const CommonOpts& opts) {
    gridtf::ScenarioConfig config;
    if (!opts.config_path.empty()) config = gridtf::load_config(opts.config_path);
    if (!opts.out_dir.empty()) config.output_dir = opts.out_dir;
    if (opts.order > 0) config.order = opts.order;
    if (!opts.alpha.empty()) config.alpha_mode = gridtf::alpha_mode_from_string(opts.alpha);
    if (!opts.baseline.empty()) {
        config.baselines.clear();
        if (opts.baseline != "none") config.baselines.push_back(opts.baseline);
    }
    gridtf::validate_config(config);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"piecewise-linear grid-code curves to rational transfer functions"};
    app.require_subcommand(1);

    CommonOpts opts;
    auto* validate = app.add_subcommand("validate", "check curve parameters against all bounds");
    auto* synth = app.add_subcommand("synth", "synthesize the desired transfer functions");
    auto* simulate = app.add_subcommand("simulate", "export step-response trajectories as CSV");
    auto* check = app.add_subcommand("check", "run grid-code compliance tests");
    for (auto* cmd : {validate, synth, simulate, check}) add_common(cmd, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        const gridtf::ScenarioConfig config = build_config(opts);
        if (validate->parsed()) return gridtf::cmd_validate(config, std::cout);
        if (synth->parsed()) return gridtf::cmd_synth(config, opts.force, std::cout);
        if (simulate->parsed()) return gridtf::cmd_simulate(config, opts.force, std::cout);
        if (check->parsed()) return gridtf::cmd_check(config, opts.force, std::cout);
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return gridtf::kExitConfigError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return gridtf::kExitConfigError;
    }
    return gridtf::kExitConfigError;
}
