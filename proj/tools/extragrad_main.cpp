// Command-line front end: run, compare, audit, oracle.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extragrad/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Iterative solvers for common fixed-point / variational-inequality problems"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path = "trace.csv";
    std::vector<std::string> schemes;
    long run_samples = 10000;
    long oracle_samples = 100000;
    std::uint64_t seed_value = 0;
    bool have_seed = false;

    const auto add_seed = [&](CLI::App* cmd) {
        cmd->add_option("--seed-override", seed_value, "replace the config seed")
            ->each([&](const std::string&) { have_seed = true; });
    };

    auto* run_cmd = app.add_subcommand("run", "execute the configured scheme, write a trace CSV");
    run_cmd->add_option("--config", config_path, "problem configuration file")->required();
    run_cmd->add_option("--out", out_path, "output CSV path");
    add_seed(run_cmd);

    auto* compare_cmd =
        app.add_subcommand("compare", "run several schemes on one problem, tabulate iterations");
    compare_cmd->add_option("--config", config_path, "problem configuration file")->required();
    compare_cmd->add_option("--out", out_path, "output CSV path");
    compare_cmd->add_option("--schemes", schemes, "scheme names (comma separated)")
        ->required()
        ->delimiter(',');
    add_seed(compare_cmd);

    auto* audit_cmd = app.add_subcommand("audit", "verify the claimed operator/set properties");
    audit_cmd->add_option("--config", config_path, "problem configuration file")->required();
    audit_cmd->add_option("--samples", run_samples, "samples per property");
    add_seed(audit_cmd);

    auto* oracle_cmd =
        app.add_subcommand("oracle", "solve with the reference method and print the certificate");
    oracle_cmd->add_option("--config", config_path, "problem configuration file")->required();
    oracle_cmd->add_option("--samples", oracle_samples, "certificate sample count");
    add_seed(oracle_cmd);

    CLI11_PARSE(app, argc, argv);
    const std::optional<std::uint64_t> seed_override =
        have_seed ? std::optional<std::uint64_t>(seed_value) : std::nullopt;

    if (run_cmd->parsed())
        return extragrad::cmd_run(config_path, out_path, seed_override, std::cout, std::cerr);
    if (compare_cmd->parsed())
        return extragrad::cmd_compare(config_path, schemes, out_path, seed_override, std::cout,
                                      std::cerr);
    if (audit_cmd->parsed())
        return extragrad::cmd_audit(config_path, seed_override, run_samples, std::cout, std::cerr);
    if (oracle_cmd->parsed())
        return extragrad::cmd_oracle(config_path, seed_override, oracle_samples, std::cout,
                                     std::cerr);
    return extragrad::kExitValidation;
}
