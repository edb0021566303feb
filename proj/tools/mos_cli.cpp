// Command-line runner for mode-synthesizer experiments on MNIST IDX data.
//
//   mos run   --data-dir DIR --digit D --n N [--generations G] --out-dir OUT
//   mos table --data-dir DIR --n N [--generations G] --out-dir OUT

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mos/error.hpp"
#include "mos/experiment.hpp"

namespace {

using mos::experiment::RunConfig;

struct RawOptions {
    std::string rules = "maximal";
    std::string transfer = "logistic";
};

void add_shared_options(CLI::App& cmd, RunConfig& config, RawOptions& raw)
{
    cmd.add_option("--data-dir", config.data_dir, "Directory holding decompressed IDX files")
        ->required();
    cmd.add_option("--n", config.n, "Samples drawn from the class")->required();
    cmd.add_option("--generations", config.generations, "Mode-selection rounds")
        ->capture_default_str();
    cmd.add_option("--ts1", config.ts1, "Maximal-rule threshold (default 1/n)");
    cmd.add_option("--ts2", config.ts2, "Minimal-rule threshold (default 1/(2n))");
    cmd.add_option("--rules", raw.rules,
                   "Comma-separated subset of maximal,minimal,equivalency,fuzzy or 'all'")
        ->capture_default_str();
    cmd.add_option("--transfer", raw.transfer, "logistic, linear or tanh")->capture_default_str();
    cmd.add_option("--bias", config.bias, "Bias added to the probabilities")
        ->capture_default_str();
    cmd.add_option("--out-dir", config.out_dir, "Output directory")->required();
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Mode synthesizer experiment runner"};
    app.require_subcommand(1);

    RunConfig config;
    RawOptions raw;

    auto* run = app.add_subcommand("run", "Learn modes for one digit class and write artifacts");
    add_shared_options(*run, config, raw);
    run->add_option("--digit", config.digit, "Digit class 0..9")->required();

    auto* table = app.add_subcommand("table", "Learned-index table across all ten classes");
    add_shared_options(*table, config, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return mos::experiment::kExitConfig;
    }

    try {
        config.rules = mos::parse_rule_set(raw.rules);
        config.transfer = mos::parse_transfer(raw.transfer);

        if (run->parsed()) {
            const auto outcome = mos::experiment::cmd_run(config);
            const auto& recon = *outcome.result.reconstruction;
            std::cout << "digit " << config.digit << ": " << outcome.result.memory.size()
                      << " generation(s), reconstruction " << recon.height << "x" << recon.width
                      << ", mean loss " << outcome.result.loss->mean_loss << "\n";
        } else {
            std::cout << mos::experiment::cmd_table(config);
        }
    } catch (const mos::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return mos::experiment::exit_code_for(e.code());
    }
    return mos::experiment::kExitOk;
}
