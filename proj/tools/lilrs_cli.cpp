#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lilrs/simulate.hpp"

namespace {

lilrs::ExperimentConfig load_or_die(const std::string& path) { return lilrs::load_config(path); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lifted interleaved linearized Reed-Solomon codes: encoding, multishot operator-channel "
                 "simulation and interpolation-based decoding"};
    app.require_subcommand(1);

    std::string config_path;
    app.add_option("--config", config_path, "experiment configuration file")->required();

    auto* info = app.add_subcommand("info", "print code parameters, rate, distance and decoding regions");

    auto* roundtrip = app.add_subcommand("roundtrip", "run and trace a single encode/transmit/decode trial");
    uint64_t rt_seed = 1;
    uint32_t rt_gamma = 0, rt_delta = 0;
    std::string rt_mode;
    roundtrip->add_option("--seed", rt_seed, "trial seed");
    roundtrip->add_option("--gamma", rt_gamma, "total insertions")->required();
    roundtrip->add_option("--delta", rt_delta, "total deletions")->required();
    roundtrip->add_option("--mode", rt_mode, "list|unique (default from config)");

    auto* simulate = app.add_subcommand("simulate", "run the seeded Monte Carlo sweep and write CSV");
    uint64_t sim_seed = 0, sim_trials = 0, sim_stop = 0;
    uint32_t sim_workers = 0;
    std::string sim_mode, sim_out;
    simulate->add_option("--seed", sim_seed, "master seed (overrides config)");
    simulate->add_option("--trials", sim_trials, "trials per sweep point (overrides config)");
    simulate->add_option("--workers", sim_workers, "worker threads (overrides config)");
    simulate->add_option("--mode", sim_mode, "list|unique (overrides config)");
    simulate->add_option("--out", sim_out, "output CSV path (overrides config)");
    simulate->add_option("--stop-after-failures", sim_stop,
                         "stop a sweep point after this many observed failures");

    CLI11_PARSE(app, argc, argv);

    try {
        lilrs::ExperimentConfig cfg = load_or_die(config_path);

        if (info->parsed()) {
            std::cout << lilrs::info_report(cfg.params);
            return 0;
        }

        if (roundtrip->parsed()) {
            lilrs::DecodeMode mode = cfg.mode;
            if (rt_mode == "list") mode = lilrs::DecodeMode::kList;
            else if (rt_mode == "unique") mode = lilrs::DecodeMode::kUnique;
            else if (!rt_mode.empty()) throw lilrs::ConfigError("--mode must be 'list' or 'unique'");
            lilrs::DecodeOptions opts;
            opts.list_cap = cfg.list_cap;
            std::cout << lilrs::roundtrip_report(cfg.params, rt_gamma, rt_delta, rt_seed, mode, opts);
            return 0;
        }

        // simulate
        if (simulate->count("--seed")) cfg.seed = sim_seed;
        if (simulate->count("--trials")) cfg.trials = sim_trials;
        if (simulate->count("--workers")) cfg.workers = sim_workers;
        if (simulate->count("--stop-after-failures")) cfg.stop_after_failures = sim_stop;
        if (!sim_mode.empty()) {
            if (sim_mode == "list") cfg.mode = lilrs::DecodeMode::kList;
            else if (sim_mode == "unique") cfg.mode = lilrs::DecodeMode::kUnique;
            else throw lilrs::ConfigError("--mode must be 'list' or 'unique'");
        }
        if (!sim_out.empty()) cfg.out_path = sim_out;
        if (cfg.sweep.empty()) throw lilrs::ConfigError("no sweep points configured ([sweep] point = gamma delta)");

        const lilrs::ExperimentResult result = lilrs::run_experiment(cfg);
        if (cfg.out_path.empty()) {
            std::cout << result.csv;
        } else {
            std::ofstream out(cfg.out_path, std::ios::binary);
            if (!out) throw lilrs::ConfigError("cannot write to '" + cfg.out_path + "'");
            out << result.csv;
            std::cerr << "wrote " << result.points.size() << " sweep point(s) to " << cfg.out_path << "\n";
        }
        return 0;
    } catch (const lilrs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
