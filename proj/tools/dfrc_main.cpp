#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "dfrc/errors.hpp"
#include "dfrc/experiment.hpp"

namespace {

using dfrc::ExperimentConfig;
using dfrc::ResultRow;

std::string timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", std::localtime(&t));
    return buf;
}

std::string describe_row(const ResultRow& row) {
    std::string out = row.task + " " + row.node_kind + " N=" + std::to_string(row.n_virtual) +
                      " tau_ph=" + std::to_string(row.tau_ph_ps) + "ps";
    if (row.snr_db) out += " snr=" + std::to_string(*row.snr_db) + "dB";
    out += " seed=" + std::to_string(row.seed);
    char buf[128];
    std::snprintf(buf, sizeof(buf), " train=%.6g test=%.6g t_train=%.6gs", row.train_metric,
                  row.test_metric, row.train_time_s_model);
    out += buf;
    if (row.power_mw) {
        std::snprintf(buf, sizeof(buf), " power=%.6gmW", *row.power_mw);
        out += buf;
    }
    return out;
}

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int jobs = 0;
};

ExperimentConfig load_with_overrides(const CommonArgs& args) {
    ExperimentConfig config = dfrc::load_experiment_config(args.config_path);
    if (args.seed_set) config.seeds = {args.seed};
    if (!args.out_dir.empty()) config.out_dir = args.out_dir;
    if (args.jobs > 0) config.jobs = args.jobs;
    return config;
}

int run_sweep(const CommonArgs& args, bool print_rows) {
    const ExperimentConfig config = load_with_overrides(args);
    const std::filesystem::path out_dir(config.out_dir);
    std::filesystem::create_directories(out_dir);

    const auto csv_path = out_dir / "results.csv";
    std::ofstream csv(csv_path);
    if (!csv) throw dfrc::IoError("cannot open " + csv_path.string() + " for writing");
    csv << dfrc::result_csv_header() << '\n';

    // Timestamps live only in the sidecar log; the CSV stays reproducible.
    std::ofstream log(out_dir / "run.log", std::ios::app);
    log << timestamp() << " start config=" << args.config_path << '\n';

    const auto outcome = dfrc::run_experiment(config, [&](const ResultRow& row) {
        csv << dfrc::result_csv_line(row) << '\n';
        csv.flush();
        if (print_rows) std::cout << describe_row(row) << '\n';
    });

    for (const auto& failure : outcome.failures) {
        log << timestamp() << " failed " << failure.point << ": " << failure.message << '\n';
        std::cerr << "point failed: " << failure.point << ": " << failure.message << '\n';
    }
    log << timestamp() << " done rows=" << outcome.rows.size()
        << " failures=" << outcome.failures.size() << '\n';

    std::cout << outcome.rows.size() << " rows, " << outcome.failures.size()
              << " failures -> " << csv_path.string() << '\n';
    if (!outcome.rows.empty()) {
        const auto& best = dfrc::best_of_sweep(outcome.rows, "test_metric");
        std::cout << "best by test_metric: " << describe_row(best) << '\n';
    }
    return outcome.rows.empty() ? 2 : 0;
}

int run_report(const std::string& csv_path, const std::string& metric) {
    const auto rows = dfrc::read_results_csv(csv_path);
    if (rows.empty()) {
        std::cout << "no rows in " << csv_path << '\n';
        return 2;
    }
    std::cout << rows.size() << " rows\n";
    std::cout << "best by " << metric << ": "
              << describe_row(dfrc::best_of_sweep(rows, metric)) << '\n';

    std::map<std::string, std::vector<ResultRow>> groups;
    for (const auto& row : rows) groups[row.task + "/" + row.node_kind].push_back(row);
    if (groups.size() > 1) {
        for (const auto& [key, group] : groups) {
            std::cout << "  " << key << ": "
                      << describe_row(dfrc::best_of_sweep(group, metric)) << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Delayed-feedback reservoir computing simulator and benchmark harness"};
    app.require_subcommand(1);

    CommonArgs args;
    std::string report_csv;
    std::string metric = "test_metric";

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("config", args.config_path, "JSON experiment config")
            ->required()
            ->check(CLI::ExistingFile);
        cmd->add_option("--seed", args.seed, "replace the configured seed list")
            ->each([&](const std::string&) { args.seed_set = true; });
        cmd->add_option("--out-dir", args.out_dir, "output directory (overrides output.dir)");
        cmd->add_option("--jobs", args.jobs, "parallel grid points (overrides jobs)");
    };

    auto* run_cmd =
        app.add_subcommand("run", "run the configured experiment and print every result row");
    add_common(run_cmd);
    auto* sweep_cmd =
        app.add_subcommand("sweep", "run the configured sweep and write results.csv");
    add_common(sweep_cmd);
    auto* report_cmd = app.add_subcommand("report", "summarize a results.csv");
    report_cmd->add_option("results", report_csv, "results CSV from a sweep")
        ->required()
        ->check(CLI::ExistingFile);
    report_cmd->add_option("--metric", metric, "test_metric (default) or train_metric");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return run_sweep(args, true);
        if (sweep_cmd->parsed()) return run_sweep(args, false);
        return run_report(report_csv, metric);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
