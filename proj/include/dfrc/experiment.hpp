#ifndef DFRC_EXPERIMENT_HPP
#define DFRC_EXPERIMENT_HPP

#include <cstdint>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dfrc/cost_model.hpp"
#include "dfrc/masking.hpp"
#include "dfrc/node_models.hpp"
#include "dfrc/readout.hpp"
#include "dfrc/reservoir.hpp"
#include "dfrc/tasks.hpp"

namespace dfrc {

struct TaskSpec {
    std::string name = "narma10";  // narma10 | santa_fe | channel_eq
    std::size_t length = 0;        // 0 = task default (2000 samples / 9000 symbols)
    std::size_t train_len = 0;     // 0 = task default split
    std::size_t test_len = 0;
    std::string santa_fe_path;
    std::vector<double> snr_grid_db;  // channel_eq only; empty = 12..32 dB step 4
};

enum class InputNormalize {
    None,
    MinMax01,  // rescale the input series to [0, 1] by its min/max
};

InputNormalize input_normalize_from_name(const std::string& name);
const char* input_normalize_name(InputNormalize mode);

struct InputSpec {
    double gain = 1.0;
    InputNormalize normalize = InputNormalize::MinMax01;
};

struct MaskSpec {
    int order = 0;  // 0 = smallest order covering n_virtual
    double amplitude = 1.0;
    std::uint32_t seed = 1;
    MaskAlphabet alphabet = MaskAlphabet::Binary;
};

struct NodeSpec {
    std::string kind = "silicon_mr";  // silicon_mr | mackey_glass | mzi
    double gamma = 0.9;               // loop attenuation for the microring node
    MrVariant mr_variant = MrVariant::SlotRelaxation;
    MackeyGlassParams mg;
    MZIParams mzi;
};

struct ExperimentConfig {
    TaskSpec task;
    std::vector<std::size_t> n_grid = {30};
    // Slot width default keeps theta / tau_ph = 0.2 at the 50 ps photon
    // lifetime; theta_ps = 50 reproduces the published 45 ns loop at N = 900.
    double theta_ps = 10.0;
    std::size_t washout = 0;
    NodeSpec node;
    std::vector<double> tau_ph_ps_grid = {50.0};
    MaskSpec mask;
    InputSpec input;
    TrainOptions readout;
    std::vector<std::uint64_t> seeds = {1};
    double regression_time_s = 0.0;
    std::optional<PowerParams> power;  // unset = preset chosen by node kind
    std::string out_dir = "results";
    std::string export_dir;  // when set, per-point dataset/mask/states/weights files
    int jobs = 1;
};

// Reads the JSON config file documented in the README.
ExperimentConfig load_experiment_config(const std::filesystem::path& path);
ExperimentConfig parse_experiment_config(const std::string& json_text);

struct ResultRow {
    std::string task;
    std::string node_kind;
    std::size_t n_virtual = 0;
    double tau_ph_ps = 0.0;
    double gamma = 0.0;
    std::optional<double> snr_db;
    std::uint64_t seed = 0;
    double train_metric = 0.0;
    double test_metric = 0.0;
    double train_time_s_model = 0.0;
    std::optional<double> power_mw;
};

// One point of the sweep grid.
struct PointSpec {
    std::size_t n_virtual = 0;
    double tau_ph_ps = 0.0;
    std::optional<double> snr_db;
    std::uint64_t seed = 0;
};

// Intermediate products of one pipeline run, exposed for inspection and for
// recomputing metrics from exported files.
struct PointArtifacts {
    TaskDataset dataset;
    MaskPattern mask;
    StateMatrix states;
    ReadoutWeights weights;
    TrainReport report;
    std::vector<double> predictions;  // one per post-washout sample
    ResultRow row;
};

PointArtifacts run_point(const ExperimentConfig& config, const PointSpec& point);

struct SweepFailure {
    std::string point;
    std::string message;
};

struct SweepOutcome {
    std::vector<ResultRow> rows;
    std::vector<SweepFailure> failures;
};

using RowSink = std::function<void(const ResultRow&)>;

// Runs every grid point (N x tau_ph x SNR x seed, in that nesting order).
// Points run concurrently when config.jobs > 1, but the sink is always
// invoked in grid order. A failing point is recorded and the sweep goes on.
SweepOutcome run_experiment(const ExperimentConfig& config, const RowSink& sink = nullptr);

// Row minimizing the named metric ("test_metric", "train_metric", or the
// task aliases "nrmse"/"ser" for the test metric). Ties prefer smaller N,
// then smaller tau_ph. Throws EmptyInputError on an empty span.
const ResultRow& best_of_sweep(std::span<const ResultRow> rows, const std::string& metric);

std::string result_csv_header();
std::string result_csv_line(const ResultRow& row);
void write_results_csv(std::span<const ResultRow> rows, const std::filesystem::path& path);
std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

}  // namespace dfrc

#endif  // DFRC_EXPERIMENT_HPP
