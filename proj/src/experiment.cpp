#include "dfrc/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "dfrc/errors.hpp"
#include "dfrc/metrics.hpp"

namespace dfrc {

InputNormalize input_normalize_from_name(const std::string& name) {
    if (name == "none") return InputNormalize::None;
    if (name == "minmax01") return InputNormalize::MinMax01;
    throw ConfigError("unknown input normalization '" + name + "' (expected none or minmax01)");
}

const char* input_normalize_name(InputNormalize mode) {
    return mode == InputNormalize::None ? "none" : "minmax01";
}

namespace {

constexpr std::size_t kNarmaDefaultLength = 2000;
constexpr std::size_t kChannelDefaultSymbols = 9000;
constexpr std::size_t kSantaFeDefaultTrain = 4000;
constexpr std::size_t kSantaFeDefaultTest = 2000;

std::vector<double> default_snr_grid() { return {12.0, 16.0, 20.0, 24.0, 28.0, 32.0}; }

TaskDataset build_dataset(const TaskSpec& task, std::optional<double> snr_db,
                          std::uint64_t seed) {
    TaskDataset ds;
    if (task.name == "narma10") {
        ds = gen_narma10(task.length ? task.length : kNarmaDefaultLength, seed);
    } else if (task.name == "santa_fe") {
        if (task.santa_fe_path.empty()) {
            throw ConfigError("santa_fe task needs task.santa_fe_path");
        }
        ds = load_santa_fe(task.santa_fe_path,
                           task.train_len ? task.train_len : kSantaFeDefaultTrain,
                           task.test_len ? task.test_len : kSantaFeDefaultTest);
        return ds;
    } else if (task.name == "channel_eq") {
        if (!snr_db) throw ConfigError("channel_eq point is missing its SNR");
        ds = gen_channel_eq(task.length ? task.length : kChannelDefaultSymbols, *snr_db, seed);
    } else {
        throw ConfigError("unknown task '" + task.name + "'");
    }

    if (task.train_len) {
        const std::size_t test =
            task.test_len ? task.test_len : ds.size() - std::min(task.train_len, ds.size());
        if (task.train_len + test > ds.size()) {
            throw ConfigError("train/test split exceeds dataset length");
        }
        ds.train_len = task.train_len;
        ds.test_len = test;
    }
    return ds;
}

std::vector<double> condition_inputs(const TaskDataset& ds, const InputSpec& input) {
    std::vector<double> out = ds.inputs;
    if (input.normalize == InputNormalize::MinMax01) {
        const auto [lo_it, hi_it] = std::minmax_element(out.begin(), out.end());
        const double lo = *lo_it, hi = *hi_it;
        if (!(hi > lo)) throw DegenerateTargetError("input series is constant");
        for (double& v : out) v = (v - lo) / (hi - lo);
    }
    if (input.gain != 1.0) {
        for (double& v : out) v *= input.gain;
    }
    return out;
}

NodeParams make_node(const NodeSpec& node, double tau_ph_s, double theta_s) {
    if (node.kind == "silicon_mr") {
        return SiliconMRParams{tau_ph_s, theta_s, node.gamma, node.mr_variant};
    }
    if (node.kind == "mackey_glass") return node.mg;
    if (node.kind == "mzi") return node.mzi;
    throw ConfigError("unknown node kind '" + node.kind + "'");
}

double node_gamma(const NodeSpec& node) {
    if (node.kind == "silicon_mr") return node.gamma;
    if (node.kind == "mzi") return node.mzi.gamma;
    return node.mg.gamma_in;
}

StateMatrix take_rows(const StateMatrix& m, std::size_t first, std::size_t count) {
    StateMatrix out;
    out.rows = count;
    out.cols = m.cols;
    out.data.assign(m.data.begin() + static_cast<std::ptrdiff_t>(first * m.cols),
                    m.data.begin() + static_cast<std::ptrdiff_t>((first + count) * m.cols));
    return out;
}

std::string point_tag(const ExperimentConfig& config, const PointSpec& point) {
    std::ostringstream tag;
    tag << config.task.name << '_' << config.node.kind << "_n" << point.n_virtual << "_tau"
        << point.tau_ph_ps;
    if (point.snr_db) tag << "_snr" << *point.snr_db;
    tag << "_seed" << point.seed;
    return tag.str();
}

void export_point(const ExperimentConfig& config, const PointSpec& point,
                  const PointArtifacts& artifacts) {
    const std::filesystem::path dir(config.export_dir);
    std::filesystem::create_directories(dir);
    const std::string tag = point_tag(config, point);
    write_dataset_csv(artifacts.dataset, dir / ("dataset_" + tag + ".csv"));
    write_mask(artifacts.mask, dir / ("mask_" + tag + ".txt"));
    write_state_csv(artifacts.states, dir / ("states_" + tag + ".csv"));
    save_weights(artifacts.weights, dir / ("weights_" + tag + ".txt"));
}

}  // namespace

PointArtifacts run_point(const ExperimentConfig& config, const PointSpec& point) {
    PointArtifacts artifacts;
    artifacts.dataset = build_dataset(config.task, point.snr_db, point.seed);
    const TaskDataset& ds = artifacts.dataset;
    if (config.washout >= ds.train_len) {
        throw ConfigError("washout must be smaller than the training length");
    }

    const double theta_s = config.theta_ps * 1e-12;
    const int order =
        config.mask.order > 0 ? config.mask.order : minimal_mask_order(point.n_virtual);
    artifacts.mask = generate_mls_mask(order, point.n_virtual, config.mask.amplitude,
                                       config.mask.seed, config.mask.alphabet);

    InputSeries series{condition_inputs(ds, config.input)};
    const MaskedStream stream = apply_mask(series, artifacts.mask);

    ReservoirConfig reservoir;
    reservoir.n_virtual = point.n_virtual;
    reservoir.theta_s = theta_s;
    reservoir.washout = config.washout;
    reservoir.node = make_node(config.node, point.tau_ph_ps * 1e-12, theta_s);
    artifacts.states = run_reservoir(stream, reservoir);

    const std::size_t train_rows = ds.train_len - config.washout;
    const std::size_t test_rows = std::min(ds.test_len, artifacts.states.rows - train_rows);
    if (test_rows == 0) throw ConfigError("no test rows after washout");

    const StateMatrix train_states = take_rows(artifacts.states, 0, train_rows);
    const std::span<const double> targets(ds.targets);
    const auto train_targets = targets.subspan(config.washout, train_rows);

    auto [weights, report] = train(train_states, train_targets, config.readout);
    artifacts.weights = std::move(weights);
    artifacts.report = report;
    artifacts.predictions = predict(artifacts.states, artifacts.weights);

    const std::span<const double> predictions(artifacts.predictions);
    const auto train_pred = predictions.subspan(0, train_rows);
    const auto test_pred = predictions.subspan(train_rows, test_rows);
    const auto test_targets = targets.subspan(ds.train_len, test_rows);

    ResultRow row;
    row.task = config.task.name;
    row.node_kind = config.node.kind;
    row.n_virtual = point.n_virtual;
    row.tau_ph_ps = point.tau_ph_ps;
    row.gamma = node_gamma(config.node);
    row.snr_db = point.snr_db;
    row.seed = point.seed;
    if (config.task.name == "channel_eq") {
        row.train_metric =
            ser(quantize_symbols(train_pred), quantize_symbols(train_targets)).value;
        row.test_metric =
            ser(quantize_symbols(test_pred), quantize_symbols(test_targets)).value;
    } else {
        row.train_metric = nrmse(train_pred, train_targets).value;
        row.test_metric = nrmse(test_pred, test_targets).value;
    }

    TimingParams timing;
    timing.tau_loop_s = reservoir.tau_s();
    timing.n_train_samples = ds.train_len;
    timing.regression_time_s = config.regression_time_s;
    row.train_time_s_model = training_time(timing).total_s;

    if (config.power) {
        row.power_mw = total_power_mw(*config.power).total_mw;
    } else if (config.node.kind == "silicon_mr") {
        row.power_mw = total_power_mw(silicon_mr_power_preset()).total_mw;
    } else if (config.node.kind == "mzi") {
        row.power_mw = total_power_mw(all_optical_mzi_power_preset()).total_mw;
    }
    // No published budget for the electronic baseline; its cell stays empty.

    artifacts.row = std::move(row);
    if (!config.export_dir.empty()) export_point(config, point, artifacts);
    return artifacts;
}

namespace {

std::vector<PointSpec> enumerate_points(const ExperimentConfig& config) {
    if (config.n_grid.empty() || config.tau_ph_ps_grid.empty() || config.seeds.empty()) {
        throw ConfigError("sweep grids must be nonempty");
    }
    std::vector<std::optional<double>> snrs;
    if (config.task.name == "channel_eq") {
        const auto grid =
            config.task.snr_grid_db.empty() ? default_snr_grid() : config.task.snr_grid_db;
        for (double s : grid) snrs.emplace_back(s);
    } else {
        snrs.emplace_back(std::nullopt);
    }

    std::vector<PointSpec> points;
    for (std::size_t n : config.n_grid) {
        for (double tau : config.tau_ph_ps_grid) {
            for (const auto& snr : snrs) {
                for (std::uint64_t seed : config.seeds) {
                    points.push_back(PointSpec{n, tau, snr, seed});
                }
            }
        }
    }
    return points;
}

std::string describe_point(const ExperimentConfig& config, const PointSpec& point) {
    std::ostringstream out;
    out << "task=" << config.task.name << " node=" << config.node.kind
        << " n_virtual=" << point.n_virtual << " tau_ph_ps=" << point.tau_ph_ps;
    if (point.snr_db) out << " snr_db=" << *point.snr_db;
    out << " seed=" << point.seed;
    return out.str();
}

struct PointOutcome {
    std::optional<ResultRow> row;
    std::string error;
};

PointOutcome execute_point(const ExperimentConfig& config, const PointSpec& point) {
    PointOutcome outcome;
    try {
        outcome.row = run_point(config, point).row;
    } catch (const std::exception& e) {
        outcome.error = e.what();
    }
    return outcome;
}

}  // namespace

SweepOutcome run_experiment(const ExperimentConfig& config, const RowSink& sink) {
    const std::vector<PointSpec> points = enumerate_points(config);
    std::vector<PointOutcome> outcomes(points.size());

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t jobs =
        std::min<std::size_t>(std::max(config.jobs, 1), std::min<std::size_t>(hw, points.size()));

    if (jobs <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i) {
            outcomes[i] = execute_point(config, points[i]);
            if (sink && outcomes[i].row) sink(*outcomes[i].row);
        }
    } else {
        std::mutex mu;
        std::condition_variable cv;
        std::vector<char> done(points.size(), 0);
        std::atomic<std::size_t> next{0};

        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= points.size()) return;
                PointOutcome outcome = execute_point(config, points[i]);
                {
                    std::lock_guard lock(mu);
                    outcomes[i] = std::move(outcome);
                    done[i] = 1;
                }
                cv.notify_one();
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);

        // Emit strictly in grid order as results become available.
        std::unique_lock lock(mu);
        for (std::size_t i = 0; i < points.size(); ++i) {
            cv.wait(lock, [&] { return done[i] != 0; });
            if (sink && outcomes[i].row) sink(*outcomes[i].row);
        }
        lock.unlock();
        for (auto& t : pool) t.join();
    }

    SweepOutcome result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (outcomes[i].row) {
            result.rows.push_back(std::move(*outcomes[i].row));
        } else {
            result.failures.push_back({describe_point(config, points[i]), outcomes[i].error});
        }
    }
    return result;
}

const ResultRow& best_of_sweep(std::span<const ResultRow> rows, const std::string& metric) {
    if (rows.empty()) throw EmptyInputError("best_of_sweep over no rows");

    const bool use_train = metric == "train_metric";
    if (!use_train && metric != "test_metric" && metric != "nrmse" && metric != "ser") {
        throw ConfigError("unknown metric '" + metric + "'");
    }
    auto value_of = [&](const ResultRow& r) {
        const double v = use_train ? r.train_metric : r.test_metric;
        return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
    };

    const ResultRow* best = &rows[0];
    for (const ResultRow& row : rows.subspan(1)) {
        const double v = value_of(row);
        const double b = value_of(*best);
        if (v < b ||
            (v == b && (row.n_virtual < best->n_virtual ||
                        (row.n_virtual == best->n_virtual && row.tau_ph_ps < best->tau_ph_ps)))) {
            best = &row;
        }
    }
    return *best;
}

namespace {

void append_double(std::string& out, double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    out.append(buf, end);
}

}  // namespace

std::string result_csv_header() {
    return "task,node_kind,n_virtual,tau_ph_ps,gamma,snr_db,seed,train_metric,test_metric,"
           "train_time_s_model,power_mw";
}

std::string result_csv_line(const ResultRow& row) {
    std::string line;
    line += row.task;
    line += ',';
    line += row.node_kind;
    line += ',';
    line += std::to_string(row.n_virtual);
    line += ',';
    append_double(line, row.tau_ph_ps);
    line += ',';
    append_double(line, row.gamma);
    line += ',';
    if (row.snr_db) append_double(line, *row.snr_db);
    line += ',';
    line += std::to_string(row.seed);
    line += ',';
    append_double(line, row.train_metric);
    line += ',';
    append_double(line, row.test_metric);
    line += ',';
    append_double(line, row.train_time_s_model);
    line += ',';
    if (row.power_mw) append_double(line, *row.power_mw);
    return line;
}

void write_results_csv(std::span<const ResultRow> rows, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << result_csv_header() << '\n';
    for (const ResultRow& row : rows) out << result_csv_line(row) << '\n';
    if (!out) throw IoError("failed writing " + path.string());
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line) || line != result_csv_header()) {
        throw ParseError("unexpected results header in " + path.string(), 1);
    }

    std::vector<ResultRow> rows;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            cells.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (cells.size() != 11) throw ParseError("wrong cell count in " + path.string(), lineno);

        auto to_double = [&](const std::string& cell) {
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{}) throw ParseError("bad number in " + path.string(), lineno);
            return v;
        };
        ResultRow row;
        row.task = cells[0];
        row.node_kind = cells[1];
        row.n_virtual = static_cast<std::size_t>(std::stoull(cells[2]));
        row.tau_ph_ps = to_double(cells[3]);
        row.gamma = to_double(cells[4]);
        if (!cells[5].empty()) row.snr_db = to_double(cells[5]);
        row.seed = std::stoull(cells[6]);
        row.train_metric = to_double(cells[7]);
        row.test_metric = to_double(cells[8]);
        row.train_time_s_model = to_double(cells[9]);
        if (!cells[10].empty()) row.power_mw = to_double(cells[10]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace dfrc
