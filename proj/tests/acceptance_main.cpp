// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Needs the CLI binary path for the byte-determinism check:
//   acceptance --cli <path-to-dfrc> [--santa-fe <laser-series-file>]
// The laser-series prediction bar also honors the SANTA_FE_FILE environment
// variable and ./data/santa_fe_a.txt; without a file it is skipped with a
// notice.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dfrc/cost_model.hpp"
#include "dfrc/errors.hpp"
#include "dfrc/experiment.hpp"
#include "dfrc/masking.hpp"
#include "dfrc/metrics.hpp"
#include "dfrc/node_models.hpp"
#include "dfrc/readout.hpp"
#include "dfrc/reservoir.hpp"
#include "dfrc/tasks.hpp"

using namespace dfrc;

namespace {

int g_failures = 0;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << name;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << '\n';
    if (!pass) ++g_failures;
}

void report_skip(int id, const std::string& name, const std::string& why) {
    std::cout << "[SKIP] criterion " << id << ": " << name << " — " << why << '\n';
}

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool condition, const std::string& what) {
        if (!condition) {
            ok = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
};

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------- criterion 1

void criterion_1_engine_oracle() {
    Timer timer;
    Check check;
    std::mt19937_64 rng(20240915);

    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        const std::size_t periods = 1 + rng() % (100 / n);
        std::vector<double> u(n * periods);
        for (double& v : u) v = uniform01(rng);

        NodeParams node;
        switch (trial % 5) {
            case 0:
                node = SiliconMRParams{50e-12, 50e-12, uniform01(rng), MrVariant::Verbatim};
                break;
            case 1:
                node = SiliconMRParams{50e-12, 50e-12, uniform01(rng),
                                       MrVariant::SymmetricDecay};
                break;
            case 2:
                node = SiliconMRParams{50e-12, 50e-12, uniform01(rng),
                                       MrVariant::SlotRelaxation};
                break;
            case 3: {
                MackeyGlassParams p;
                p.eta = 0.2 + 0.8 * uniform01(rng);
                node = p;
                break;
            }
            default: {
                MZIParams p;
                p.gamma = uniform01(rng);
                node = p;
                break;
            }
        }

        ReservoirConfig config;
        config.n_virtual = n;
        config.theta_s = 50e-12;
        config.node = node;
        MaskedStream stream;
        stream.values = u;
        stream.n_virtual = n;
        const StateMatrix engine = run_reservoir(stream, config);

        std::vector<double> flat(u.size(), 0.0);
        for (std::size_t j = 0; j < u.size(); ++j) {
            const double sf = j >= n ? flat[j - n] : 0.0;
            const double sp = j >= 1 ? flat[j - 1] : 0.0;
            flat[j] = node_step(u[j], sf, sp, node);
        }
        for (std::size_t i = 0; i < flat.size(); ++i) {
            if (engine.data[i] != flat[i]) {
                check.require(false, "mismatch in trial " + std::to_string(trial));
                break;
            }
        }
    }

    const double elapsed = timer.seconds();
    check.require(elapsed < 1.0, "runtime " + std::to_string(elapsed) + " s >= 1 s");
    std::ostringstream detail;
    detail << "50 random configs bit-exact vs flat recursion, " << elapsed << " s";
    report(1, "engine oracle equivalence", check.ok,
           check.ok ? detail.str() : check.detail.str());
}

// ---------------------------------------------------------------- criterion 2

void criterion_2_node_limits() {
    Check check;
    const double cases[][2] = {{0.8, 0.27}, {0.1, 0.9}, {1.5, 0.05}, {0.3, 0.6}};
    for (const auto& c : cases) {
        const double u = c[0], sf = c[1];
        for (double gamma : {0.0, 0.35, 0.9}) {
            SiliconMRParams fast{50e-12, 50.0 * 50e-12, gamma, MrVariant::Verbatim};
            const double charging = mr_step(u, sf, u - 1.0, fast);
            const double charging_limit = u + (1.0 + gamma) * sf;
            check.require(
                std::abs(charging - charging_limit) <= 1e-9 * std::abs(charging_limit),
                "charging limit off at ratio 50");
            const double discharging = mr_step(u, sf, u + 1.0, fast);
            const double discharging_limit = u + gamma * sf;
            check.require(
                std::abs(discharging - discharging_limit) <= 1e-9 * std::abs(discharging_limit),
                "discharging limit off at ratio 50");

            SiliconMRParams slow{50e-12, 1e-6 * 50e-12, gamma, MrVariant::Verbatim};
            check.require(std::abs(mr_step(u, sf, u - 1.0, slow) - sf) <= 1e-5,
                          "charging limit off at ratio 1e-6");
            check.require(std::abs(mr_step(u, sf, u + 1.0, slow) - sf) <= 1e-5,
                          "discharging limit off at ratio 1e-6");
        }
    }
    report(2, "microring closed-form limits", check.ok,
           check.ok ? "both branches at ratio 1e-6 (1e-5 abs) and 50 (1e-9 rel)"
                    : check.detail.str());
}

// ------------------------------------------------------- linear baselines

// Two-parameter least squares y ~ a*x + b fitted on the training slice.
struct LinearFit {
    double a = 0.0, b = 0.0;

    static LinearFit fit(std::span<const double> x, std::span<const double> y) {
        double sx = 0, sxx = 0, sy = 0, sxy = 0;
        const double n = static_cast<double>(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            sx += x[i];
            sxx += x[i] * x[i];
            sy += y[i];
            sxy += x[i] * y[i];
        }
        const double det = n * sxx - sx * sx;
        LinearFit f;
        f.a = (n * sxy - sx * sy) / det;
        f.b = (sxx * sy - sx * sxy) / det;
        return f;
    }

    std::vector<double> apply(std::span<const double> x) const {
        std::vector<double> out(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b;
        return out;
    }
};

// --------------------------------------------------------------- criterion 3

std::optional<PointArtifacts> g_narma_artifacts;

void criterion_3_narma10() {
    Timer timer;
    Check check;

    ExperimentConfig config;  // shipped defaults: gamma 0.9, gain 1
    config.task.name = "narma10";
    config.n_grid = {900};
    config.tau_ph_ps_grid = {50.0};
    config.seeds = {1};

    const PointArtifacts art = run_point(config, {900, 50.0, std::nullopt, 1});
    const TaskDataset& ds = art.dataset;

    const std::span<const double> inputs(ds.inputs);
    const std::span<const double> targets(ds.targets);
    const LinearFit fit =
        LinearFit::fit(inputs.subspan(0, ds.train_len), targets.subspan(0, ds.train_len));
    const auto baseline_pred = fit.apply(inputs.subspan(ds.train_len, ds.test_len));
    const double baseline =
        nrmse(baseline_pred, targets.subspan(ds.train_len, ds.test_len)).value;

    const double reservoir = art.row.test_metric;
    check.require(reservoir < 1.0, "test NRMSE >= 1");
    check.require(reservoir <= 0.9 * baseline, "not 10% below the memoryless baseline");
    const double elapsed = timer.seconds();
    check.require(elapsed < 120.0, "runtime over 2 minutes");

    std::ostringstream detail;
    detail << "N=900 tau_ph=50ps: test NRMSE " << reservoir << " vs memoryless linear "
           << baseline << ", " << elapsed << " s";
    report(3, "ten-step autoregressive prediction bar", check.ok,
           check.ok ? detail.str() : check.detail.str() + " (" + detail.str() + ")");
    g_narma_artifacts = std::move(art);
}

// --------------------------------------------------------------- criterion 4

std::optional<std::string> find_santa_fe(const std::optional<std::string>& cli_arg) {
    if (cli_arg && std::filesystem::exists(*cli_arg)) return cli_arg;
    if (const char* env = std::getenv("SANTA_FE_FILE")) {
        if (std::filesystem::exists(env)) return std::string(env);
    }
    const char* fallback = "data/santa_fe_a.txt";
    if (std::filesystem::exists(fallback)) return std::string(fallback);
    return std::nullopt;
}

std::optional<PointArtifacts> g_santa_artifacts;
bool g_santa_is_surrogate = false;

void criterion_4_santa_fe(const std::optional<std::string>& file) {
    const std::string name = "chaotic laser one-step prediction bar";
    if (!file) {
        report_skip(4, name,
                    "no laser series supplied (use --santa-fe, SANTA_FE_FILE or "
                    "data/santa_fe_a.txt)");
        return;
    }
    Timer timer;
    Check check;

    ExperimentConfig config;
    config.task.name = "santa_fe";
    config.task.santa_fe_path = *file;
    config.n_grid = {40};
    config.tau_ph_ps_grid = {50.0};

    const PointArtifacts art = run_point(config, {40, 50.0, std::nullopt, 1});
    const TaskDataset& ds = art.dataset;

    // persistence: predict the previous value, i.e. the input itself
    const std::span<const double> inputs(ds.inputs);
    const std::span<const double> targets(ds.targets);
    const double persistence = nrmse(inputs.subspan(ds.train_len, ds.test_len),
                                     targets.subspan(ds.train_len, ds.test_len))
                                   .value;

    check.require(art.row.test_metric < persistence, "does not beat persistence");
    std::ostringstream detail;
    detail << "N=40 tau_ph=50ps 4000/2000: test NRMSE " << art.row.test_metric
           << " vs persistence " << persistence << ", " << timer.seconds() << " s";
    report(4, name, check.ok, check.ok ? detail.str() : check.detail.str());
    g_santa_artifacts = std::move(art);
}

// --------------------------------------------------------------- criterion 5

std::optional<PointArtifacts> g_channel_artifacts;

void criterion_5_channel_eq() {
    Timer timer;
    Check check;

    ExperimentConfig config;
    config.task.name = "channel_eq";
    config.n_grid = {30};
    config.tau_ph_ps_grid = {50.0};
    config.seeds = {1, 2, 3};

    const std::vector<double> snrs{12.0, 16.0, 20.0, 24.0, 28.0, 32.0};
    double worst_margin = 1.0;
    for (std::uint64_t seed : config.seeds) {
        double ser_low = 0.0, ser_high = 0.0;
        for (double snr : snrs) {
            const PointArtifacts art = run_point(config, {30, 50.0, snr, seed});
            const TaskDataset& ds = art.dataset;

            const std::span<const double> inputs(ds.inputs);
            const std::span<const double> targets(ds.targets);
            const LinearFit fit = LinearFit::fit(inputs.subspan(0, ds.train_len),
                                                 targets.subspan(0, ds.train_len));
            const auto linear_pred = fit.apply(inputs.subspan(ds.train_len, ds.test_len));
            const double linear_ser =
                ser(quantize_symbols(linear_pred),
                    quantize_symbols(targets.subspan(ds.train_len, ds.test_len)))
                    .value;

            check.require(art.row.test_metric <= linear_ser,
                          "reservoir above the linear classifier at snr " +
                              std::to_string(snr) + " seed " + std::to_string(seed));
            worst_margin = std::min(worst_margin, linear_ser - art.row.test_metric);
            if (snr == 12.0) ser_low = art.row.test_metric;
            if (snr == 32.0) ser_high = art.row.test_metric;
            if (snr == 20.0 && seed == 1) g_channel_artifacts = art;
        }
        check.require(ser_high < ser_low,
                      "SER at 32 dB not below 12 dB for seed " + std::to_string(seed));
    }

    const double elapsed = timer.seconds();
    check.require(elapsed < 120.0, "runtime over 2 minutes");
    std::ostringstream detail;
    detail << "N=30, 3 seeds x 6 SNRs: monotone trend and <= linear classifier everywhere "
              "(worst margin "
           << worst_margin << "), " << elapsed << " s";
    report(5, "channel equalization trend", check.ok,
           check.ok ? detail.str() : check.detail.str());
}

// --------------------------------------------------------------- criterion 6

void criterion_6_power() {
    Check check;
    const PowerParams preset = silicon_mr_power_preset();
    const double dbm = laser_power_dbm(preset);
    check.require(std::abs(dbm - 10.95) <= 1e-9, "laser budget is not 10.95 dBm");
    const PowerBreakdown breakdown = total_power_mw(preset);
    check.require(std::abs(breakdown.laser_electrical_mw - 124.45) <= 1e-2,
                  "laser electrical draw off 124.45 mW");
    check.require(std::abs(breakdown.total_mw - 126.48) <= 0.01,
                  "preset total off 126.48 mW");

    std::ostringstream detail;
    detail << "laser " << dbm << " dBm, electrical " << breakdown.laser_electrical_mw
           << " mW, total " << breakdown.total_mw << " mW";
    report(6, "power budget arithmetic", check.ok,
           check.ok ? detail.str() : check.detail.str());
}

// --------------------------------------------------------------- criterion 7

void criterion_7_timing() {
    Check check;
    const TimingBreakdown mr = training_time({45e-9, 1000, 0.0});
    check.require(mr.state_collection_s == 1000.0 * 45e-9,
                  "state collection is not exactly n * tau");
    // one decimal-to-binary rounding separates 1000*45e-9 from the 45e-6
    // literal; the product itself is the derived value
    const double ulp = 45e-6 - std::nextafter(45e-6, 0.0);
    check.require(std::abs(mr.state_collection_s - 45e-6) <= ulp,
                  "state collection differs from 45 us by more than one ulp");

    const TimingBreakdown mzi = training_time({7.56e-6, 1000, 0.0});
    check.require(mzi.state_collection_s / mr.state_collection_s == 168.0,
                  "loop-delay ratio is not 168.0");

    const TimingBreakdown mg = training_time({10e-3, 1000, 0.0});
    std::ostringstream detail;
    detail << "1000 samples: mr 45 us, mzi/mr ratio 168; reported (not asserted) "
              "collection-time ratios: mg/mr "
           << mg.state_collection_s / mr.state_collection_s << "x, mzi/mr 168x";
    report(7, "training-time model", check.ok, check.ok ? detail.str() : check.detail.str());
}

// --------------------------------------------------------------- criterion 8

void criterion_8_metric_identities() {
    Check check;

    std::mt19937_64 rng(88);
    std::vector<double> target(400);
    for (double& v : target) v = uniform01(rng) * 3.0 - 1.0;
    double mean = 0.0;
    for (double v : target) mean += v;
    mean /= static_cast<double>(target.size());
    const std::vector<double> mean_pred(target.size(), mean);
    check.require(std::abs(nrmse(mean_pred, target).value - 1.0) <= 1e-12,
                  "mean predictor is not exactly 1");

    const std::vector<double> raw{0.4, -2.5, 2.0, -2.0, 0.0};
    const auto q = quantize_symbols(raw);
    check.require(q == std::vector<int>{1, -3, 3, -3, 1}, "quantizer tie rules broken");

    const std::vector<int> s1{-3, 1};
    const std::vector<int> s2{-3, -1};
    check.require(ser(s1, s1).value == 0.0, "ser of identical sequences");
    check.require(ser(s1, s2).value == 0.5, "ser half-mismatch");
    std::vector<int> a(100), b(100);
    const int levels[4] = {-3, -1, 1, 3};
    for (int i = 0; i < 100; ++i) {
        a[i] = levels[rng() & 3];
        b[i] = levels[rng() & 3];
    }
    const double v = ser(a, b).value;
    check.require(v >= 0.0 && v <= 1.0, "ser out of [0,1]");

    for (int order : {3, 4, 5, 6, 7}) {
        const std::size_t period = (std::size_t{1} << order) - 1;
        const double amp = 1.0;
        const MaskPattern mask =
            generate_mls_mask(order, period, amp, 1, MaskAlphabet::Bipolar);
        for (std::size_t lag = 1; lag < period; ++lag) {
            double acc = 0.0;
            for (std::size_t i = 0; i < period; ++i) {
                acc += mask.values[i] * mask.values[(i + lag) % period];
            }
            if (std::abs(acc - (-amp * amp)) > 1e-9) {
                check.require(false, "autocorrelation sidelobe at order " +
                                         std::to_string(order));
                break;
            }
        }
    }

    report(8, "metric identities and mask autocorrelation", check.ok,
           check.ok ? "mean predictor = 1, ser bounds, tie rules, sidelobes -A^2 for "
                      "orders 3..7"
                    : check.detail.str());
}

// --------------------------------------------------------------- criterion 9

double training_mse(const PointArtifacts& art, const ReadoutWeights& w) {
    const std::size_t train_rows = art.dataset.train_len;  // washout is zero here
    StateMatrix train_states;
    train_states.rows = train_rows;
    train_states.cols = art.states.cols;
    train_states.data.assign(art.states.data.begin(),
                             art.states.data.begin() +
                                 static_cast<std::ptrdiff_t>(train_rows * art.states.cols));
    const auto pred = predict(train_states, w);
    double acc = 0.0;
    for (std::size_t i = 0; i < train_rows; ++i) {
        const double e = pred[i] - art.dataset.targets[i];
        acc += e * e;
    }
    return acc / static_cast<double>(train_rows);
}

bool perturbation_check(const PointArtifacts& art, std::mt19937_64& rng) {
    const double base = training_mse(art, art.weights);
    const std::size_t dims =
        art.weights.weights.size() + (art.weights.bias.has_value() ? 1 : 0);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> delta(dims);
        double norm = 0.0;
        for (double& d : delta) {
            d = uniform01(rng) - 0.5;
            norm += d * d;
        }
        norm = std::sqrt(norm);
        ReadoutWeights perturbed = art.weights;
        for (std::size_t i = 0; i < perturbed.weights.size(); ++i) {
            perturbed.weights[i] += delta[i] / norm * 1e-3;
        }
        if (perturbed.bias) *perturbed.bias += delta.back() / norm * 1e-3;
        if (training_mse(art, perturbed) < base - 1e-12) return false;
    }
    return true;
}

// A deterministic chaotic stand-in series, written through the same loader,
// for exercising the laser-task pipeline when no real file is supplied.
std::string write_surrogate_series(const std::filesystem::path& dir) {
    std::vector<double> x(6200);
    x[0] = 0.42;
    for (std::size_t i = 1; i < x.size(); ++i) {
        x[i] = 3.985 * x[i - 1] * (1.0 - x[i - 1]);  // chaotic logistic map
    }
    const auto path = dir / "surrogate_series.txt";
    std::ofstream out(path);
    for (std::size_t i = 100; i < x.size(); ++i) out << 250.0 * x[i] << '\n';
    return path.string();
}

void criterion_9_readout_optimality(const std::filesystem::path& workdir) {
    Check check;
    std::mt19937_64 rng(909);

    check.require(g_narma_artifacts.has_value(), "autoregressive run unavailable");
    if (g_narma_artifacts) {
        check.require(perturbation_check(*g_narma_artifacts, rng),
                      "perturbation beat the trained weights (narma10)");
    }
    check.require(g_channel_artifacts.has_value(), "channel run unavailable");
    if (g_channel_artifacts) {
        check.require(perturbation_check(*g_channel_artifacts, rng),
                      "perturbation beat the trained weights (channel_eq)");
    }

    std::string laser_note = "recorded laser series";
    if (!g_santa_artifacts) {
        // no user-supplied file: run the same pipeline on a surrogate
        laser_note = "surrogate laser-like series";
        ExperimentConfig config;
        config.task.name = "santa_fe";
        config.task.santa_fe_path = write_surrogate_series(workdir);
        config.n_grid = {40};
        g_santa_artifacts = run_point(config, {40, 50.0, std::nullopt, 1});
    }
    check.require(perturbation_check(*g_santa_artifacts, rng),
                  "perturbation beat the trained weights (laser series)");

    // known-weight recovery on a synthetic full-rank system
    StateMatrix s;
    s.rows = 60;
    s.cols = 8;
    s.data.resize(60 * 8);
    for (double& v : s.data) v = uniform01(rng) - 0.5;
    std::vector<double> w_true(8);
    for (std::size_t i = 0; i < 8; ++i) w_true[i] = 0.25 * static_cast<double>(i) - 1.0;
    std::vector<double> y(60, 0.0);
    for (std::size_t r = 0; r < 60; ++r) {
        for (std::size_t c = 0; c < 8; ++c) y[r] += s.at(r, c) * w_true[c];
    }
    const auto [w, reportv] = train(s, y, {0.0, false});
    for (std::size_t i = 0; i < 8; ++i) {
        check.require(std::abs(w.weights[i] - w_true[i]) < 1e-9, "weight recovery off");
    }

    report(9, "readout optimality", check.ok,
           check.ok ? "20-perturbation minimum on all three tasks (" + laser_note +
                          "), known weights recovered to 1e-9"
                    : check.detail.str());
}

// -------------------------------------------------------------- criterion 10

void criterion_10_determinism(const std::string& cli,
                              const std::filesystem::path& workdir) {
    const std::string name = "byte-identical sweep CSVs";
    Check check;
    if (cli.empty() || !std::filesystem::exists(cli)) {
        report(10, name, false, "CLI binary not found; pass --cli <path>");
        return;
    }

    const auto config_path = workdir / "determinism.json";
    {
        std::ofstream out(config_path);
        out << R"({
  "task": {"name": "narma10", "length": 400},
  "reservoir": {"n_virtual": [40, 80]},
  "node": {"kind": "silicon_mr", "tau_ph_ps": [25.0, 50.0]},
  "seeds": [1, 2],
  "jobs": 2
})";
    }

    auto run_once = [&](const std::string& tag) {
        const auto out_dir = workdir / tag;
        std::filesystem::remove_all(out_dir);
        const std::string cmd = "\"" + cli + "\" sweep \"" + config_path.string() +
                                "\" --out-dir \"" + out_dir.string() + "\" > /dev/null";
        return std::system(cmd.c_str()) == 0 ? out_dir / "results.csv"
                                             : std::filesystem::path{};
    };

    const auto first = run_once("pass1");
    const auto second = run_once("pass2");
    check.require(!first.empty() && !second.empty(), "CLI sweep exited nonzero");
    if (check.ok) {
        std::ifstream a(first, std::ios::binary), b(second, std::ios::binary);
        std::stringstream sa, sb;
        sa << a.rdbuf();
        sb << b.rdbuf();
        const std::string first_bytes = sa.str();
        const std::string second_bytes = sb.str();
        check.require(first_bytes == second_bytes && !first_bytes.empty(),
                      "results.csv bytes differ between runs");
        const auto lines = std::count(first_bytes.begin(), first_bytes.end(), '\n');
        check.require(lines == 9, "expected 8 rows + header");
    }
    report(10, name, check.ok,
           check.ok ? "two parallel sweeps of 8 grid points, identical bytes"
                    : check.detail.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli;
    std::optional<std::string> santa_fe;
    for (int i = 1; i + 1 < argc; i += 2) {
        const std::string flag = argv[i];
        if (flag == "--cli") cli = argv[i + 1];
        if (flag == "--santa-fe") santa_fe = argv[i + 1];
    }

    const auto workdir =
        std::filesystem::temp_directory_path() / "dfrc_acceptance";
    std::filesystem::create_directories(workdir);

    auto guarded = [](int id, const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            report(id, name, false, std::string("exception: ") + e.what());
        }
    };

    guarded(1, "engine oracle equivalence", [] { criterion_1_engine_oracle(); });
    guarded(2, "microring closed-form limits", [] { criterion_2_node_limits(); });
    guarded(3, "ten-step autoregressive prediction bar", [] { criterion_3_narma10(); });
    guarded(4, "chaotic laser one-step prediction bar",
            [&] { criterion_4_santa_fe(find_santa_fe(santa_fe)); });
    guarded(5, "channel equalization trend", [] { criterion_5_channel_eq(); });
    guarded(6, "power budget arithmetic", [] { criterion_6_power(); });
    guarded(7, "training-time model", [] { criterion_7_timing(); });
    guarded(8, "metric identities and mask autocorrelation",
            [] { criterion_8_metric_identities(); });
    guarded(9, "readout optimality", [&] { criterion_9_readout_optimality(workdir); });
    guarded(10, "byte-identical sweep CSVs", [&] { criterion_10_determinism(cli, workdir); });

    std::cout << (g_failures == 0 ? "all criteria passed"
                                  : std::to_string(g_failures) + " criteria failed")
              << '\n';
    return g_failures == 0 ? 0 : 1;
}
