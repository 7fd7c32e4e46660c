#include "dfrc/tasks.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>

#include "dfrc/errors.hpp"

namespace dfrc {

namespace {

constexpr double kNarmaDivergenceBound = 10.0;
constexpr int kNarmaRetryLimit = 8;

// Uniform [0,1) from the top 53 bits; keeps datasets bit-identical across
// standard libraries.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller pair; the consumer takes values two at a time.
void fill_gaussian(std::mt19937_64& rng, std::vector<double>& out) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    for (std::size_t i = 0; i < out.size(); i += 2) {
        double u1 = uniform01(rng);
        while (u1 == 0.0) u1 = uniform01(rng);
        const double u2 = uniform01(rng);
        const double r = std::sqrt(-2.0 * std::log(u1));
        out[i] = r * std::cos(two_pi * u2);
        if (i + 1 < out.size()) out[i + 1] = r * std::sin(two_pi * u2);
    }
}

double population_variance(std::span<const double> values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(values.size());
}

// Sub-seed derivation for divergence retries (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (salt + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<double> narma10_targets(std::span<const double> inputs) {
    const std::size_t len = inputs.size();
    // y[k] holds the output at time k; index 0 is the zero initial state.
    std::vector<double> y(len + 2, 0.0);
    for (std::size_t k = 0; k < len + 1; ++k) {
        double window = 0.0;
        for (std::size_t i = 0; i <= 9 && i <= k; ++i) window += y[k - i];
        const double ik = k < len ? inputs[k] : 0.0;
        const double ik9 = k >= 9 && k - 9 < len ? inputs[k - 9] : 0.0;
        y[k + 1] = 0.3 * y[k] + 0.05 * y[k] * window + 1.5 * ik * ik9 + 0.1;
        if (!std::isfinite(y[k + 1]) || std::abs(y[k + 1]) > kNarmaDivergenceBound) {
            throw TaskError("autoregressive recursion diverged at step " + std::to_string(k));
        }
    }
    std::vector<double> targets(len);
    for (std::size_t k = 0; k < len; ++k) targets[k] = y[k + 1];
    return targets;
}

TaskDataset gen_narma10(std::size_t length, std::uint64_t seed) {
    if (length < 10) throw ConfigError("narma10 length must be at least 10");

    for (int attempt = 0; attempt <= kNarmaRetryLimit; ++attempt) {
        const std::uint64_t used =
            attempt == 0 ? seed : derive_seed(seed, static_cast<std::uint64_t>(attempt));
        std::mt19937_64 rng(used);
        std::vector<double> inputs(length);
        for (double& v : inputs) v = 0.5 * uniform01(rng);
        try {
            TaskDataset ds;
            ds.targets = narma10_targets(inputs);
            ds.inputs = std::move(inputs);
            ds.train_len = length / 2;
            ds.test_len = length - ds.train_len;
            std::ostringstream meta;
            meta << "task=narma10 length=" << length << " seed=" << seed;
            if (attempt > 0) meta << " retries=" << attempt;
            ds.meta = meta.str();
            return ds;
        } catch (const TaskError&) {
            // diverged; retry with a derived sub-seed
        }
    }
    throw TaskError("narma10 generation diverged " + std::to_string(kNarmaRetryLimit + 1) +
                    " times for seed " + std::to_string(seed));
}

TaskDataset load_santa_fe(const std::filesystem::path& path, std::size_t train_len,
                          std::size_t test_len) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    std::vector<double> series;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;  // blank line
        const auto stop = line.find_last_not_of(" \t\r") + 1;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(line.data() + begin, line.data() + stop, v);
        if (ec != std::errc{} || ptr != line.data() + stop) {
            throw ParseError("non-numeric sample in " + path.string(), lineno);
        }
        series.push_back(v);
    }

    const std::size_t needed = train_len + test_len + 1;
    if (series.size() < needed) {
        throw ShapeError("need " + std::to_string(needed) + " samples, file has " +
                         std::to_string(series.size()));
    }

    const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
    const double lo = *lo_it, hi = *hi_it;
    if (!(hi > lo)) throw DegenerateTargetError("series is constant, cannot rescale");
    for (double& v : series) v = (v - lo) / (hi - lo);

    TaskDataset ds;
    const std::size_t n = train_len + test_len;
    ds.inputs.assign(series.begin(), series.begin() + n);
    ds.targets.assign(series.begin() + 1, series.begin() + n + 1);
    ds.train_len = train_len;
    ds.test_len = test_len;
    std::ostringstream meta;
    meta << "task=santa_fe file=" << path.string() << " min=" << lo << " max=" << hi;
    ds.meta = meta.str();
    return ds;
}

std::vector<double> channel_distort(std::span<const double> symbols) {
    const auto n = static_cast<std::ptrdiff_t>(symbols.size());
    auto d = [&](std::ptrdiff_t idx) -> double {
        return idx >= 0 && idx < n ? symbols[static_cast<std::size_t>(idx)] : 0.0;
    };
    std::vector<double> x(symbols.size());
    for (std::ptrdiff_t k = 0; k < n; ++k) {
        const double q = 0.08 * d(k + 2) - 0.12 * d(k + 1) + d(k) + 0.18 * d(k - 1) -
                         0.1 * d(k - 2) + 0.09 * d(k - 3) - 0.05 * d(k - 4) +
                         0.04 * d(k - 5) + 0.03 * d(k - 6) + 0.01 * d(k - 7);
        x[static_cast<std::size_t>(k)] = q + 0.036 * q * q - 0.011 * q * q * q;
    }
    return x;
}

TaskDataset gen_channel_eq(std::size_t n_symbols, double snr_db, std::uint64_t seed) {
    if (n_symbols < 10) throw ConfigError("channel_eq needs at least 10 symbols");
    if (!std::isfinite(snr_db)) throw ConfigError("snr_db must be finite");

    // Symbols first, then noise, from one engine: the symbol sequence is a
    // function of the seed alone and stays fixed across an SNR sweep.
    std::mt19937_64 rng(seed);
    static constexpr double kLevels[4] = {-3.0, -1.0, 1.0, 3.0};
    std::vector<double> symbols(n_symbols);
    for (double& s : symbols) s = kLevels[rng() & 3u];

    std::vector<double> clean = channel_distort(symbols);

    std::vector<double> noise(n_symbols);
    fill_gaussian(rng, noise);
    const double sigma =
        std::sqrt(population_variance(clean) / std::pow(10.0, snr_db / 10.0));

    TaskDataset ds;
    ds.inputs.resize(n_symbols);
    for (std::size_t i = 0; i < n_symbols; ++i) ds.inputs[i] = clean[i] + sigma * noise[i];
    ds.targets = std::move(symbols);
    ds.train_len = n_symbols * 2 / 3;
    ds.test_len = n_symbols - ds.train_len;
    std::ostringstream meta;
    meta << "task=channel_eq n_symbols=" << n_symbols << " snr_db=" << snr_db
         << " seed=" << seed;
    ds.meta = meta.str();
    return ds;
}

void write_dataset_csv(const TaskDataset& dataset, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << "# " << dataset.meta << " train_len=" << dataset.train_len
        << " test_len=" << dataset.test_len << '\n';
    out << "input,target\n";
    char buf[32];
    auto put = [&](double v, char sep) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        out.write(buf, end - buf);
        out.put(sep);
    };
    for (std::size_t i = 0; i < dataset.inputs.size(); ++i) {
        put(dataset.inputs[i], ',');
        put(dataset.targets[i], '\n');
    }
    if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace dfrc
