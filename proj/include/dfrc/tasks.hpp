#ifndef DFRC_TASKS_HPP
#define DFRC_TASKS_HPP

#include <cstdint>
#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace dfrc {

// Paired input/target series with a positional train/test split: the first
// train_len samples train, the next test_len samples test.
struct TaskDataset {
    std::vector<double> inputs;
    std::vector<double> targets;
    std::size_t train_len = 0;
    std::size_t test_len = 0;
    std::string meta;

    std::size_t size() const { return inputs.size(); }
};

// Tenth-order nonlinear autoregressive moving-average targets for the given
// input sequence; targets[k] is the output one step ahead of sample k.
// Out-of-range history terms are zero. Throws TaskError when the recursion
// leaves |y| <= 10.
std::vector<double> narma10_targets(std::span<const double> inputs);

// Inputs drawn uniformly from [0, 0.5]; the default split is half/half.
// A diverging draw is retried with a derived sub-seed up to 8 times.
TaskDataset gen_narma10(std::size_t length, std::uint64_t seed);

// Reads one value per line (blank lines ignored), rescales the series to
// [0, 1] by its recorded min/max and pairs each sample with its successor
// as the one-step-ahead target.
TaskDataset load_santa_fe(const std::filesystem::path& path, std::size_t train_len,
                          std::size_t test_len);

// Noiseless channel response: the linear inter-symbol-interference filter
// followed by the cubic memoryless distortion. Out-of-range symbol indices
// contribute zero.
std::vector<double> channel_distort(std::span<const double> symbols);

// Four-level symbols {-3,-1,1,3} through the nonlinear channel plus white
// Gaussian noise sized against the noiseless distorted signal's variance.
// The default split is two thirds train, one third test. The same seed
// yields the same symbol sequence at every SNR.
TaskDataset gen_channel_eq(std::size_t n_symbols, double snr_db, std::uint64_t seed);

// Two-column CSV (input,target) preceded by a '#' comment line carrying meta.
void write_dataset_csv(const TaskDataset& dataset, const std::filesystem::path& path);

}  // namespace dfrc

#endif  // DFRC_TASKS_HPP
