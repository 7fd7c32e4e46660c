#ifndef DFRC_READOUT_HPP
#define DFRC_READOUT_HPP

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "dfrc/reservoir.hpp"

namespace dfrc {

struct ReadoutWeights {
    std::vector<double> weights;  // one per virtual node
    std::optional<double> bias;
};

struct TrainReport {
    double train_nrmse = 0.0;
    std::size_t rank = 0;          // effective rank of the solved design matrix
    double singular_value_cutoff = 0.0;
};

struct TrainOptions {
    double ridge = 0.0;
    bool with_bias = true;
};

// Least-squares readout training via singular value decomposition.
//
// ridge == 0 gives the minimum-norm solution with singular values below
// eps * max(rows, cols) * sigma_max treated as zero; ridge > 0 shrinks each
// singular direction by sigma / (sigma^2 + ridge). With the bias enabled a
// constant column is appended to the design matrix.
std::pair<ReadoutWeights, TrainReport> train(const StateMatrix& states,
                                             std::span<const double> targets,
                                             const TrainOptions& options = {});

// Row-wise weighted sum of the states plus the bias when present.
std::vector<double> predict(const StateMatrix& states, const ReadoutWeights& weights);

// One value per line, bias last when present.
void save_weights(const ReadoutWeights& weights, const std::filesystem::path& path);
ReadoutWeights load_weights(const std::filesystem::path& path, bool with_bias);

}  // namespace dfrc

#endif  // DFRC_READOUT_HPP
