#include "dfrc/readout.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "dfrc/errors.hpp"

namespace dfrc {

namespace {

Eigen::MatrixXd design_matrix(const StateMatrix& states, bool with_bias) {
    const auto rows = static_cast<Eigen::Index>(states.rows);
    const auto cols = static_cast<Eigen::Index>(states.cols);
    Eigen::MatrixXd a(rows, cols + (with_bias ? 1 : 0));
    a.leftCols(cols) = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic,
                                                      Eigen::RowMajor>>(states.data.data(),
                                                                        rows, cols);
    if (with_bias) a.col(cols).setOnes();
    return a;
}

double population_variance(std::span<const double> values) {
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= static_cast<double>(values.size());
    double acc = 0.0;
    for (double v : values) acc += (v - mean) * (v - mean);
    return acc / static_cast<double>(values.size());
}

}  // namespace

std::pair<ReadoutWeights, TrainReport> train(const StateMatrix& states,
                                             std::span<const double> targets,
                                             const TrainOptions& options) {
    if (targets.size() != states.rows) {
        throw ShapeError("target length " + std::to_string(targets.size()) +
                         " does not match state rows " + std::to_string(states.rows));
    }
    if (states.rows == 0 || states.cols == 0) throw ShapeError("empty state matrix");
    if (options.ridge < 0.0) throw ConfigError("ridge must be nonnegative");

    const Eigen::MatrixXd a = design_matrix(states, options.with_bias);
    const Eigen::Map<const Eigen::VectorXd> y(targets.data(),
                                              static_cast<Eigen::Index>(targets.size()));

    Eigen::BDCSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double cutoff = std::numeric_limits<double>::epsilon() *
                          static_cast<double>(std::max(a.rows(), a.cols())) * sigma_max;

    Eigen::VectorXd factors(sigma.size());
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        const double s = sigma(i);
        if (s > cutoff) ++rank;
        if (options.ridge > 0.0) {
            factors(i) = s / (s * s + options.ridge);
        } else {
            factors(i) = s > cutoff ? 1.0 / s : 0.0;
        }
    }
    const Eigen::VectorXd solution =
        svd.matrixV() * (factors.asDiagonal() * (svd.matrixU().transpose() * y));

    ReadoutWeights weights;
    weights.weights.assign(solution.data(), solution.data() + states.cols);
    if (options.with_bias) weights.bias = solution(solution.size() - 1);

    TrainReport report;
    report.rank = rank;
    report.singular_value_cutoff = cutoff;

    const Eigen::VectorXd fitted = a * solution;
    const double var = population_variance(targets);
    if (var > 0.0) {
        report.train_nrmse =
            std::sqrt((fitted - y).squaredNorm() / (static_cast<double>(targets.size()) * var));
    } else {
        // Constant targets: zero for a perfect fit, +inf otherwise.
        const double mse = (fitted - y).squaredNorm();
        report.train_nrmse = mse == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    }
    return {std::move(weights), report};
}

std::vector<double> predict(const StateMatrix& states, const ReadoutWeights& weights) {
    if (weights.weights.size() != states.cols) {
        throw ShapeError("weight length " + std::to_string(weights.weights.size()) +
                         " does not match state columns " + std::to_string(states.cols));
    }
    std::vector<double> out(states.rows);
    const double bias = weights.bias.value_or(0.0);
    for (std::size_t r = 0; r < states.rows; ++r) {
        double acc = bias;
        const double* row = states.data.data() + r * states.cols;
        for (std::size_t c = 0; c < states.cols; ++c) acc += row[c] * weights.weights[c];
        out[r] = acc;
    }
    return out;
}

void save_weights(const ReadoutWeights& weights, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    char buf[32];
    auto put = [&](double v) {
        auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        out.write(buf, end - buf);
        out.put('\n');
    };
    for (double w : weights.weights) put(w);
    if (weights.bias) put(*weights.bias);
    if (!out) throw IoError("failed writing " + path.string());
}

ReadoutWeights load_weights(const std::filesystem::path& path, bool with_bias) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{}) throw ParseError("bad number in " + path.string(), lineno);
        values.push_back(v);
    }
    ReadoutWeights weights;
    if (with_bias) {
        if (values.empty()) throw ParseError("weights file is empty", lineno);
        weights.bias = values.back();
        values.pop_back();
    }
    weights.weights = std::move(values);
    return weights;
}

}  // namespace dfrc
