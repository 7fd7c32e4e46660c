#include "dfrc/metrics.hpp"

#include <cmath>
#include <string>

#include "dfrc/errors.hpp"

namespace dfrc {

MetricResult nrmse(std::span<const double> predicted, std::span<const double> target) {
    if (predicted.size() != target.size()) {
        throw ShapeError("predicted and target lengths differ (" +
                         std::to_string(predicted.size()) + " vs " +
                         std::to_string(target.size()) + ")");
    }
    if (target.empty()) throw ShapeError("nrmse of empty sequences");

    const auto n = static_cast<double>(target.size());
    double mean = 0.0;
    for (double t : target) mean += t;
    mean /= n;
    double variance = 0.0;
    for (double t : target) variance += (t - mean) * (t - mean);
    variance /= n;
    if (variance <= 0.0) {
        throw DegenerateTargetError("target sequence has zero variance");
    }

    double sq_err = 0.0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        const double e = target[i] - predicted[i];
        sq_err += e * e;
    }
    return {std::sqrt(sq_err / (n * variance)), target.size()};
}

std::vector<int> quantize_symbols(std::span<const double> values) {
    std::vector<int> symbols(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double v = values[i];
        // Decision thresholds at -2, 0, 2; midpoints round away from zero.
        if (v >= 2.0) symbols[i] = 3;
        else if (v >= 0.0) symbols[i] = 1;
        else if (v > -2.0) symbols[i] = -1;
        else symbols[i] = -3;
    }
    return symbols;
}

MetricResult ser(std::span<const int> predicted, std::span<const int> target) {
    if (predicted.size() != target.size()) {
        throw ShapeError("predicted and target symbol counts differ (" +
                         std::to_string(predicted.size()) + " vs " +
                         std::to_string(target.size()) + ")");
    }
    if (target.empty()) throw ShapeError("ser of empty sequences");

    std::size_t wrong = 0;
    for (std::size_t i = 0; i < target.size(); ++i) {
        if (predicted[i] != target[i]) ++wrong;
    }
    return {static_cast<double>(wrong) / static_cast<double>(target.size()), target.size()};
}

}  // namespace dfrc
