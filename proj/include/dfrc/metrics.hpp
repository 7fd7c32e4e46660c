#ifndef DFRC_METRICS_HPP
#define DFRC_METRICS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace dfrc {

struct MetricResult {
    double value = 0.0;
    std::size_t n = 0;
};

// Root mean square error normalized by the target's population standard
// deviation; a constant mean predictor scores exactly 1. Throws ShapeError
// on length mismatch or empty input and DegenerateTargetError when the
// target has zero variance.
MetricResult nrmse(std::span<const double> predicted, std::span<const double> target);

// Nearest of {-3,-1,1,3}; the midpoints 0 and +/-2 round away from zero
// (and 0, lying between -1 and 1, rounds up).
std::vector<int> quantize_symbols(std::span<const double> values);

// Fraction of mismatched symbols.
MetricResult ser(std::span<const int> predicted, std::span<const int> target);

}  // namespace dfrc

#endif  // DFRC_METRICS_HPP
