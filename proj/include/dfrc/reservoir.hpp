#ifndef DFRC_RESERVOIR_HPP
#define DFRC_RESERVOIR_HPP

#include <cstddef>
#include <filesystem>
#include <vector>

#include "dfrc/masking.hpp"
#include "dfrc/node_models.hpp"

namespace dfrc {

struct ReservoirConfig {
    std::size_t n_virtual = 1;
    double theta_s = 10e-12;
    std::size_t washout = 0;  // leading input samples excluded from the state matrix
    NodeParams node = SiliconMRParams{};

    // Loop delay; exactly n_virtual slots per round trip.
    double tau_s() const { return static_cast<double>(n_virtual) * theta_s; }
};

// Fixed-lag ring buffer: read() returns the value pushed size() steps ago.
class DelayLine {
public:
    explicit DelayLine(std::size_t length);

    double read() const { return buffer_[cursor_]; }

    void push(double value) {
        buffer_[cursor_] = value;
        cursor_ = cursor_ + 1 == buffer_.size() ? 0 : cursor_ + 1;
    }

    std::size_t size() const { return buffer_.size(); }
    std::size_t cursor() const { return cursor_; }

private:
    std::vector<double> buffer_;
    std::size_t cursor_ = 0;
};

// Zero-filled delay line matching the config; the first loop period then
// sees zero feedback and a zero previous slot.
DelayLine reset(const ReservoirConfig& config);

// Row-major state matrix: one row per input sample (after washout), one
// column per virtual node.
struct StateMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

// Runs the delayed-feedback loop over the masked stream. For flat slot
// index j the state obeys s[j] = node_step(u[j], s[j-N], s[j-1]) with zero
// states before the start. Throws StateDivergenceError on the first
// non-finite state and ConfigError on shape or parameter mismatches.
StateMatrix run_reservoir(const MaskedStream& stream, const ReservoirConfig& config);

// CSV with header row "s0,s1,...".
void write_state_csv(const StateMatrix& states, const std::filesystem::path& path);
StateMatrix read_state_csv(const std::filesystem::path& path);

}  // namespace dfrc

#endif  // DFRC_RESERVOIR_HPP
