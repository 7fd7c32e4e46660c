#ifndef DFRC_COST_MODEL_HPP
#define DFRC_COST_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dfrc {

// Either a per-bit switching energy (converted to power at a signal rate)
// or a fixed power draw. rate_bits_per_s == 0 falls back to the global rate.
struct ComponentPower {
    std::string name;
    double energy_j_per_bit = 0.0;
    double fixed_power_w = 0.0;
    double rate_bits_per_s = 0.0;
};

struct PowerParams {
    double insertion_loss_db = 0.0;
    double coupling_loss_db = 0.0;
    double splitter_loss_db = 0.0;
    double dynamic_range_db = 0.0;
    double pd_sensitivity_dbm = 0.0;
    double laser_wallplug_efficiency = 1.0;  // fraction in (0, 1]
    std::vector<ComponentPower> components;
    double signal_rate_bits_per_s = 10e9;
    double fsr_nm = 0.0;  // recorded for reference, not used in the budget
    // Published total for this accelerator, when one exists. Reported next
    // to the computed total, never substituted for it.
    std::optional<double> reference_total_mw;
};

double db_to_linear(double db);
double linear_to_db(double linear);

// Required laser output: straight dB-domain budget
// IL + coupling + splitter + dynamic range + detector sensitivity.
double laser_power_dbm(const PowerParams& params);

struct PowerBreakdown {
    double laser_dbm = 0.0;
    double laser_electrical_mw = 0.0;  // optical output / wall-plug efficiency
    std::vector<std::pair<std::string, double>> per_component_mw;
    double total_mw = 0.0;
    std::optional<double> reference_total_mw;
};

PowerBreakdown total_power_mw(const PowerParams& params);

struct TimingParams {
    double tau_loop_s = 0.0;
    std::size_t n_train_samples = 0;
    double regression_time_s = 0.0;  // supplied (measured or assumed), never derived here
};

struct TimingBreakdown {
    double state_collection_s = 0.0;
    double regression_s = 0.0;
    double total_s = 0.0;
};

// State collection costs one loop delay per training sample.
TimingBreakdown training_time(const TimingParams& params);

// Shipped loss/power presets. The microring preset's component rate is
// chosen so the per-bit devices account for the 2.03 mW between the laser's
// electrical draw and the published 126.48 mW total; the published numbers
// leave that rate unstated.
PowerParams silicon_mr_power_preset();
PowerParams all_optical_mzi_power_preset();

}  // namespace dfrc

#endif  // DFRC_COST_MODEL_HPP
