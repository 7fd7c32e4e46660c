#ifndef DFRC_NODE_MODELS_HPP
#define DFRC_NODE_MODELS_HPP

#include <string>
#include <variant>

namespace dfrc {

// Treatment of the state the microring retains across one theta slot.
//
//   Verbatim       — the retained term is the loop feedback s(t - tau),
//                    undamped in the charging branch. Faithful to the
//                    published transfer function, but the charging branch
//                    then has net gain above one, so any drive pattern that
//                    keeps a node charging makes its state grow without
//                    bound. Kept selectable for reference and for the
//                    closed-form limit checks.
//   SymmetricDecay — same as Verbatim except the charging branch also damps
//                    the retained term by exp(-theta/tau_ph). Both branches
//                    then coincide, which makes the node linear.
//   SlotRelaxation — the retained term is the previous slot state
//                    s(t - theta): the cavity relaxes from where the last
//                    slot left it. Charging self-terminates once the state
//                    passes the drive, so the map stays bounded for
//                    nonnegative drive while keeping the branch nonlinearity.
//                    This is the variant the shipped configurations use.
enum class MrVariant {
    Verbatim,
    SymmetricDecay,
    SlotRelaxation,
};

MrVariant mr_variant_from_name(const std::string& name);
const char* mr_variant_name(MrVariant variant);

struct SiliconMRParams {
    double tau_ph_s = 50e-12;  // cavity photon lifetime
    double theta_s = 10e-12;   // virtual-node slot width; slots couple when
                               // theta is a fraction of tau_ph
    double gamma = 0.9;        // loop power attenuation, [0, 1]
    MrVariant variant = MrVariant::Verbatim;
};

// Electronic baseline: one explicit-Euler step of length theta of the
// delay-differential nonlinearity
//     T dx/dt = -x + eta * a / (1 + |a|^p),  a = s_feedback + gamma_in * u,
// with theta_over_t = theta / T. Defaults are calibrated so the baseline
// solves the ten-step autoregressive benchmark at its published node count.
struct MackeyGlassParams {
    double eta = 0.4;
    double gamma_in = 0.05;
    double exponent_p = 1.0;
    double theta_over_t = 0.2;
};

// All-optical interferometer baseline: intensity response
// gain * sin^2(u + gamma * s_feedback + phase_bias). Defaults are calibrated
// like the electronic baseline's.
struct MZIParams {
    double phase_bias = 0.5;
    double gain = 1.0;
    double gamma = 0.3;
};

// One theta-slot update of the microring through-port state. The branch is
// selected by comparing the drive against the previous slot state: drive at
// or above it charges the cavity, below it the cavity discharges. Ties take
// the charging branch.
double mr_step(double u, double s_feedback, double s_prev, const SiliconMRParams& params);

double mg_step(double u, double s_feedback, double s_prev, const MackeyGlassParams& params);

double mzi_step(double u, double s_feedback, double s_prev, const MZIParams& params);

using NodeParams = std::variant<SiliconMRParams, MackeyGlassParams, MZIParams>;

double node_step(double u, double s_feedback, double s_prev, const NodeParams& node);

// Stable identifier: "silicon_mr", "mackey_glass" or "mzi".
const char* node_kind_name(const NodeParams& node);

}  // namespace dfrc

#endif  // DFRC_NODE_MODELS_HPP
