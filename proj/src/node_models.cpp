#include "dfrc/node_models.hpp"

#include <cmath>

#include "dfrc/errors.hpp"

namespace dfrc {

MrVariant mr_variant_from_name(const std::string& name) {
    if (name == "verbatim") return MrVariant::Verbatim;
    if (name == "symmetric_decay") return MrVariant::SymmetricDecay;
    if (name == "slot_relaxation") return MrVariant::SlotRelaxation;
    throw ConfigError("unknown microring variant '" + name +
                      "' (expected verbatim, symmetric_decay or slot_relaxation)");
}

const char* mr_variant_name(MrVariant variant) {
    switch (variant) {
        case MrVariant::Verbatim: return "verbatim";
        case MrVariant::SymmetricDecay: return "symmetric_decay";
        case MrVariant::SlotRelaxation: return "slot_relaxation";
    }
    return "?";
}

double mr_step(double u, double s_feedback, double s_prev, const SiliconMRParams& params) {
    const double decay = std::exp(-params.theta_s / params.tau_ph_s);
    const double charge = (u + params.gamma * s_feedback) * (1.0 - decay);

    const double retained =
        params.variant == MrVariant::SlotRelaxation ? s_prev : s_feedback;
    if (u >= s_prev) {
        // Charging: the retained energy survives the slot undamped (except
        // in the symmetric variant, where it decays like the discharge side).
        return params.variant == MrVariant::SymmetricDecay ? charge + retained * decay
                                                           : charge + retained;
    }
    // Discharging: retained energy decays over the slot.
    return charge + retained * decay;
}

double mg_step(double u, double s_feedback, double s_prev, const MackeyGlassParams& params) {
    const double a = s_feedback + params.gamma_in * u;
    const double saturated =
        params.eta * a / (1.0 + std::pow(std::abs(a), params.exponent_p));
    return s_prev + params.theta_over_t * (saturated - s_prev);
}

double mzi_step(double u, double s_feedback, double /*s_prev*/, const MZIParams& params) {
    const double sine = std::sin(u + params.gamma * s_feedback + params.phase_bias);
    return params.gain * sine * sine;
}

double node_step(double u, double s_feedback, double s_prev, const NodeParams& node) {
    struct Stepper {
        double u, sf, sp;
        double operator()(const SiliconMRParams& p) const { return mr_step(u, sf, sp, p); }
        double operator()(const MackeyGlassParams& p) const { return mg_step(u, sf, sp, p); }
        double operator()(const MZIParams& p) const { return mzi_step(u, sf, sp, p); }
    };
    return std::visit(Stepper{u, s_feedback, s_prev}, node);
}

const char* node_kind_name(const NodeParams& node) {
    struct Namer {
        const char* operator()(const SiliconMRParams&) const { return "silicon_mr"; }
        const char* operator()(const MackeyGlassParams&) const { return "mackey_glass"; }
        const char* operator()(const MZIParams&) const { return "mzi"; }
    };
    return std::visit(Namer{}, node);
}

}  // namespace dfrc
