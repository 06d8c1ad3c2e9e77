#include "su11/gw_detector.hpp"

#include <cmath>
#include <sstream>

#include "su11/metrology.hpp"
#include "su11/pipeline.hpp"

namespace su11 {
namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::invalid_argument(std::string(name) + " must be positive and finite");
    }
}

ChannelKind kind_for(Resonance mode) {
    return mode == Resonance::sum ? ChannelKind::squeezing : ChannelKind::mode_mixing;
}

double resonant_frequency(const GwDetectorParams& p) {
    return p.resonance == Resonance::sum ? p.omega_n + p.omega_m : p.omega_n - p.omega_m;
}

}  // namespace

const char* to_string(Resonance mode) { return mode == Resonance::sum ? "sum" : "difference"; }

void GwDetectorParams::validate() const {
    if (mode_n <= 0 || mode_m <= 0) {
        throw std::invalid_argument("mode indices must be positive integers");
    }
    require_positive(omega_n, "omega_n");
    require_positive(omega_m, "omega_m");
    require_positive(sound_speed, "sound_speed");
    require_positive(atom_mass, "atom_mass");
    require_positive(hbar, "hbar");
    require_positive(interaction_time, "interaction_time");
    require_positive(gw_frequency, "gw_frequency");
    require_positive(detectors, "detectors");
    require_positive(integration_time, "integration_time");
    require_positive(resonance_tolerance, "resonance_tolerance");
    if (!std::isfinite(epsilon)) {
        throw std::invalid_argument("epsilon must be finite");
    }
    const double target = resonant_frequency(*this);
    const double mismatch = std::abs(gw_frequency - target) / gw_frequency;
    if (!(mismatch < resonance_tolerance)) {
        std::ostringstream msg;
        msg << "off resonance (" << to_string(resonance) << " mode): |Omega - " << target << "|/Omega = " << mismatch
            << " exceeds " << resonance_tolerance;
        throw std::invalid_argument(msg.str());
    }
}

PhononXi phonon_xi(double atom_mass, double sound_speed, double omega, double hbar) {
    require_positive(atom_mass, "atom_mass");
    require_positive(sound_speed, "sound_speed");
    require_positive(omega, "omega");
    require_positive(hbar, "hbar");
    PhononXi out;
    out.value = atom_mass * sound_speed * sound_speed / (hbar * omega);
    if (out.value <= kPhononXiThreshold) {
        std::ostringstream msg;
        msg << "xi = " << out.value << " <= " << kPhononXiThreshold
            << ": frequency is not well inside the phonon regime";
        out.warning = msg.str();
    }
    return out;
}

double coupling_constant(int n, int m, double xi_n, double xi_m, Resonance mode) {
    require_positive(xi_n, "xi_n");
    require_positive(xi_m, "xi_m");
    if (n <= 0 || m <= 0) {
        throw std::invalid_argument("mode indices must be positive integers");
    }
    const double denom = mode == Resonance::sum ? double(n - m) : double(n + m);
    if (denom == 0.0) {
        throw std::invalid_argument("coupling_constant: n = m has no sum-resonance coupling");
    }
    return xi_n * xi_m * double(n * n + m * m) / (denom * denom);
}

ChannelSpec channel_strength(double omega_n, double omega_m, double coupling, double interaction_time,
                             double epsilon, Resonance mode, double channel_phase) {
    require_positive(omega_n, "omega_n");
    require_positive(omega_m, "omega_m");
    require_positive(coupling, "coupling");
    require_positive(interaction_time, "interaction_time");
    ChannelSpec spec;
    spec.kind = kind_for(mode);
    spec.strength = std::sqrt(omega_m * omega_n) * coupling * interaction_time;
    spec.phase = channel_phase;
    spec.epsilon = epsilon;
    return spec;
}

ChannelSpec channel_strength(const GwDetectorParams& params) {
    params.validate();
    const double xi_n = phonon_xi(params.atom_mass, params.sound_speed, params.omega_n, params.hbar).value;
    const double xi_m = phonon_xi(params.atom_mass, params.sound_speed, params.omega_m, params.hbar).value;
    const double c = coupling_constant(params.mode_n, params.mode_m, xi_n, xi_m, params.resonance);
    return channel_strength(params.omega_n, params.omega_m, c, params.interaction_time, params.epsilon,
                            params.resonance, params.channel_phase);
}

double original_scheme_qfi(double r, double squeezing_phase, double channel_phase, double strength) {
    const double s = std::sin(squeezing_phase - channel_phase);
    const double sh = std::sinh(2.0 * r);
    return 0.25 * strength * strength * (1.0 + s * s * sh * sh);
}

double original_scheme_qfi_np(double r, double strength) {
    const double np = 2.0 * std::sinh(r) * std::sinh(r);
    return 0.25 * strength * strength * (1.0 + np * np);
}

double qcrb_sensitivity(double qfi, double detectors, double integration_time, double interaction_time) {
    require_positive(qfi, "QFI");
    require_positive(detectors, "detector count");
    require_positive(integration_time, "integration time");
    require_positive(interaction_time, "interaction time");
    const double repetitions = detectors * integration_time / interaction_time;
    return 1.0 / std::sqrt(repetitions * qfi);
}

SchemeComparison compare_schemes(const SchemeInputs& in) {
    if (in.kind == ChannelKind::phase) {
        throw std::invalid_argument("compare_schemes: squeezing or mode-mixing channel required");
    }
    require_positive(in.pump_particles, "pump particle number");
    if (!(in.pumped_squeezing >= 0.0) || !(in.original_squeezing >= 0.0)) {
        throw std::invalid_argument("compare_schemes: squeezing must be >= 0");
    }
    SchemeComparison out;
    const double np = 2.0 * std::sinh(in.original_squeezing) * std::sinh(in.original_squeezing);
    const double k2 = in.strength * in.strength;
    out.original_qfi = in.kind == ChannelKind::squeezing ? 0.25 * k2 * (1.0 + np * np) : 0.25 * k2 * np * np;
    out.side_particles = 2.0 * std::sinh(in.pumped_squeezing) * std::sinh(in.pumped_squeezing);
    out.max_tritter_angle = max_tritter_angle(out.side_particles / in.pump_particles, in.depletion_ratio);
    out.tritter_angle = in.tritter_angle.value_or(out.max_tritter_angle);
    if (!(out.tritter_angle >= 0.0) || out.tritter_angle > out.max_tritter_angle) {
        throw std::invalid_argument("compare_schemes: tritter angle " + std::to_string(out.tritter_angle) +
                                    " outside [0, theta_max = " + std::to_string(out.max_tritter_angle) + "]");
    }
    out.pumped_qfi =
        undepleted_qfi_formula(in.kind, in.strength, out.tritter_angle, in.pump_particles, in.pumped_squeezing);
    out.pumped_qfi_large_r =
        pumped_qfi_formula(in.strength, out.tritter_angle, in.pump_particles, out.side_particles);
    if (!(out.original_qfi > 0.0)) {
        throw NumericalError("compare_schemes: reference QFI vanishes");
    }
    out.ratio = out.pumped_qfi / out.original_qfi;
    out.ratio_large_r = out.pumped_qfi_large_r / out.original_qfi;
    return out;
}

SchemeComparison compare_schemes(const GwDetectorParams& params) {
    const ChannelSpec channel = channel_strength(params);
    const auto pops = pump_depletion(params.total_particles, params.squeezing);
    SchemeInputs in;
    in.kind = channel.kind;
    in.strength = channel.strength;
    in.pump_particles = pops.pump;
    in.pumped_squeezing = params.squeezing;
    in.original_squeezing = params.original_squeezing.value_or(params.squeezing);
    in.tritter_angle = params.tritter_angle;
    in.depletion_ratio = params.depletion_ratio;
    return compare_schemes(in);
}

}  // namespace su11
