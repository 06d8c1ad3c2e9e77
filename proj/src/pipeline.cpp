#include "su11/pipeline.hpp"

#include <array>
#include <cmath>
#include <string>

namespace su11 {

void InterferometerConfig::validate() const {
    const std::array<double, 9> values{total_particles, pump_phase,       squeezing,
                                       squeezing_phase, tritter_angle,    tritter_phase,
                                       channel.strength, channel.phase,   channel.epsilon};
    for (double v : values) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("InterferometerConfig: non-finite parameter");
        }
    }
    if (!(tritter_angle >= 0.0 && tritter_angle <= 0.5 * kPi)) {
        throw std::invalid_argument("InterferometerConfig: tritter angle must lie in [0, pi/2]");
    }
    if (channel.strength < 0.0) {
        throw std::invalid_argument("InterferometerConfig: channel strength must be >= 0");
    }
    pump_depletion(total_particles, squeezing);
}

PumpPopulations pump_depletion(double total_particles, double r) {
    const double sh = std::sinh(r);
    const double side = 2.0 * sh * sh;
    const double pump = total_particles - side;
    if (!(pump > 0.0)) {
        throw std::invalid_argument("pump_depletion: pump is depleted (N = " + std::to_string(side) +
                                    " >= total " + std::to_string(total_particles) + ")");
    }
    return {pump, side};
}

HalfPipelines build_half_pipelines(const InterferometerConfig& config) {
    const double r = config.squeezing;
    const double th = config.tritter_angle;
    return {tritter(th, config.tritter_phase) * pumped_two_mode_squeezer(r, config.squeezing_phase),
            pumped_two_mode_squeezer(-r, config.squeezing_phase) * tritter(-th, config.tritter_phase)};
}

GaussianState probe_state(const InterferometerConfig& config) {
    config.validate();
    const auto populations = pump_depletion(config.total_particles, config.squeezing);
    GaussianState squeezed = apply_symplectic(pumped_input_state(config.total_particles, config.pump_phase),
                                              pumped_two_mode_squeezer(config.squeezing, config.squeezing_phase));
    // α → α₀: the pump keeps its phase but loses the 2 sinh² r particles
    // that populate the side modes. Not a symplectic map.
    Vector d = squeezed.displacement();
    d.head<2>() *= std::sqrt(populations.pump / config.total_particles);
    GaussianState rescaled(std::move(d), squeezed.covariance());
    return apply_symplectic(rescaled, tritter(config.tritter_angle, config.tritter_phase));
}

GaussianState channel_output(const InterferometerConfig& config, double epsilon) {
    return apply_symplectic(probe_state(config), channel_operator(config.channel.at_epsilon(epsilon)));
}

GaussianState before_reverse_squeezer(const InterferometerConfig& config) {
    return apply_symplectic(channel_output(config, config.channel.epsilon),
                            tritter(-config.tritter_angle, config.tritter_phase));
}

GaussianState run_interferometer(const InterferometerConfig& config) {
    return apply_symplectic(before_reverse_squeezer(config),
                            pumped_two_mode_squeezer(-config.squeezing, config.squeezing_phase));
}

GaussianState side_modes_output(const InterferometerConfig& config, double epsilon) {
    InterferometerConfig at = config;
    at.channel.epsilon = epsilon;
    static constexpr std::array<std::size_t, 2> kSideModes{1, 2};
    return reduce_to_modes(run_interferometer(at), kSideModes);
}

PumpPopulations particle_numbers_after_tritter(double pump, double side, double theta) {
    if (pump < 0.0 || side < 0.0) {
        throw std::invalid_argument("particle_numbers_after_tritter: populations must be >= 0");
    }
    const double c2 = std::cos(theta) * std::cos(theta);
    const double s2 = std::sin(theta) * std::sin(theta);
    return {pump * c2 + 0.5 * side * s2, pump * s2 + 0.5 * side * (1.0 + c2)};
}

double max_tritter_angle(double gamma, double delta) {
    if (!(gamma >= 0.0 && delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("max_tritter_angle: need gamma >= 0 and 0 < delta < 1");
    }
    if (gamma > delta) {
        throw std::invalid_argument("max_tritter_angle: need gamma <= delta (side modes already too populated)");
    }
    const double num = delta * gamma + 2.0 * delta - 3.0 * gamma - 2.0;
    const double den = delta * gamma - 2.0 * delta + gamma - 2.0;
    const double z = num / den;
    if (!(z >= -1.0 && z <= 1.0)) {
        throw NumericalError("max_tritter_angle: arccos argument outside [-1, 1]");
    }
    return 0.5 * std::acos(z);
}

}  // namespace su11
