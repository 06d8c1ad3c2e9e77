#pragma once

#include "su11/channels.hpp"
#include "su11/gaussian.hpp"

namespace su11 {

/// One pumped-up SU(1,1) interferometer instance.
struct InterferometerConfig {
    double total_particles = 100.0;  ///< N̄ = |α|²
    double pump_phase = 0.0;         ///< ϑ₀
    double squeezing = 0.0;          ///< r
    double squeezing_phase = 0.0;    ///< ϑ_sq
    double tritter_angle = 0.0;      ///< θ ∈ [0, π/2]
    double tritter_phase = 0.0;      ///< ϑ
    ChannelSpec channel;

    /// Throws std::invalid_argument when the pump is depleted (N̄ ≤ 2 sinh² r),
    /// θ is outside [0, π/2], or any parameter is non-finite.
    void validate() const;
};

struct PumpPopulations {
    double pump = 0.0;  ///< N₀ = N̄ − 2 sinh² r
    double side = 0.0;  ///< N = 2 sinh² r
};

/// Undepleted-pump bookkeeping after the source squeezer.
PumpPopulations pump_depletion(double total_particles, double r);

struct HalfPipelines {
    SymplecticOp forward;  ///< S₊ = S_t(θ) S_s(r)
    SymplecticOp reverse;  ///< S₋ = S_s(−r) S_t(−θ)
};

HalfPipelines build_half_pipelines(const InterferometerConfig& config);

/// State just before the channel: S_s(r) on the input, pump amplitude
/// rescaled √N̄ → √N₀, then the tritter.
GaussianState probe_state(const InterferometerConfig& config);

/// S_ε applied to the probe state at the given ε (pre-measurement family).
GaussianState channel_output(const InterferometerConfig& config, double epsilon);

/// The state entering the reverse squeezer: S_t(−θ) S_ε applied to the probe.
GaussianState before_reverse_squeezer(const InterferometerConfig& config);

/// Full interferometer output (3 modes) at config.channel.epsilon.
GaussianState run_interferometer(const InterferometerConfig& config);

/// Side-mode marginal of run_interferometer evaluated at ε.
GaussianState side_modes_output(const InterferometerConfig& config, double epsilon);

/// Pump and side-mode populations after a tritter of angle θ.
PumpPopulations particle_numbers_after_tritter(double pump, double side, double theta);

/// Largest tritter angle keeping N(θ) ≤ δ·N₀(θ) given N = γ·N₀ (0 < γ ≤ δ < 1).
/// γ = 0 is accepted as the γ → 0 limit.
double max_tritter_angle(double gamma, double delta);

}  // namespace su11
