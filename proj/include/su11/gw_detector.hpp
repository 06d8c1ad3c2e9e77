#pragma once

#include <optional>
#include <string>

#include "su11/channels.hpp"

namespace su11 {

/// Which resonance couples phonon modes n and m to the wave.
/// sum: Ω = ω_n + ω_m, two-mode squeezing. difference: Ω = ω_n − ω_m, mode mixing.
enum class Resonance { sum, difference };

const char* to_string(Resonance mode);

inline constexpr double kReducedPlanck = 1.054571817e-34;  // J·s

/// SI parameters of a BEC gravitational-wave detector.
struct GwDetectorParams {
    int mode_n = 2;
    int mode_m = 1;
    double omega_n = 0.0;          ///< rad/s
    double omega_m = 0.0;          ///< rad/s
    double sound_speed = 0.0;      ///< m/s
    double atom_mass = 0.0;        ///< kg
    double hbar = kReducedPlanck;  ///< J·s
    double interaction_time = 1.0; ///< s
    double epsilon = 0.0;          ///< strain amplitude
    double gw_frequency = 0.0;     ///< Ω, rad/s
    Resonance resonance = Resonance::sum;
    double resonance_tolerance = 1e-6;  ///< relative to Ω

    double total_particles = 1e6;
    double squeezing = 0.0;
    /// Squeezing of the unpumped reference interferometer; defaults to `squeezing`.
    std::optional<double> original_squeezing;
    /// Pumped tritter angle; defaults to the undepleted-pump maximum.
    std::optional<double> tritter_angle;
    double channel_phase = 0.0;
    double depletion_ratio = 0.1;

    double detectors = 1.0;         ///< N_d
    double integration_time = 1.0;  ///< τ, s

    /// Throws std::invalid_argument on non-positive physical inputs or an
    /// off-resonance Ω.
    void validate() const;
};

struct PhononXi {
    double value = 0.0;
    /// Set when ξ ≤ 10, i.e. the mode is not deep in the phonon regime.
    std::optional<std::string> warning;
};

inline constexpr double kPhononXiThreshold = 10.0;

/// ξ = m c_s² / (ħ ω).
PhononXi phonon_xi(double atom_mass, double sound_speed, double omega, double hbar = kReducedPlanck);

/// c = ξ_n ξ_m (n² + m²) / (n ∓ m)², minus for sum, plus for difference.
double coupling_constant(int n, int m, double xi_n, double xi_m, Resonance mode);

/// Channel with strength √(ω_m ω_n)·c·t; no resonance check.
ChannelSpec channel_strength(double omega_n, double omega_m, double coupling, double interaction_time,
                             double epsilon, Resonance mode, double channel_phase = 0.0);

/// Channel implied by the detector parameters; validates resonance first.
ChannelSpec channel_strength(const GwDetectorParams& params);

/// Reference interferometer without pump: ¼B²[1 + sin²(ϑ_sq − φ_B) sinh²2r].
double original_scheme_qfi(double r, double squeezing_phase, double channel_phase, double strength);

/// The same at optimal phase written through N_P = 2 sinh² r: ¼K²(1 + N_P²).
double original_scheme_qfi_np(double r, double strength);

/// Δε = 1/√(M H) with M = N_d τ / t repetitions.
double qcrb_sensitivity(double qfi, double detectors, double integration_time, double interaction_time);

struct SchemeInputs {
    ChannelKind kind = ChannelKind::squeezing;
    double strength = 1.0;
    double pump_particles = 1e6;  ///< N₀
    double pumped_squeezing = 0.0;
    double original_squeezing = 0.0;
    std::optional<double> tritter_angle;
    double depletion_ratio = 0.1;
};

struct SchemeComparison {
    double original_qfi = 0.0;        ///< ¼K²(1 + N_P²)
    double pumped_qfi = 0.0;          ///< undepleted-pump form including the θ = 0 part
    double pumped_qfi_large_r = 0.0;  ///< ½K²θ²N₀N
    double ratio = 0.0;               ///< pumped_qfi / original_qfi
    double ratio_large_r = 0.0;       ///< pumped_qfi_large_r / original_qfi
    double tritter_angle = 0.0;
    double max_tritter_angle = 0.0;
    double side_particles = 0.0;      ///< N of the pumped interferometer
};

/// Original vs pumped-up interferometer at equal pump population N₀.
/// Throws std::invalid_argument if the tritter angle exceeds the
/// undepleted-pump maximum.
SchemeComparison compare_schemes(const SchemeInputs& inputs);

/// Physical-parameter front end: strength from channel_strength, N₀ from
/// the total particle number and pumped squeezing.
SchemeComparison compare_schemes(const GwDetectorParams& params);

}  // namespace su11
