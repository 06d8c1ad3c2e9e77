#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su11/gaussian.hpp"
#include "su11/pipeline.hpp"

namespace su11 {

// ---------------------------------------------------------------------------
// Quantum Fisher information of Gaussian families
// ---------------------------------------------------------------------------

/// Inputs to the Gaussian QFI: the state at ε₀ and the ε-derivatives of its
/// moments and purity.
struct GaussianFamilyPoint {
    GaussianState state;
    Matrix covariance_derivative;
    Vector displacement_derivative;
    double purity_derivative = 0.0;
};

/// H = ½ Tr[(σ⁻¹σ̇)²]/(1 + μ²) + ḋᵀσ⁻¹ḋ + 2μ̇²/(1 − μ⁴).
/// The μ̇ term is dropped when |1 − μ| < 1e-9 (pure family). Throws
/// NumericalError if σ has condition number above 1e12.
double gaussian_qfi(const GaussianFamilyPoint& point);

/// Finite-difference settings shared by the numeric estimators.
struct FiniteDifference {
    double step = 1e-4;  ///< h; central differences at h and h/2, one Richardson level
};

/// QFI of the pre-measurement family d_ε = S_ε S₊ d₀, σ_ε = S_ε S₊ σ₀ (S_ε S₊)ᵀ.
double qfi_numeric(const InterferometerConfig& config, double eps0 = 0.0, FiniteDifference fd = {});

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

/// Which closed-form expression to evaluate. Labels are always explicit;
/// nothing is auto-detected from the parameters.
enum class QfiRegime {
    exact,                             ///< full expression, both channels
    theta_zero,                        ///< θ = 0 (conventional SU(1,1))
    theta_half_pi,                     ///< squeezing, θ = π/2
    theta_half_pi_phase_half_pi,       ///< mode mixing, θ = π/2, φ_A = π/2
    theta_half_pi_phase_zero,          ///< mode mixing, θ = π/2, φ_A = 0, optimal ϑ, N̄ ≫ 1
    theta_half_pi_phase_zero_large_r,  ///< same, r ≫ 1: ½A²N̄N
    turning_point,                     ///< squeezing at θ_t, optimal phases, N̄ ≫ 1
    turning_point_large_r,             ///< same, r ≫ 1: ⅛B²N̄N
    large_nbar,                        ///< leading order in N̄, any phases
    large_nbar_large_n,                ///< leading order in N̄ and N, optimal ϑ
    undepleted,                        ///< small θ ≤ θ_max, optimal ϑ
    undepleted_large_r,                ///< ½K²θ²N₀N
};

const char* to_string(QfiRegime regime);

/// Applicability thresholds checked by the regime preconditions.
struct RegimeOptions {
    double large_nbar_min = 1e4;   ///< large-N̄ regimes demand N̄ ≥ this
    double depletion_ratio = 0.1;  ///< δ for the undepleted-pump angle bound
    double angle_tolerance = 1e-9; ///< for θ and phase conditions
    double turning_point_tolerance = 1e-6;
};

/// Closed-form QFI of the configured channel in the given regime. Throws
/// std::invalid_argument if the regime does not apply to the channel kind or
/// its preconditions are violated.
double qfi_closed_form(const InterferometerConfig& config, QfiRegime regime, const RegimeOptions& options = {});

/// Undepleted-pump QFI without regime checks:
/// ¼K²(c + N² + θ²(N₀e^{2r} + N/2 − N²)), c = 1 for squeezing and 0 for mode mixing.
double undepleted_qfi_formula(ChannelKind kind, double strength, double theta, double pump_particles, double r);

/// Large-r undepleted-pump QFI without regime checks: ½K²θ²N₀N.
double pumped_qfi_formula(double strength, double theta, double pump_particles, double side_particles);

/// ∂H/∂θ of the exact closed form by Richardson central differences. The
/// expression is smooth in θ, so it is evaluated across the endpoints 0 and π/2.
double qfi_exact_theta_derivative(const InterferometerConfig& config, double step = 1e-4);

enum class F0Regime {
    small_signal,      ///< (∂⟨Ŝ⟩)²/Var from the O(s²) moment expressions
    printed_fraction,  ///< squeezing: the fraction exactly as printed in the source derivation
    large_nbar,        ///< leading order in N̄
    undepleted_large_r ///< ½K²θ²N₀N
};

const char* to_string(F0Regime regime);

double f0_closed_form(const InterferometerConfig& config, F0Regime regime, const RegimeOptions& options = {});

/// Leading ε² coefficients of the number-sum moments: ⟨Ŝ⟩ ≈ mean·x², Var ≈ var·x²
/// with x = s (squeezing) or m (mode mixing). The expressions assume the
/// optimal tritter phase of the channel.
struct SmallSignalMoments {
    double mean = 0.0;
    double var = 0.0;
};

SmallSignalMoments small_signal_moments(const InterferometerConfig& config);

enum class TurningPointMode { exact, approx };

/// Non-trivial turning point θ_t of the squeezing-channel QFI at optimal phases.
double optimal_tritter_angle(double total_particles, double side_particles, TurningPointMode mode);

// ---------------------------------------------------------------------------
// Measurement statistics
// ---------------------------------------------------------------------------

struct Moments {
    double mean = 0.0;
    double var = 0.0;
};

/// Number-sum Ŝ = Σ a†a over all modes of the given state.
Moments number_sum_moments(const GaussianState& side_state);

/// Number difference N̂₁ − N̂₂ of a two-mode state.
Moments heterodyne_moments(const GaussianState& state);

struct Sensitivity {
    double delta_sq = 0.0;  ///< Δ²ε = Var(Ŝ)/(∂_ε⟨Ŝ⟩)²
    double f0 = 0.0;        ///< 1/Δ²ε
};

/// Number-sum sensitivity of the full interferometer at ε₀ (default 1e-3:
/// ⟨Ŝ⟩ is quadratic in ε, so the slope vanishes at ε = 0). Throws
/// std::invalid_argument unless eps0 > 0.
Sensitivity sensitivity_number_sum(const InterferometerConfig& config, double eps0 = 1e-3, FiniteDifference fd = {});

/// F = F0 + 2(∂_ε√Var)²/Var.
double fisher_from_moments(const InterferometerConfig& config, double eps0 = 1e-3, FiniteDifference fd = {});

struct MetrologyReport {
    double h_numeric = 0.0;
    std::optional<double> h_closed_form;
    double f0 = 0.0;
    double mean_s = 0.0;
    double var_s = 0.0;
    std::optional<double> theta_t;
    std::vector<std::string> regime_labels;
};

struct ReportOptions {
    double qfi_eps0 = 0.0;
    double sensitivity_eps0 = 1e-3;
    FiniteDifference fd;
    bool with_turning_point = false;
};

MetrologyReport evaluate_metrology(const InterferometerConfig& config, const ReportOptions& options = {});

}  // namespace su11
