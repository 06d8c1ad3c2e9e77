#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Sparse>

#include "su11/channels.hpp"
#include "su11/pipeline.hpp"

namespace su11 {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using SparseOperator = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

/// Truncated Fock space of 2 or 3 modes, each with `cutoff` levels (0..cutoff-1).
/// Basis index = Σ n_k cutoff^k.
struct FockSpace {
    static constexpr std::size_t kMinCutoff = 10;
    static constexpr std::size_t kMaxDimension = 64000;

    std::size_t n_modes = 3;
    std::size_t cutoff = 25;

    /// Throws std::invalid_argument unless 2 ≤ n_modes ≤ 3, cutoff ≥ 10 and
    /// cutoff^n_modes ≤ 64000.
    void validate() const;
    std::size_t dimension() const;
    std::size_t occupation(std::size_t index, std::size_t mode) const;
};

/// One Gaussian unitary U = exp(K) of the preparation sequence.
struct FockOperatorSpec {
    enum class Kind {
        displacement,      ///< exp(α a† − α* a)
        two_mode_squeeze,  ///< exp(ξ a†b† − ξ* a b)
        mode_mix,          ///< exp(ζ a†b − ζ* a b†)
        tritter,           ///< exp(−iθ H), H = (1/√2)[e^{iϑ} a0†(a1 + a2) + h.c.]
        phase,             ///< exp(−iφ (n_a + n_b)/2)
    };

    Kind kind = Kind::displacement;
    std::array<std::size_t, 3> modes{0, 1, 2};
    Complex amplitude{0.0, 0.0};  ///< α, ξ or ζ
    double angle = 0.0;           ///< θ (tritter) or φ (phase)
    double angle_phase = 0.0;     ///< ϑ (tritter)

    static FockOperatorSpec displacement(std::size_t mode, Complex alpha);
    static FockOperatorSpec two_mode_squeeze(std::size_t a, std::size_t b, Complex xi);
    static FockOperatorSpec mode_mix(std::size_t a, std::size_t b, Complex zeta);
    static FockOperatorSpec tritter(std::size_t pump, std::size_t a, std::size_t b, double theta, double phase);
    static FockOperatorSpec phase_shift(std::size_t a, std::size_t b, double phi);
};

struct FockState {
    FockSpace space;
    ComplexVector amplitudes;
    /// Largest population found on a top Fock level over the whole preparation.
    double leakage = 0.0;
};

inline constexpr double kFockLeakageLimit = 1e-6;

/// Annihilation operator of one mode.
SparseOperator annihilation(const FockSpace& space, std::size_t mode);

/// Anti-Hermitian K with U = exp(K).
SparseOperator fock_generator(const FockSpace& space, const FockOperatorSpec& spec);

/// exp(K) v via a stepped Taylor series; K must be sparse.
ComplexVector expm_action(const SparseOperator& k, const ComplexVector& v);

/// Population on states where some mode sits on its top level.
double top_level_population(const FockSpace& space, const ComplexVector& v);

/// Applies the sequence to the vacuum in order. Throws NumericalError if the
/// leakage exceeds `max_leakage` after any step.
FockState prepare_state_fock(std::span<const FockOperatorSpec> sequence, const FockSpace& space,
                             double max_leakage = kFockLeakageLimit);

/// Tries cutoffs from `space.cutoff` upward in steps of 5 until the leakage
/// bound holds or the dimension guard is reached.
FockState prepare_state_fock_adaptive(std::span<const FockOperatorSpec> sequence, FockSpace space,
                                      double max_leakage = kFockLeakageLimit);

/// Three-mode preparation of the probe S_tr S_s: pump coherent amplitude
/// √N₀ e^{iϑ₀}, two-mode squeezing r e^{iϑ_sq} on the side modes, then the tritter.
std::vector<FockOperatorSpec> probe_sequence(const InterferometerConfig& config);

/// Full three-mode sequence S₋ S_ε S₊ at channel argument ε: the probe,
/// the channel on the side modes, the inverse tritter, the inverse squeezer.
std::vector<FockOperatorSpec> interferometer_sequence(const InterferometerConfig& config, double epsilon);

/// Hermitian generator G with channel unitary exp(−iεG) on the given pair of modes.
SparseOperator channel_generator(const FockSpace& space, const ChannelSpec& channel,
                                 std::array<std::size_t, 2> modes);

/// Pure-state QFI 4 Var(G) of the channel generator.
double generator_variance(const FockState& state, const ChannelSpec& channel, std::array<std::size_t, 2> modes,
                          double max_leakage = kFockLeakageLimit);

struct FockMoments {
    double mean = 0.0;
    double var = 0.0;
};

/// Moments of Σ_k n_k over the listed modes.
FockMoments number_moments_fock(const FockState& state, std::span<const std::size_t> modes);

/// Moments of n_a − n_b.
FockMoments number_difference_moments_fock(const FockState& state, std::size_t a, std::size_t b);

}  // namespace su11
