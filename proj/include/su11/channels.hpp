#pragma once

#include "su11/gaussian.hpp"

namespace su11 {

enum class ChannelKind { squeezing, mode_mixing, phase };

/// Which Gaussian channel imprints the estimated parameter ε on the side modes.
///
/// `strength` is the proportionality constant (B for squeezing, A for mode
/// mixing) and never includes ε. The channel argument is s = εB/4 or
/// m = εA/4; for the phase channel the rotation angle is phase + ε·strength.
struct ChannelSpec {
    ChannelKind kind = ChannelKind::squeezing;
    double strength = 1.0;
    double phase = 0.0;
    double epsilon = 0.0;

    /// s, m, or the total phase angle, depending on kind.
    double argument() const;
    /// The same spec evaluated at another ε.
    ChannelSpec at_epsilon(double eps) const;
};

const char* to_string(ChannelKind kind);

/// Source two-mode squeezer on the side modes (identity on the pump), 6x6.
SymplecticOp pumped_two_mode_squeezer(double r, double squeezing_phase);

/// Three-way beam splitter between the pump and both side modes, closed form, 6x6.
SymplecticOp tritter(double theta, double tritter_phase);

/// Tritter obtained by exponentiating the symplectic generator of
/// H = (1/√2)[e^{iϑ} a0†(a1 + a2) + h.c.] over evolution angle θ.
/// Independent cross-check of `tritter`.
SymplecticOp tritter_from_generator(double theta, double tritter_phase);

/// Two-mode squeezing channel on the side modes, 4x4. A negative s is the
/// same channel with the phase advanced by π.
SymplecticOp squeezing_channel(double s, double phase);

/// Mode-mixing (beam-splitter-like) channel on the side modes, 4x4.
SymplecticOp mode_mixing_channel(double m, double phase);

/// Rotation by φ/2 on each side mode (exp(−iφN̂/2)), identity on the pump, 6x6.
SymplecticOp phase_channel(double phi);

enum class GwForm { second_order, exact };

/// GW-induced squeezing on a resonant phonon pair. The second-order form has
/// (1 + s²/2) diagonal blocks and s·R off-diagonal blocks and is only
/// approximately symplectic (O(s³)), so it is returned as a raw matrix.
Matrix gw_squeezing_matrix(double s_nm, double phase, GwForm form);
/// Exact GW squeezing channel (identical to squeezing_channel).
SymplecticOp gw_squeezing_channel(double s_nm, double phase);

/// GW-induced mode mixing; second order in s is 1 − s²/2 on the diagonal.
Matrix gw_mode_mixing_matrix(double s_nm, double phase, GwForm form);
SymplecticOp gw_mode_mixing_channel(double s_nm, double phase);

/// I₂ ⊕ op4: puts a side-mode channel into the three-mode pipeline.
SymplecticOp embed_on_side_modes(const SymplecticOp& op4);

/// The 6x6 channel S_ε described by `spec`.
SymplecticOp channel_operator(const ChannelSpec& spec);

}  // namespace su11
