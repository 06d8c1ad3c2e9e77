#pragma once

#include <cstddef>
#include <span>

#include "su11/types.hpp"

namespace su11 {

/// Standard symplectic form for n modes in (q1, p1, q2, p2, ...) ordering:
/// block diagonal with 2x2 blocks [[0, 1], [-1, 0]].
Matrix symplectic_form(std::size_t n_modes);

/// True iff S is square, of even dimension, and max |S Ω Sᵀ − Ω| < tol.
bool check_symplectic(const Matrix& s, double tol = 1e-10);

/// Phase-space image of a Gaussian unitary. Construction validates symplecticity.
class SymplecticOp {
public:
    static constexpr double kTolerance = 1e-10;

    explicit SymplecticOp(Matrix s);

    /// Identity on n modes.
    static SymplecticOp identity(std::size_t n_modes);

    std::size_t n_modes() const { return static_cast<std::size_t>(s_.rows() / 2); }
    const Matrix& matrix() const { return s_; }

    /// Composition: (*this) applied after `rhs`.
    SymplecticOp operator*(const SymplecticOp& rhs) const;

private:
    Matrix s_;
};

/// Gaussian state of n bosonic modes in the real q,p representation with
/// x_{2i-1} = a + a†, x_{2i} = i(a† − a); the vacuum has sigma = identity.
///
/// Construction checks symmetry (1e-12), physicality det(sigma) >= 1 − 1e-9
/// and finiteness, and throws std::invalid_argument on violation.
class GaussianState {
public:
    GaussianState(Vector displacement, Matrix covariance);

    std::size_t n_modes() const { return static_cast<std::size_t>(d_.size() / 2); }
    const Vector& displacement() const { return d_; }
    const Matrix& covariance() const { return sigma_; }

    /// Mean occupation ⟨a†a⟩ of one mode.
    double mode_occupation(std::size_t mode) const;
    /// Sum of all mode occupations.
    double total_occupation() const;

private:
    Vector d_;
    Matrix sigma_;
};

GaussianState vacuum_state(std::size_t n_modes);

/// Three-mode input: coherent pump (mode 0) with α = √N̄ e^{iϑ₀}, vacuum side modes.
GaussianState pumped_input_state(double total_particles, double pump_phase);

/// d' = S d, σ' = S σ Sᵀ.
GaussianState apply_symplectic(const GaussianState& state, const SymplecticOp& op);

/// Marginal on the listed modes, in the order given.
GaussianState reduce_to_modes(const GaussianState& state, std::span<const std::size_t> kept);

/// μ = 1/√det σ.
double purity(const GaussianState& state);

}  // namespace su11
