#include "su11/gaussian.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace su11 {

Matrix symplectic_form(std::size_t n_modes) {
    Matrix omega = Matrix::Zero(2 * n_modes, 2 * n_modes);
    for (std::size_t k = 0; k < n_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

bool check_symplectic(const Matrix& s, double tol) {
    if (s.rows() != s.cols() || s.rows() == 0 || s.rows() % 2 != 0) {
        return false;
    }
    if (!s.allFinite()) {
        return false;
    }
    const Matrix omega = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
    return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() < tol;
}

SymplecticOp::SymplecticOp(Matrix s) : s_(std::move(s)) {
    if (!check_symplectic(s_, kTolerance)) {
        throw std::invalid_argument("SymplecticOp: matrix is not symplectic");
    }
}

SymplecticOp SymplecticOp::identity(std::size_t n_modes) {
    if (n_modes == 0) {
        throw std::invalid_argument("SymplecticOp::identity: need at least one mode");
    }
    return SymplecticOp(Matrix::Identity(2 * n_modes, 2 * n_modes));
}

SymplecticOp SymplecticOp::operator*(const SymplecticOp& rhs) const {
    if (n_modes() != rhs.n_modes()) {
        throw std::invalid_argument("SymplecticOp: composing operators on different mode counts");
    }
    return SymplecticOp(s_ * rhs.s_);
}

GaussianState::GaussianState(Vector displacement, Matrix covariance)
    : d_(std::move(displacement)), sigma_(std::move(covariance)) {
    const auto dim = d_.size();
    if (dim == 0 || dim % 2 != 0) {
        throw std::invalid_argument("GaussianState: displacement length must be a positive even number");
    }
    if (sigma_.rows() != dim || sigma_.cols() != dim) {
        throw std::invalid_argument("GaussianState: covariance shape does not match displacement");
    }
    if (!d_.allFinite() || !sigma_.allFinite()) {
        throw std::invalid_argument("GaussianState: non-finite entries");
    }
    if ((sigma_ - sigma_.transpose()).cwiseAbs().maxCoeff() >= 1e-12) {
        throw std::invalid_argument("GaussianState: covariance is not symmetric");
    }
    const double det = sigma_.determinant();
    if (!(det >= 1.0 - 1e-9)) {
        throw std::invalid_argument("GaussianState: unphysical covariance (det sigma = " +
                                    std::to_string(det) + " < 1)");
    }
}

double GaussianState::mode_occupation(std::size_t mode) const {
    if (mode >= n_modes()) {
        throw std::out_of_range("GaussianState::mode_occupation: mode index out of range");
    }
    const auto q = static_cast<Eigen::Index>(2 * mode);
    const double second = sigma_(q, q) + sigma_(q + 1, q + 1) + d_(q) * d_(q) + d_(q + 1) * d_(q + 1);
    return 0.25 * second - 0.5;
}

double GaussianState::total_occupation() const {
    return 0.25 * (sigma_.trace() + d_.squaredNorm()) - 0.5 * static_cast<double>(n_modes());
}

GaussianState vacuum_state(std::size_t n_modes) {
    if (n_modes == 0) {
        throw std::invalid_argument("vacuum_state: need at least one mode");
    }
    return GaussianState(Vector::Zero(2 * n_modes), Matrix::Identity(2 * n_modes, 2 * n_modes));
}

GaussianState pumped_input_state(double total_particles, double pump_phase) {
    if (!(total_particles >= 0.0)) {
        throw std::invalid_argument("pumped_input_state: total particle number must be >= 0");
    }
    Vector d = Vector::Zero(6);
    const double amplitude = std::sqrt(total_particles);
    d(0) = 2.0 * amplitude * std::cos(pump_phase);
    d(1) = 2.0 * amplitude * std::sin(pump_phase);
    return GaussianState(std::move(d), Matrix::Identity(6, 6));
}

GaussianState apply_symplectic(const GaussianState& state, const SymplecticOp& op) {
    if (state.n_modes() != op.n_modes()) {
        throw std::invalid_argument("apply_symplectic: state has " + std::to_string(state.n_modes()) +
                                    " modes, operator acts on " + std::to_string(op.n_modes()));
    }
    const Matrix& s = op.matrix();
    Matrix sigma = s * state.covariance() * s.transpose();
    // S σ Sᵀ is symmetric in exact arithmetic; drop the rounding asymmetry.
    sigma = 0.5 * (sigma + sigma.transpose()).eval();
    return GaussianState(s * state.displacement(), std::move(sigma));
}

GaussianState reduce_to_modes(const GaussianState& state, std::span<const std::size_t> kept) {
    if (kept.empty()) {
        throw std::invalid_argument("reduce_to_modes: empty mode list");
    }
    std::vector<bool> seen(state.n_modes(), false);
    std::vector<Eigen::Index> rows;
    rows.reserve(2 * kept.size());
    for (std::size_t mode : kept) {
        if (mode >= state.n_modes()) {
            throw std::invalid_argument("reduce_to_modes: mode index " + std::to_string(mode) + " out of range");
        }
        if (seen[mode]) {
            throw std::invalid_argument("reduce_to_modes: duplicate mode index " + std::to_string(mode));
        }
        seen[mode] = true;
        rows.push_back(static_cast<Eigen::Index>(2 * mode));
        rows.push_back(static_cast<Eigen::Index>(2 * mode + 1));
    }
    const auto dim = static_cast<Eigen::Index>(rows.size());
    Vector d(dim);
    Matrix sigma(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        d(i) = state.displacement()(rows[i]);
        for (Eigen::Index j = 0; j < dim; ++j) {
            sigma(i, j) = state.covariance()(rows[i], rows[j]);
        }
    }
    return GaussianState(std::move(d), std::move(sigma));
}

double purity(const GaussianState& state) {
    const double det = state.covariance().determinant();
    if (!(det > 0.0)) {
        throw NumericalError("purity: non-positive covariance determinant");
    }
    return 1.0 / std::sqrt(det);
}

}  // namespace su11
