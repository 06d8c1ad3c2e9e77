#include "su11/channels.hpp"

#include <cmath>
#include <complex>
#include <unsupported/Eigen/MatrixFunctions>

namespace su11 {
namespace {

using Block = Eigen::Matrix2d;

// Reflection-type block used by squeezers: [[cos, sin], [sin, −cos]].
Block reflection(double phase) {
    Block b;
    b << std::cos(phase), std::sin(phase), std::sin(phase), -std::cos(phase);
    return b;
}

// Rotation-type block used by mode mixing: [[cos, sin], [−sin, cos]].
Block rotation(double phase) {
    Block b;
    b << std::cos(phase), std::sin(phase), -std::sin(phase), std::cos(phase);
    return b;
}

Matrix two_mode(const Block& a, const Block& b, const Block& c, const Block& d) {
    Matrix s(4, 4);
    s.topLeftCorner<2, 2>() = a;
    s.topRightCorner<2, 2>() = b;
    s.bottomLeftCorner<2, 2>() = c;
    s.bottomRightCorner<2, 2>() = d;
    return s;
}

}  // namespace

double ChannelSpec::argument() const {
    switch (kind) {
        case ChannelKind::squeezing:
        case ChannelKind::mode_mixing:
            return 0.25 * epsilon * strength;
        case ChannelKind::phase:
            return phase + epsilon * strength;
    }
    return 0.0;
}

ChannelSpec ChannelSpec::at_epsilon(double eps) const {
    ChannelSpec out = *this;
    out.epsilon = eps;
    return out;
}

const char* to_string(ChannelKind kind) {
    switch (kind) {
        case ChannelKind::squeezing: return "squeezing";
        case ChannelKind::mode_mixing: return "mode_mixing";
        case ChannelKind::phase: return "phase";
    }
    return "unknown";
}

SymplecticOp pumped_two_mode_squeezer(double r, double squeezing_phase) {
    Matrix s = Matrix::Identity(6, 6);
    s.bottomRightCorner<4, 4>() = squeezing_channel(r, squeezing_phase).matrix();
    return SymplecticOp(std::move(s));
}

SymplecticOp tritter(double theta, double tritter_phase) {
    const double a = std::sin(theta) / std::sqrt(2.0);
    const double c = std::cos(theta);
    const double cv = std::cos(tritter_phase);
    const double sv = std::sin(tritter_phase);
    const double keep = std::cos(0.5 * theta) * std::cos(0.5 * theta);
    const double cross = 0.5 * (c - 1.0);
    Matrix s(6, 6);
    // Row 4, column 2 is −a·sinϑ: the a1 ← a0 coupling is −i e^{−iϑ} sinθ/√2
    // for both side modes, so rows 4 and 6 carry the same pump entries.
    s << c,        0.0,     a * sv,  a * cv,  a * sv,  a * cv,
         0.0,      c,       -a * cv, a * sv,  -a * cv, a * sv,
         -a * sv,  a * cv,  keep,    0.0,     cross,   0.0,
         -a * cv,  -a * sv, 0.0,     keep,    0.0,     cross,
         -a * sv,  a * cv,  cross,   0.0,     keep,    0.0,
         -a * cv,  -a * sv, 0.0,     cross,   0.0,     keep;
    return SymplecticOp(std::move(s));
}

SymplecticOp tritter_from_generator(double theta, double tritter_phase) {
    using Complex = std::complex<double>;
    // Heisenberg picture: da/dt = −i h a with the single-particle matrix h of
    // the tritter Hamiltonian; over angle θ the mode operators transform by exp(−i h θ).
    Eigen::Matrix3cd h = Eigen::Matrix3cd::Zero();
    const Complex up = std::polar(1.0 / std::sqrt(2.0), tritter_phase);
    h(0, 1) = up;
    h(0, 2) = up;
    h(1, 0) = std::conj(up);
    h(2, 0) = std::conj(up);
    const Eigen::Matrix3cd m = Complex(0.0, -theta) * h;

    // a' = M a  ⇒  (q', p') blocks [[Re M, −Im M], [Im M, Re M]] per mode pair.
    Matrix generator = Matrix::Zero(6, 6);
    for (int j = 0; j < 3; ++j) {
        for (int k = 0; k < 3; ++k) {
            const Complex z = m(j, k);
            generator(2 * j, 2 * k) = z.real();
            generator(2 * j, 2 * k + 1) = -z.imag();
            generator(2 * j + 1, 2 * k) = z.imag();
            generator(2 * j + 1, 2 * k + 1) = z.real();
        }
    }
    Matrix s = generator.exp();
    if (!check_symplectic(s, SymplecticOp::kTolerance)) {
        throw NumericalError("tritter_from_generator: matrix exponential lost symplecticity");
    }
    return SymplecticOp(std::move(s));
}

SymplecticOp squeezing_channel(double s, double phase) {
    const Block id = Block::Identity();
    const Block off = std::sinh(s) * reflection(phase);
    return SymplecticOp(two_mode(std::cosh(s) * id, off, off, std::cosh(s) * id));
}

SymplecticOp mode_mixing_channel(double m, double phase) {
    const Block id = Block::Identity();
    const Block rot = rotation(phase);
    return SymplecticOp(two_mode(std::cos(m) * id, std::sin(m) * rot,
                                 -std::sin(m) * rot.transpose(), std::cos(m) * id));
}

SymplecticOp phase_channel(double phi) {
    Matrix s = Matrix::Identity(6, 6);
    const Block rot = rotation(0.5 * phi);
    s.block<2, 2>(2, 2) = rot;
    s.block<2, 2>(4, 4) = rot;
    return SymplecticOp(std::move(s));
}

Matrix gw_squeezing_matrix(double s_nm, double phase, GwForm form) {
    if (form == GwForm::exact) {
        return squeezing_channel(s_nm, phase).matrix();
    }
    const Block diag = (1.0 + 0.5 * s_nm * s_nm) * Block::Identity();
    const Block off = s_nm * reflection(phase);
    return two_mode(diag, off, off, diag);
}

SymplecticOp gw_squeezing_channel(double s_nm, double phase) {
    return SymplecticOp(gw_squeezing_matrix(s_nm, phase, GwForm::exact));
}

Matrix gw_mode_mixing_matrix(double s_nm, double phase, GwForm form) {
    if (form == GwForm::exact) {
        return mode_mixing_channel(s_nm, phase).matrix();
    }
    const Block diag = (1.0 - 0.5 * s_nm * s_nm) * Block::Identity();
    const Block rot = rotation(phase);
    return two_mode(diag, s_nm * rot, -s_nm * rot.transpose(), diag);
}

SymplecticOp gw_mode_mixing_channel(double s_nm, double phase) {
    return SymplecticOp(gw_mode_mixing_matrix(s_nm, phase, GwForm::exact));
}

SymplecticOp embed_on_side_modes(const SymplecticOp& op4) {
    if (op4.n_modes() != 2) {
        throw std::invalid_argument("embed_on_side_modes: expected a two-mode operator");
    }
    Matrix s = Matrix::Identity(6, 6);
    s.bottomRightCorner<4, 4>() = op4.matrix();
    return SymplecticOp(std::move(s));
}

SymplecticOp channel_operator(const ChannelSpec& spec) {
    if (!(spec.strength >= 0.0)) {
        throw std::invalid_argument("channel_operator: strength constant must be >= 0");
    }
    switch (spec.kind) {
        case ChannelKind::squeezing:
            return embed_on_side_modes(squeezing_channel(spec.argument(), spec.phase));
        case ChannelKind::mode_mixing:
            return embed_on_side_modes(mode_mixing_channel(spec.argument(), spec.phase));
        case ChannelKind::phase:
            return phase_channel(spec.argument());
    }
    throw std::invalid_argument("channel_operator: unknown channel kind");
}

}  // namespace su11
