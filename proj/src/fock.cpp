#include "su11/fock.hpp"

#include <cmath>
#include <string>

namespace su11 {
namespace {

constexpr Complex kI{0.0, 1.0};

// m e^{iφ} for any real m (std::polar requires m ≥ 0).
Complex phasor(double magnitude, double phase) { return magnitude * std::exp(kI * phase); }

std::size_t stride(const FockSpace& space, std::size_t mode) {
    std::size_t s = 1;
    for (std::size_t k = 0; k < mode; ++k) {
        s *= space.cutoff;
    }
    return s;
}

void check_mode(const FockSpace& space, std::size_t mode) {
    if (mode >= space.n_modes) {
        throw std::invalid_argument("Fock mode index " + std::to_string(mode) + " out of range");
    }
}

void check_distinct(const FockSpace& space, std::size_t a, std::size_t b) {
    check_mode(space, a);
    check_mode(space, b);
    if (a == b) {
        throw std::invalid_argument("Fock two-mode operator needs distinct modes");
    }
}

double norm1(const SparseOperator& k) {
    Eigen::VectorXd col = Eigen::VectorXd::Zero(k.cols());
    for (Eigen::Index outer = 0; outer < k.outerSize(); ++outer) {
        for (SparseOperator::InnerIterator it(k, outer); it; ++it) {
            col(it.col()) += std::abs(it.value());
        }
    }
    return col.size() ? col.maxCoeff() : 0.0;
}

}  // namespace

void FockSpace::validate() const {
    if (n_modes < 2 || n_modes > 3) {
        throw std::invalid_argument("FockSpace: n_modes must be 2 or 3");
    }
    if (cutoff < kMinCutoff) {
        throw std::invalid_argument("FockSpace: cutoff must be >= " + std::to_string(kMinCutoff));
    }
    if (dimension() > kMaxDimension) {
        throw std::invalid_argument("FockSpace: dimension " + std::to_string(dimension()) + " exceeds " +
                                    std::to_string(kMaxDimension));
    }
}

std::size_t FockSpace::dimension() const {
    std::size_t d = 1;
    for (std::size_t k = 0; k < n_modes; ++k) {
        d *= cutoff;
    }
    return d;
}

std::size_t FockSpace::occupation(std::size_t index, std::size_t mode) const {
    for (std::size_t k = 0; k < mode; ++k) {
        index /= cutoff;
    }
    return index % cutoff;
}

FockOperatorSpec FockOperatorSpec::displacement(std::size_t mode, Complex alpha) {
    FockOperatorSpec s;
    s.kind = Kind::displacement;
    s.modes = {mode, mode, mode};
    s.amplitude = alpha;
    return s;
}

FockOperatorSpec FockOperatorSpec::two_mode_squeeze(std::size_t a, std::size_t b, Complex xi) {
    FockOperatorSpec s;
    s.kind = Kind::two_mode_squeeze;
    s.modes = {a, b, b};
    s.amplitude = xi;
    return s;
}

FockOperatorSpec FockOperatorSpec::mode_mix(std::size_t a, std::size_t b, Complex zeta) {
    FockOperatorSpec s;
    s.kind = Kind::mode_mix;
    s.modes = {a, b, b};
    s.amplitude = zeta;
    return s;
}

FockOperatorSpec FockOperatorSpec::tritter(std::size_t pump, std::size_t a, std::size_t b, double theta,
                                           double phase) {
    FockOperatorSpec s;
    s.kind = Kind::tritter;
    s.modes = {pump, a, b};
    s.angle = theta;
    s.angle_phase = phase;
    return s;
}

FockOperatorSpec FockOperatorSpec::phase_shift(std::size_t a, std::size_t b, double phi) {
    FockOperatorSpec s;
    s.kind = Kind::phase;
    s.modes = {a, b, b};
    s.angle = phi;
    return s;
}

SparseOperator annihilation(const FockSpace& space, std::size_t mode) {
    space.validate();
    check_mode(space, mode);
    const std::size_t dim = space.dimension();
    const std::size_t step = stride(space, mode);
    std::vector<Eigen::Triplet<Complex>> entries;
    entries.reserve(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        const std::size_t n = space.occupation(i, mode);
        if (n > 0) {
            entries.emplace_back(static_cast<int>(i - step), static_cast<int>(i), std::sqrt(static_cast<double>(n)));
        }
    }
    SparseOperator a(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    a.setFromTriplets(entries.begin(), entries.end());
    return a;
}

SparseOperator fock_generator(const FockSpace& space, const FockOperatorSpec& spec) {
    using Kind = FockOperatorSpec::Kind;
    space.validate();
    const auto [m0, m1, m2] = spec.modes;
    switch (spec.kind) {
        case Kind::displacement: {
            check_mode(space, m0);
            const SparseOperator a = annihilation(space, m0);
            const SparseOperator ad = a.adjoint();
            return SparseOperator(spec.amplitude * ad - std::conj(spec.amplitude) * a);
        }
        case Kind::two_mode_squeeze: {
            check_distinct(space, m0, m1);
            const SparseOperator a = annihilation(space, m0);
            const SparseOperator b = annihilation(space, m1);
            const SparseOperator ab = a * b;
            const SparseOperator abd = ab.adjoint();
            return SparseOperator(spec.amplitude * abd - std::conj(spec.amplitude) * ab);
        }
        case Kind::mode_mix: {
            check_distinct(space, m0, m1);
            const SparseOperator a = annihilation(space, m0);
            const SparseOperator b = annihilation(space, m1);
            const SparseOperator adb = SparseOperator(a.adjoint()) * b;
            const SparseOperator abd = adb.adjoint();
            return SparseOperator(spec.amplitude * adb - std::conj(spec.amplitude) * abd);
        }
        case Kind::tritter: {
            check_distinct(space, m0, m1);
            check_distinct(space, m0, m2);
            check_distinct(space, m1, m2);
            const SparseOperator a0 = annihilation(space, m0);
            const SparseOperator side = annihilation(space, m1) + annihilation(space, m2);
            const SparseOperator half = std::exp(kI * spec.angle_phase) / std::sqrt(2.0) *
                                        (SparseOperator(a0.adjoint()) * side);
            const SparseOperator h = half + SparseOperator(half.adjoint());
            return SparseOperator(-kI * spec.angle * h);
        }
        case Kind::phase: {
            check_distinct(space, m0, m1);
            const SparseOperator a = annihilation(space, m0);
            const SparseOperator b = annihilation(space, m1);
            const SparseOperator n = SparseOperator(a.adjoint()) * a + SparseOperator(b.adjoint()) * b;
            return SparseOperator(Complex(0.0, -0.5 * spec.angle) * n);
        }
    }
    throw std::invalid_argument("fock_generator: unknown kind");
}

ComplexVector expm_action(const SparseOperator& k, const ComplexVector& v) {
    if (k.cols() != v.size()) {
        throw std::invalid_argument("expm_action: dimension mismatch");
    }
    const int steps = std::max(1, static_cast<int>(std::ceil(norm1(k))));
    const double inv_steps = 1.0 / steps;
    ComplexVector out = v;
    for (int s = 0; s < steps; ++s) {
        ComplexVector term = out;
        ComplexVector sum = out;
        int order = 1;
        for (; order <= 200; ++order) {
            term = (k * term) * (inv_steps / order);
            sum += term;
            if (term.norm() <= 1e-17 * sum.norm()) {
                break;
            }
        }
        if (order > 200) {
            throw NumericalError("expm_action: Taylor series did not converge");
        }
        out = std::move(sum);
    }
    return out;
}

double top_level_population(const FockSpace& space, const ComplexVector& v) {
    double p = 0.0;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        for (std::size_t m = 0; m < space.n_modes; ++m) {
            if (space.occupation(static_cast<std::size_t>(i), m) + 1 == space.cutoff) {
                p += std::norm(v(i));
                break;
            }
        }
    }
    return p;
}

FockState prepare_state_fock(std::span<const FockOperatorSpec> sequence, const FockSpace& space,
                             double max_leakage) {
    space.validate();
    FockState state{space, ComplexVector::Zero(static_cast<Eigen::Index>(space.dimension())), 0.0};
    state.amplitudes(0) = 1.0;
    for (const auto& spec : sequence) {
        state.amplitudes = expm_action(fock_generator(space, spec), state.amplitudes);
        state.leakage = std::max(state.leakage, top_level_population(space, state.amplitudes));
        if (state.leakage > max_leakage) {
            throw NumericalError("prepare_state_fock: truncation leakage " + std::to_string(state.leakage) +
                                 " exceeds " + std::to_string(max_leakage) + " at cutoff " +
                                 std::to_string(space.cutoff));
        }
    }
    return state;
}

FockState prepare_state_fock_adaptive(std::span<const FockOperatorSpec> sequence, FockSpace space,
                                      double max_leakage) {
    space.validate();
    while (true) {
        try {
            return prepare_state_fock(sequence, space, max_leakage);
        } catch (const NumericalError&) {
            FockSpace next = space;
            next.cutoff += 5;
            if (next.dimension() > FockSpace::kMaxDimension) {
                throw;
            }
            space = next;
        }
    }
}

std::vector<FockOperatorSpec> probe_sequence(const InterferometerConfig& config) {
    config.validate();
    const auto pops = pump_depletion(config.total_particles, config.squeezing);
    return {
        FockOperatorSpec::displacement(0, phasor(std::sqrt(pops.pump), config.pump_phase)),
        FockOperatorSpec::two_mode_squeeze(1, 2, phasor(config.squeezing, config.squeezing_phase)),
        FockOperatorSpec::tritter(0, 1, 2, config.tritter_angle, config.tritter_phase),
    };
}

std::vector<FockOperatorSpec> interferometer_sequence(const InterferometerConfig& config, double epsilon) {
    auto seq = probe_sequence(config);
    const ChannelSpec channel = config.channel.at_epsilon(epsilon);
    const double x = channel.argument();
    switch (channel.kind) {
        case ChannelKind::squeezing:
            seq.push_back(FockOperatorSpec::two_mode_squeeze(1, 2, phasor(x, channel.phase)));
            break;
        case ChannelKind::mode_mixing:
            seq.push_back(FockOperatorSpec::mode_mix(1, 2, phasor(x, -channel.phase)));
            break;
        case ChannelKind::phase:
            seq.push_back(FockOperatorSpec::phase_shift(1, 2, x));
            break;
    }
    seq.push_back(FockOperatorSpec::tritter(0, 1, 2, -config.tritter_angle, config.tritter_phase));
    seq.push_back(FockOperatorSpec::two_mode_squeeze(1, 2, phasor(-config.squeezing, config.squeezing_phase)));
    return seq;
}

SparseOperator channel_generator(const FockSpace& space, const ChannelSpec& channel,
                                 std::array<std::size_t, 2> modes) {
    FockOperatorSpec unit;
    const double quarter = 0.25 * channel.strength;
    switch (channel.kind) {
        case ChannelKind::squeezing:
            unit = FockOperatorSpec::two_mode_squeeze(modes[0], modes[1], phasor(quarter, channel.phase));
            break;
        case ChannelKind::mode_mixing:
            unit = FockOperatorSpec::mode_mix(modes[0], modes[1], phasor(quarter, -channel.phase));
            break;
        case ChannelKind::phase:
            unit = FockOperatorSpec::phase_shift(modes[0], modes[1], channel.strength);
            break;
    }
    // exp(εK) = exp(−iεG)  ⇒  G = iK
    return SparseOperator(kI * fock_generator(space, unit));
}

double generator_variance(const FockState& state, const ChannelSpec& channel, std::array<std::size_t, 2> modes,
                          double max_leakage) {
    if (state.leakage > max_leakage) {
        throw NumericalError("generator_variance: state leakage " + std::to_string(state.leakage) +
                             " exceeds " + std::to_string(max_leakage));
    }
    const SparseOperator g = channel_generator(state.space, channel, modes);
    const ComplexVector gv = g * state.amplitudes;
    const double mean = state.amplitudes.dot(gv).real();
    return std::max(0.0, 4.0 * (gv.squaredNorm() - mean * mean));
}

namespace {

template <typename Weight>
FockMoments diagonal_moments(const FockState& state, Weight&& weight) {
    FockMoments m;
    double second = 0.0;
    for (Eigen::Index i = 0; i < state.amplitudes.size(); ++i) {
        const double p = std::norm(state.amplitudes(i));
        const double w = weight(static_cast<std::size_t>(i));
        m.mean += p * w;
        second += p * w * w;
    }
    m.var = second - m.mean * m.mean;
    return m;
}

}  // namespace

FockMoments number_moments_fock(const FockState& state, std::span<const std::size_t> modes) {
    for (auto m : modes) {
        check_mode(state.space, m);
    }
    return diagonal_moments(state, [&](std::size_t i) {
        double n = 0.0;
        for (auto m : modes) {
            n += static_cast<double>(state.space.occupation(i, m));
        }
        return n;
    });
}

FockMoments number_difference_moments_fock(const FockState& state, std::size_t a, std::size_t b) {
    check_distinct(state.space, a, b);
    return diagonal_moments(state, [&](std::size_t i) {
        return static_cast<double>(state.space.occupation(i, a)) - static_cast<double>(state.space.occupation(i, b));
    });
}

}  // namespace su11
