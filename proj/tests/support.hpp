#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "su11/pipeline.hpp"

namespace su11::test {

inline double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double side_particles(double r) { return 2.0 * std::sinh(r) * std::sinh(r); }

inline void squeezing_optimal_phases(InterferometerConfig& c) {
    c.squeezing_phase = c.channel.phase + 0.5 * kPi;
    c.tritter_phase = c.pump_phase + 0.5 * c.squeezing_phase - c.channel.phase;
}

inline void mixing_optimal_phases(InterferometerConfig& c) {
    c.tritter_phase = c.pump_phase - 0.5 * c.squeezing_phase + 0.5 * kPi;
}

inline InterferometerConfig make_config(ChannelKind kind, double nbar, double r, double theta) {
    InterferometerConfig c;
    c.channel.kind = kind;
    c.total_particles = nbar;
    c.squeezing = r;
    c.tritter_angle = theta;
    return c;
}

}  // namespace su11::test
