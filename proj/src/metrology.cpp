#include "su11/metrology.hpp"

#include <array>
#include <cmath>
#include <string>

namespace su11 {
namespace {

constexpr std::array<std::size_t, 2> kSideModes{1, 2};

// Richardson-extrapolated central difference: (4 D(h/2) − D(h)) / 3.
template <typename F>
auto richardson(F&& f, double x0, double h) {
    auto central = [&](double step) { return ((f(x0 + step) - f(x0 - step)) / (2.0 * step)).eval(); };
    const auto coarse = central(h);
    const auto fine = central(0.5 * h);
    return ((4.0 * fine - coarse) / 3.0).eval();
}

template <typename F>
double richardson_scalar(F&& f, double x0, double h) {
    auto central = [&](double step) { return (f(x0 + step) - f(x0 - step)) / (2.0 * step); };
    return (4.0 * central(0.5 * h) - central(h)) / 3.0;
}

void check_step(const FiniteDifference& fd) {
    if (!(fd.step > 0.0) || !std::isfinite(fd.step)) {
        throw std::invalid_argument("finite-difference step must be positive");
    }
}

double wrap(double angle, double period) { return std::remainder(angle, period); }

double sq(double x) { return x * x; }

// Everything the closed forms need, evaluated once per config.
struct Terms {
    double k = 0.0;      // B or A
    double nbar = 0.0;   // N̄
    double n0 = 0.0;     // N₀ = |α₀|²
    double n = 0.0;      // N = 2 sinh² r
    double r = 0.0;
    double theta = 0.0;
    double sin2 = 0.0;   // sin²θ
    double cos2 = 0.0;   // cos²θ
    double sin2_2t = 0.0;  // sin²2θ
    double sh2 = 0.0;    // sinh² r
    double s2r2 = 0.0;   // sinh² 2r
    double e2r = 0.0;    // e^{2r}
    // squeezing
    double eta1 = 0.0;
    double eta2 = 0.0;
    double eta1_phase = 0.0;  // 2ϑ − 2ϑ₀ − ϑ_sq + 2φ_B
    // mode mixing
    double phi1 = 0.0;
    double eta3 = 0.0;
    double eta3_phase = 0.0;  // 2ϑ − 2ϑ₀ + ϑ_sq
    double sin2_phase = 0.0;  // sin²φ_A
};

void set_theta(Terms& t, double theta) {
    t.theta = theta;
    t.sin2 = sq(std::sin(theta));
    t.cos2 = sq(std::cos(theta));
    t.sin2_2t = sq(std::sin(2.0 * theta));
    t.phi1 = t.sin2 * t.sin2_phase - 1.0;
}

Terms make_terms(const InterferometerConfig& c) {
    c.validate();
    Terms t;
    const auto pops = pump_depletion(c.total_particles, c.squeezing);
    t.k = c.channel.strength;
    t.nbar = c.total_particles;
    t.n0 = pops.pump;
    t.n = pops.side;
    t.r = c.squeezing;
    t.sh2 = sq(std::sinh(t.r));
    t.s2r2 = sq(std::sinh(2.0 * t.r));
    t.e2r = std::exp(2.0 * t.r);
    const double phase = c.channel.phase;
    t.eta1_phase = 2.0 * c.tritter_phase - 2.0 * c.pump_phase - c.squeezing_phase + 2.0 * phase;
    t.eta1 = std::sinh(2.0 * t.r) * std::cos(t.eta1_phase) + std::cosh(2.0 * t.r);
    t.eta2 = sq(std::sin(c.squeezing_phase - phase));
    t.sin2_phase = sq(std::sin(phase));
    t.eta3_phase = 2.0 * c.tritter_phase - 2.0 * c.pump_phase + c.squeezing_phase;
    t.eta3 = std::sinh(2.0 * t.r) * std::cos(t.eta3_phase) - std::cosh(2.0 * t.r);
    set_theta(t, c.tritter_angle);
    return t;
}

class RegimeCheck {
public:
    RegimeCheck(const InterferometerConfig& c, const Terms& t, const RegimeOptions& o, const char* label)
        : c_(c), t_(t), o_(o), label_(label) {}

    void theta_equals(double target, const char* what) const {
        if (std::abs(c_.tritter_angle - target) > o_.angle_tolerance) {
            fail(std::string("requires theta = ") + what);
        }
    }
    void large_nbar() const {
        if (t_.nbar < o_.large_nbar_min) {
            fail("requires total particle number >= " + std::to_string(o_.large_nbar_min));
        }
    }
    void squeezing_optimal_tritter_phase() const {
        if (std::abs(wrap(t_.eta1_phase, 2.0 * kPi)) > o_.angle_tolerance) {
            fail("requires 2*tritter_phase = 2*pump_phase + squeezing_phase - 2*channel_phase");
        }
    }
    void squeezing_quadrature_phase() const {
        if (std::abs(wrap(c_.squeezing_phase - c_.channel.phase - 0.5 * kPi, kPi)) > o_.angle_tolerance) {
            fail("requires squeezing_phase = channel_phase + pi/2");
        }
    }
    void mixing_optimal_tritter_phase() const {
        if (std::abs(wrap(t_.eta3_phase - kPi, 2.0 * kPi)) > o_.angle_tolerance) {
            fail("requires tritter_phase = pump_phase - squeezing_phase/2 + pi/2");
        }
    }
    void channel_phase_equals(double target, const char* what) const {
        if (std::abs(wrap(c_.channel.phase - target, kPi)) > o_.angle_tolerance) {
            fail(std::string("requires channel phase = ") + what);
        }
    }
    void undepleted_angle() const {
        double bound = 0.0;
        try {
            bound = max_tritter_angle(t_.n / t_.n0, o_.depletion_ratio);
        } catch (const std::exception& e) {
            fail(std::string("undepleted-pump bound unavailable: ") + e.what());
        }
        if (c_.tritter_angle > bound) {
            fail("requires theta <= theta_max = " + std::to_string(bound));
        }
    }
    void positive_squeezing() const {
        if (!(t_.r > 0.0)) {
            fail("requires r > 0");
        }
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw std::invalid_argument(std::string("regime ") + label_ + ": " + why);
    }

private:
    const InterferometerConfig& c_;
    const Terms& t_;
    const RegimeOptions& o_;
    const char* label_;
};

double squeezing_exact(const Terms& t) {
    return sq(t.k) / 16.0 *
           (4.0 + t.sin2_2t * t.sh2 + 2.0 * (1.0 + sq(t.cos2)) * t.eta2 * t.s2r2 +
            t.n0 * (4.0 * sq(t.sin2) + t.eta1 * t.sin2_2t));
}

double mixing_exact(const Terms& t) {
    return sq(t.k) / 8.0 *
           ((1.0 + t.cos2) * t.s2r2 + t.sin2 * t.phi1 * (t.s2r2 - 2.0 * t.sh2) +
            2.0 * t.n0 * t.sin2 * (t.sin2 * t.sin2_phase + t.phi1 * t.eta3));
}

double squeezing_qfi(const InterferometerConfig& c, const Terms& t, QfiRegime regime, const RegimeOptions& o) {
    const RegimeCheck check(c, t, o, to_string(regime));
    const double k2 = sq(t.k);
    switch (regime) {
        case QfiRegime::exact:
            return squeezing_exact(t);
        case QfiRegime::theta_zero:
            check.theta_equals(0.0, "0");
            return 0.25 * k2 * (1.0 + t.eta2 * t.s2r2);
        case QfiRegime::theta_half_pi:
            check.theta_equals(0.5 * kPi, "pi/2");
            return 0.25 * k2 * (1.0 + t.n0 + 0.5 * t.eta2 * sq(t.n));
        case QfiRegime::turning_point:
        case QfiRegime::turning_point_large_r: {
            check.large_nbar();
            check.positive_squeezing();
            check.squeezing_optimal_tritter_phase();
            check.squeezing_quadrature_phase();
            const double theta_t = optimal_tritter_angle(t.nbar, t.n, TurningPointMode::exact);
            if (std::abs(c.tritter_angle - theta_t) > o.turning_point_tolerance) {
                check.fail("requires theta = theta_t = " + std::to_string(theta_t));
            }
            if (regime == QfiRegime::turning_point) {
                return k2 / 32.0 * t.nbar * t.e2r * (1.0 + 1.0 / std::tanh(t.r));
            }
            return k2 / 8.0 * t.nbar * t.n;
        }
        case QfiRegime::large_nbar:
            check.large_nbar();
            return 0.25 * k2 * t.nbar * (sq(t.sin2) + 0.25 * t.sin2_2t * t.eta1);
        case QfiRegime::large_nbar_large_n:
            check.large_nbar();
            check.squeezing_optimal_tritter_phase();
            return k2 / 8.0 * t.sin2_2t * t.n * t.nbar;
        case QfiRegime::undepleted:
        case QfiRegime::undepleted_large_r:
            check.undepleted_angle();
            check.squeezing_optimal_tritter_phase();
            check.squeezing_quadrature_phase();
            if (regime == QfiRegime::undepleted) {
                return undepleted_qfi_formula(ChannelKind::squeezing, t.k, t.theta, t.n0, t.r);
            }
            return pumped_qfi_formula(t.k, t.theta, t.n0, t.n);
        default:
            check.fail("not defined for the squeezing channel");
    }
}

double mixing_qfi(const InterferometerConfig& c, const Terms& t, QfiRegime regime, const RegimeOptions& o) {
    const RegimeCheck check(c, t, o, to_string(regime));
    const double k2 = sq(t.k);
    switch (regime) {
        case QfiRegime::exact:
            return mixing_exact(t);
        case QfiRegime::theta_zero:
            check.theta_equals(0.0, "0");
            return 0.25 * k2 * sq(t.n);
        case QfiRegime::theta_half_pi_phase_half_pi:
            check.theta_equals(0.5 * kPi, "pi/2");
            check.channel_phase_equals(0.5 * kPi, "pi/2");
            return 0.25 * k2 * (t.n0 + 0.5 * sq(t.n));
        case QfiRegime::theta_half_pi_phase_zero:
        case QfiRegime::theta_half_pi_phase_zero_large_r:
            check.theta_equals(0.5 * kPi, "pi/2");
            check.channel_phase_equals(0.0, "0");
            check.mixing_optimal_tritter_phase();
            check.large_nbar();
            if (regime == QfiRegime::theta_half_pi_phase_zero) {
                return 0.25 * k2 * (t.nbar * t.e2r + t.n);
            }
            return 0.5 * k2 * t.nbar * t.n;
        case QfiRegime::large_nbar:
            check.large_nbar();
            return 0.25 * k2 * t.nbar * t.sin2 * (t.sin2 * t.sin2_phase + t.phi1 * t.eta3);
        case QfiRegime::large_nbar_large_n:
            check.large_nbar();
            check.mixing_optimal_tritter_phase();
            return 0.5 * k2 * t.sin2 * (1.0 - t.sin2 * t.sin2_phase) * t.nbar * t.n;
        case QfiRegime::undepleted:
        case QfiRegime::undepleted_large_r:
            check.undepleted_angle();
            check.mixing_optimal_tritter_phase();
            if (regime == QfiRegime::undepleted) {
                return undepleted_qfi_formula(ChannelKind::mode_mixing, t.k, t.theta, t.n0, t.r);
            }
            return pumped_qfi_formula(t.k, t.theta, t.n0, t.n);
        default:
            check.fail("not defined for the mode-mixing channel");
    }
}

SmallSignalMoments squeezing_small_signal(const Terms& t) {
    const double x = (t.n0 * t.eta1 + sq(std::cosh(t.r))) * t.sin2_2t;
    const double y = (1.0 + sq(t.cos2)) * (t.s2r2 * t.eta2 + 1.0);
    return {0.25 * (x + 4.0 * y), 0.25 * (x + 8.0 * y)};
}

SmallSignalMoments mixing_small_signal(const Terms& t) {
    const double mean = t.sin2 * (t.phi1 * t.n0 * t.eta3 - t.phi1 * t.sh2 + (t.phi1 - 1.0) * t.s2r2) + 2.0 * t.s2r2;
    const double var = t.phi1 * t.sin2 * (t.n0 * t.eta3 - t.sh2 + 2.0 * t.s2r2) + 2.0 * (1.0 + t.cos2) * t.s2r2;
    return {mean, var};
}

void require_closed_form_channel(const InterferometerConfig& c) {
    if (c.channel.kind == ChannelKind::phase) {
        throw std::invalid_argument("closed forms are available for squeezing and mode-mixing channels only");
    }
}

}  // namespace

double gaussian_qfi(const GaussianFamilyPoint& point) {
    const Matrix& sigma = point.state.covariance();
    if (!point.covariance_derivative.allFinite() || !point.displacement_derivative.allFinite() ||
        !std::isfinite(point.purity_derivative)) {
        throw NumericalError("gaussian_qfi: non-finite derivative");
    }
    const Eigen::SelfAdjointEigenSolver<Matrix> eig(sigma, Eigen::EigenvaluesOnly);
    const double lo = eig.eigenvalues().minCoeff();
    const double hi = eig.eigenvalues().maxCoeff();
    if (!(lo > 0.0) || hi / lo > 1e12) {
        throw NumericalError("gaussian_qfi: covariance singular or ill-conditioned (cond > 1e12)");
    }
    const Eigen::LLT<Matrix> llt(sigma);
    const Matrix a = llt.solve(point.covariance_derivative);
    const double mu = purity(point.state);
    const double mu2 = mu * mu;
    double h = 0.5 * (a * a).trace() / (1.0 + mu2);
    h += point.displacement_derivative.dot(llt.solve(point.displacement_derivative));
    if (std::abs(1.0 - mu) >= 1e-9) {
        h += 2.0 * sq(point.purity_derivative) / (1.0 - mu2 * mu2);
    }
    if (!std::isfinite(h)) {
        throw NumericalError("gaussian_qfi: non-finite result");
    }
    return h;
}

double qfi_numeric(const InterferometerConfig& config, double eps0, FiniteDifference fd) {
    check_step(fd);
    if (!(eps0 >= 0.0)) {
        throw std::invalid_argument("qfi_numeric: eps0 must be >= 0");
    }
    const GaussianState probe = probe_state(config);
    auto at = [&](double eps) { return apply_symplectic(probe, channel_operator(config.channel.at_epsilon(eps))); };
    const Matrix dsigma = richardson([&](double e) { return at(e).covariance(); }, eps0, fd.step);
    const Vector dd = richardson([&](double e) { return at(e).displacement(); }, eps0, fd.step);
    const double dmu = richardson_scalar([&](double e) { return purity(at(e)); }, eps0, fd.step);
    return gaussian_qfi({at(eps0), dsigma, dd, dmu});
}

const char* to_string(QfiRegime regime) {
    switch (regime) {
        case QfiRegime::exact: return "exact";
        case QfiRegime::theta_zero: return "theta_zero";
        case QfiRegime::theta_half_pi: return "theta_half_pi";
        case QfiRegime::theta_half_pi_phase_half_pi: return "theta_half_pi_phase_half_pi";
        case QfiRegime::theta_half_pi_phase_zero: return "theta_half_pi_phase_zero";
        case QfiRegime::theta_half_pi_phase_zero_large_r: return "theta_half_pi_phase_zero_large_r";
        case QfiRegime::turning_point: return "turning_point";
        case QfiRegime::turning_point_large_r: return "turning_point_large_r";
        case QfiRegime::large_nbar: return "large_nbar";
        case QfiRegime::large_nbar_large_n: return "large_nbar_large_n";
        case QfiRegime::undepleted: return "undepleted";
        case QfiRegime::undepleted_large_r: return "undepleted_large_r";
    }
    return "unknown";
}

const char* to_string(F0Regime regime) {
    switch (regime) {
        case F0Regime::small_signal: return "small_signal";
        case F0Regime::printed_fraction: return "printed_fraction";
        case F0Regime::large_nbar: return "large_nbar";
        case F0Regime::undepleted_large_r: return "undepleted_large_r";
    }
    return "unknown";
}

double undepleted_qfi_formula(ChannelKind kind, double strength, double theta, double pump_particles, double r) {
    if (kind == ChannelKind::phase) {
        throw std::invalid_argument("undepleted_qfi_formula: squeezing or mode-mixing channel required");
    }
    const double n = 2.0 * sq(std::sinh(r));
    const double base = kind == ChannelKind::squeezing ? 1.0 : 0.0;
    return 0.25 * sq(strength) *
           (base + sq(n) + sq(theta) * (pump_particles * std::exp(2.0 * r) + 0.5 * n - sq(n)));
}

double pumped_qfi_formula(double strength, double theta, double pump_particles, double side_particles) {
    return 0.5 * sq(strength) * sq(theta) * pump_particles * side_particles;
}

double qfi_closed_form(const InterferometerConfig& config, QfiRegime regime, const RegimeOptions& options) {
    require_closed_form_channel(config);
    const Terms t = make_terms(config);
    return config.channel.kind == ChannelKind::squeezing ? squeezing_qfi(config, t, regime, options)
                                                         : mixing_qfi(config, t, regime, options);
}

double qfi_exact_theta_derivative(const InterferometerConfig& config, double step) {
    require_closed_form_channel(config);
    if (!(step > 0.0)) {
        throw std::invalid_argument("qfi_exact_theta_derivative: step must be positive");
    }
    Terms t = make_terms(config);
    const double theta = t.theta;
    const bool squeezing = config.channel.kind == ChannelKind::squeezing;
    return richardson_scalar(
        [&](double x) {
            set_theta(t, x);
            return squeezing ? squeezing_exact(t) : mixing_exact(t);
        },
        theta, step);
}

SmallSignalMoments small_signal_moments(const InterferometerConfig& config) {
    require_closed_form_channel(config);
    const Terms t = make_terms(config);
    return config.channel.kind == ChannelKind::squeezing ? squeezing_small_signal(t) : mixing_small_signal(t);
}

double f0_closed_form(const InterferometerConfig& config, F0Regime regime, const RegimeOptions& options) {
    require_closed_form_channel(config);
    const Terms t = make_terms(config);
    const RegimeCheck check(config, t, options, to_string(regime));
    const bool squeezing = config.channel.kind == ChannelKind::squeezing;
    const double k2 = sq(t.k);
    switch (regime) {
        case F0Regime::small_signal: {
            const auto m = squeezing ? squeezing_small_signal(t) : mixing_small_signal(t);
            if (!(m.var > 0.0)) {
                throw NumericalError("f0_closed_form: vanishing small-signal variance");
            }
            // ⟨Ŝ⟩ = mean·x², Var = var·x², x = εK/4  ⇒  F0 = K² mean² / (4 var)
            return 0.25 * k2 * sq(m.mean) / m.var;
        }
        case F0Regime::printed_fraction: {
            if (!squeezing) {
                check.fail("only printed for the squeezing channel");
            }
            const double x = (t.n0 * t.eta1 + sq(std::cosh(t.r))) * t.sin2_2t;
            const double y = (1.0 + sq(t.cos2)) * (t.s2r2 * t.eta2 + 1.0);
            return k2 / 16.0 * sq(x + y) / (x + 2.0 * y);
        }
        case F0Regime::large_nbar:
            check.large_nbar();
            return squeezing ? k2 / 16.0 * t.sin2_2t * t.eta1 * t.nbar
                             : 0.25 * k2 * t.sin2 * t.phi1 * t.eta3 * t.nbar;
        case F0Regime::undepleted_large_r:
            check.undepleted_angle();
            if (squeezing) {
                check.squeezing_optimal_tritter_phase();
            } else {
                check.mixing_optimal_tritter_phase();
            }
            return pumped_qfi_formula(t.k, t.theta, t.n0, t.n);
    }
    throw std::invalid_argument("f0_closed_form: unknown regime");
}

double optimal_tritter_angle(double total_particles, double side_particles, TurningPointMode mode) {
    const double nbar = total_particles;
    const double n = side_particles;
    if (!(n > 0.0) || !(nbar > n)) {
        throw std::invalid_argument("optimal_tritter_angle: need total > side > 0");
    }
    const double root = std::sqrt(n * (n + 2.0));
    double theta = 0.0;
    if (mode == TurningPointMode::exact) {
        const double z = (n * (n + 4.0) - 2.0 * nbar) / (n * (2.0 * nbar - 3.0 * n - 1.0) + 2.0 * (nbar - n) * root);
        if (!(z >= -1.0 && z <= 1.0)) {
            throw NumericalError("optimal_tritter_angle: z_t = " + std::to_string(z) + " outside [-1, 1]");
        }
        theta = 0.5 * std::acos(z);
    } else {
        const double arg = n + root;  // csc⁻¹(arg) = asin(1/arg)
        if (!(arg >= 1.0)) {
            throw NumericalError("optimal_tritter_angle: approximation needs N + sqrt(N(N+2)) >= 1");
        }
        theta = 0.25 * kPi + 0.5 * std::asin(1.0 / arg);
    }
    return theta;
}

Moments number_sum_moments(const GaussianState& side_state) {
    const Matrix& s = side_state.covariance();
    const Vector& d = side_state.displacement();
    const double two_n = 2.0 * static_cast<double>(side_state.n_modes());
    return {0.25 * (s.trace() + d.squaredNorm() - two_n), 0.125 * ((s * s).trace() + 2.0 * d.dot(s * d) - two_n)};
}

Moments heterodyne_moments(const GaussianState& state) {
    if (state.n_modes() != 2) {
        throw std::invalid_argument("heterodyne_moments: expected a two-mode state");
    }
    const Eigen::Vector4d jz(1.0, 1.0, -1.0, -1.0);
    const Matrix sj = state.covariance() * jz.asDiagonal();
    const Vector& d = state.displacement();
    const Vector jd = jz.asDiagonal() * d;
    return {0.25 * (sj.trace() + d.dot(jd)), 0.125 * ((sj * sj).trace() + 2.0 * jd.dot(state.covariance() * jd) - 4.0)};
}

namespace {

struct MomentDerivatives {
    Moments at;
    double mean_slope = 0.0;
    double std_slope = 0.0;  // ∂_ε √Var
};

MomentDerivatives moment_derivatives(const InterferometerConfig& config, double eps0, FiniteDifference fd) {
    check_step(fd);
    // ⟨Ŝ⟩ is even in ε, so its slope vanishes identically at ε = 0.
    if (!(eps0 > 0.0)) {
        throw std::invalid_argument("number-sum sensitivity: eps0 must be > 0");
    }
    config.validate();
    auto moments = [&](double e) { return number_sum_moments(side_modes_output(config, e)); };
    MomentDerivatives out;
    out.at = moments(eps0);
    out.mean_slope = richardson_scalar([&](double e) { return moments(e).mean; }, eps0, fd.step);
    out.std_slope = richardson_scalar([&](double e) { return std::sqrt(std::max(moments(e).var, 0.0)); }, eps0, fd.step);
    if (!std::isfinite(out.mean_slope) || !std::isfinite(out.std_slope)) {
        throw NumericalError("number-sum derivatives are not finite");
    }
    return out;
}

}  // namespace

Sensitivity sensitivity_number_sum(const InterferometerConfig& config, double eps0, FiniteDifference fd) {
    const auto m = moment_derivatives(config, eps0, fd);
    if (!(m.at.var > 0.0)) {
        throw NumericalError("sensitivity_number_sum: number-sum variance vanishes at eps0");
    }
    const double slope2 = m.mean_slope * m.mean_slope;
    // Below this the slope is rounding noise relative to the moments themselves.
    if (!(slope2 > 1e-24 * std::max(1.0, m.at.var))) {
        throw NumericalError("sensitivity_number_sum: d<S>/d(eps) vanishes; measurement insensitive at eps0");
    }
    return {m.at.var / slope2, slope2 / m.at.var};
}

double fisher_from_moments(const InterferometerConfig& config, double eps0, FiniteDifference fd) {
    const auto m = moment_derivatives(config, eps0, fd);
    if (!(m.at.var > 0.0)) {
        throw NumericalError("fisher_from_moments: zero variance");
    }
    return (m.mean_slope * m.mean_slope + 2.0 * m.std_slope * m.std_slope) / m.at.var;
}

MetrologyReport evaluate_metrology(const InterferometerConfig& config, const ReportOptions& options) {
    MetrologyReport report;
    report.h_numeric = qfi_numeric(config, options.qfi_eps0, options.fd);
    if (config.channel.kind != ChannelKind::phase) {
        report.h_closed_form = qfi_closed_form(config, QfiRegime::exact);
        report.regime_labels.emplace_back(std::string("qfi:") + to_string(QfiRegime::exact));
    }
    const auto m = moment_derivatives(config, options.sensitivity_eps0, options.fd);
    report.mean_s = m.at.mean;
    report.var_s = m.at.var;
    report.f0 = m.at.var > 0.0 ? m.mean_slope * m.mean_slope / m.at.var : 0.0;
    if (options.with_turning_point) {
        const auto pops = pump_depletion(config.total_particles, config.squeezing);
        report.theta_t = optimal_tritter_angle(config.total_particles, pops.side, TurningPointMode::exact);
        report.regime_labels.emplace_back("theta_t:exact");
    }
    return report;
}

}  // namespace su11
