#include "su11/validation.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "su11/channels.hpp"
#include "su11/fock.hpp"
#include "su11/gw_detector.hpp"
#include "su11/metrology.hpp"

namespace su11 {
namespace {

double rel_err(double a, double b, double floor = 0.0) {
    const double scale = std::max({std::abs(a), std::abs(b), floor});
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string fmt(const char* pattern, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern, args...);
    return buf;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double side_particles(double r) { return 2.0 * std::sinh(r) * std::sinh(r); }

// ϑ_sq = φ_B + π/2 and 2ϑ = 2ϑ₀ + ϑ_sq − 2φ_B: η₁ = e^{2r}, η₂ = 1.
void squeezing_optimal_phases(InterferometerConfig& c) {
    c.squeezing_phase = c.channel.phase + 0.5 * kPi;
    c.tritter_phase = c.pump_phase + 0.5 * c.squeezing_phase - c.channel.phase;
}

// ϑ = ϑ₀ − ϑ_sq/2 + π/2: η₃ = −e^{2r}.
void mixing_optimal_phases(InterferometerConfig& c) {
    c.tritter_phase = c.pump_phase - 0.5 * c.squeezing_phase + 0.5 * kPi;
}

InterferometerConfig limit_config(ChannelKind kind, double nbar, double r, double theta) {
    InterferometerConfig c;
    c.total_particles = nbar;
    c.squeezing = r;
    c.tritter_angle = theta;
    c.pump_phase = 0.3;
    c.squeezing_phase = 1.1;
    c.tritter_phase = 0.4;
    c.channel.kind = kind;
    c.channel.strength = 1.0;
    c.channel.phase = 0.9;
    return c;
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

Matrix random_gaussian_covariance(std::mt19937_64& rng, std::size_t modes, const Matrix& s) {
    Vector nu(2 * modes);
    for (std::size_t k = 0; k < modes; ++k) {
        nu(2 * k) = nu(2 * k + 1) = uniform(rng, 1.0, 3.0);
    }
    Matrix sigma = s * nu.asDiagonal() * s.transpose();
    return 0.5 * (sigma + sigma.transpose());
}

Vector random_vector(std::mt19937_64& rng, Eigen::Index n) {
    Vector v(n);
    for (Eigen::Index i = 0; i < n; ++i) {
        v(i) = uniform(rng, -2.0, 2.0);
    }
    return v;
}

}  // namespace

InterferometerConfig random_config(ChannelKind kind, std::mt19937_64& rng) {
    InterferometerConfig c;
    c.channel.kind = kind;
    c.channel.strength = 1.0;
    c.squeezing = uniform(rng, 0.0, 2.0);
    c.tritter_angle = uniform(rng, 0.0, 0.5 * kPi);
    c.pump_phase = uniform(rng, 0.0, 2.0 * kPi);
    c.squeezing_phase = uniform(rng, 0.0, 2.0 * kPi);
    c.tritter_phase = uniform(rng, 0.0, 2.0 * kPi);
    c.channel.phase = uniform(rng, 0.0, 2.0 * kPi);
    const double n = side_particles(c.squeezing);
    do {
        c.total_particles = std::pow(10.0, uniform(rng, 1.0, 6.0));
    } while (c.total_particles <= 1.01 * n);
    return c;
}

CriterionResult check_closed_form_equivalence(const ValidationOptions& o) {
    Timer timer;
    CriterionResult res{1, "closed-form equivalence", false, {}, 0.0};
    std::mt19937_64 rng(o.seed);
    double worst = 0.0;
    std::size_t count = 0;
    std::size_t errors = 0;
    for (auto kind : {ChannelKind::squeezing, ChannelKind::mode_mixing}) {
        for (std::size_t i = 0; i < o.configs_per_channel; ++i) {
            const auto c = random_config(kind, rng);
            try {
                worst = std::max(worst, rel_err(qfi_numeric(c), qfi_closed_form(c, QfiRegime::exact)));
                ++count;
            } catch (const std::exception&) {
                ++errors;
            }
        }
    }
    res.passed = errors == 0 && count >= 500 && worst < 1e-6;
    res.detail = fmt("max rel err %.3e over %zu configs (both channels), %zu evaluation errors", worst, count, errors);
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_limit_chain(const ValidationOptions& o) {
    Timer timer;
    CriterionResult res{2, "limit-chain consistency", false, {}, 0.0};
    std::mt19937_64 rng(o.seed + 2);
    std::ostringstream failures;
    std::size_t failed = 0;

    // Algebraic: θ = 0 squeezing limit over random parameters.
    double algebraic = 0.0;
    for (std::size_t i = 0; i < 200; ++i) {
        auto c = random_config(ChannelKind::squeezing, rng);
        c.tritter_angle = 0.0;
        algebraic = std::max(algebraic, rel_err(qfi_closed_form(c, QfiRegime::exact),
                                                qfi_closed_form(c, QfiRegime::theta_zero)));
    }
    if (algebraic > 1e-12) {
        ++failed;
        failures << " squeezing/theta_zero " << algebraic;
    }

    struct Case {
        ChannelKind kind;
        QfiRegime regime;
        double theta;
        bool optimal;
        double channel_phase;
    };
    constexpr double kNbar = 1e8;
    constexpr double kR = 3.0;
    const double theta_t =
        optimal_tritter_angle(kNbar, side_particles(kR), TurningPointMode::exact);
    const auto sq = ChannelKind::squeezing;
    const auto mm = ChannelKind::mode_mixing;
    const std::vector<Case> cases = {
        {sq, QfiRegime::theta_half_pi, 0.5 * kPi, true, 0.9},
        {sq, QfiRegime::turning_point, theta_t, true, 0.9},
        {sq, QfiRegime::turning_point_large_r, theta_t, true, 0.9},
        {sq, QfiRegime::large_nbar, 0.5, false, 0.9},
        {sq, QfiRegime::large_nbar_large_n, 0.5, true, 0.9},
        {sq, QfiRegime::undepleted, 0.05, true, 0.9},
        {sq, QfiRegime::undepleted_large_r, 0.05, true, 0.9},
        {mm, QfiRegime::theta_zero, 0.0, false, 0.9},
        {mm, QfiRegime::theta_half_pi_phase_half_pi, 0.5 * kPi, false, 0.5 * kPi},
        {mm, QfiRegime::theta_half_pi_phase_zero, 0.5 * kPi, true, 0.0},
        {mm, QfiRegime::theta_half_pi_phase_zero_large_r, 0.5 * kPi, true, 0.0},
        {mm, QfiRegime::large_nbar, 0.5, false, 0.9},
        {mm, QfiRegime::large_nbar_large_n, 0.5, true, 0.9},
        {mm, QfiRegime::undepleted, 0.05, true, 0.9},
        {mm, QfiRegime::undepleted_large_r, 0.05, true, 0.9},
    };
    double asymptotic = 0.0;
    for (const auto& k : cases) {
        auto c = limit_config(k.kind, kNbar, kR, k.theta);
        c.channel.phase = k.channel_phase;
        if (k.optimal) {
            k.kind == sq ? squeezing_optimal_phases(c) : mixing_optimal_phases(c);
        }
        try {
            const double err = rel_err(qfi_closed_form(c, QfiRegime::exact), qfi_closed_form(c, k.regime));
            asymptotic = std::max(asymptotic, err);
            if (err > 0.02) {
                ++failed;
                failures << ' ' << to_string(k.kind) << '/' << to_string(k.regime) << ' ' << err;
            }
        } catch (const std::exception& e) {
            ++failed;
            failures << ' ' << to_string(k.kind) << '/' << to_string(k.regime) << " threw: " << e.what();
        }
    }
    res.passed = failed == 0;
    res.detail = fmt("algebraic max rel err %.3e (tol 1e-12); %zu asymptotic regimes, max rel err %.3e (tol 2%%)",
                     algebraic, cases.size(), asymptotic) +
                 (failed ? "; failing:" + failures.str() : std::string());
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_scheme_numbers(const ValidationOptions&) {
    Timer timer;
    CriterionResult res{3, "scheme comparison numbers", false, {}, 0.0};
    constexpr double kPump = 1e6;
    const double original = original_scheme_qfi_np(4.2, 1.0);
    const bool original_ok = rel_err(original, 1.235e6) < 1e-3;

    SchemeInputs parity;
    parity.pump_particles = kPump;
    parity.original_squeezing = 4.2;
    parity.pumped_squeezing = 2.0;
    const auto p = compare_schemes(parity);
    const double parity_literal = pumped_qfi_formula(1.0, std::sqrt(0.094), kPump, side_particles(2.0));
    const bool parity_ok = rel_err(p.pumped_qfi_large_r, original) < 0.01 && rel_err(parity_literal, original) < 0.01;

    SchemeInputs gain = parity;
    gain.pumped_squeezing = 4.2;
    const auto g = compare_schemes(gain);
    const double gain_literal = pumped_qfi_formula(1.0, std::sqrt(0.092), kPump, side_particles(4.2)) / original;
    auto near83 = [](double x) { return std::abs(x - 83.0) <= 2.0; };
    const bool gain_ok = near83(g.ratio_large_r) && near83(gain_literal);

    res.passed = original_ok && parity_ok && gain_ok;
    res.detail = fmt("original H=%.5e; parity r=2 at theta_max^2=%.5f: H=%.5e (theta^2=0.094: %.5e); "
                     "r=4.2 at theta_max^2=%.5f: ratio %.2f (theta^2=0.092: %.2f)",
                     original, p.tritter_angle * p.tritter_angle, p.pumped_qfi_large_r, parity_literal,
                     g.tritter_angle * g.tritter_angle, g.ratio_large_r, gain_literal);
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_max_tritter_angle(const ValidationOptions&) {
    Timer timer;
    CriterionResult res{4, "maximum tritter angle", false, {}, 0.0};
    const double theta = max_tritter_angle(0.0, 0.1);
    const double t2 = theta * theta;
    const double ratio = t2 / std::pow(std::sin(theta), 2);
    res.passed = std::abs(t2 - 0.0938) <= 0.0002 && std::abs(ratio - 1.03) <= 0.005;
    res.detail = fmt("theta^2 = %.6f, theta^2/sin^2 theta = %.5f", t2, ratio);
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_turning_points(const ValidationOptions&) {
    Timer timer;
    CriterionResult res{5, "turning points", false, {}, 0.0};
    constexpr double kNbar = 1e6;
    constexpr double kN = 26.3;
    const double r = std::asinh(std::sqrt(0.5 * kN));
    const double exact = optimal_tritter_angle(kNbar, kN, TurningPointMode::exact);
    const double approx = optimal_tritter_angle(kNbar, kN, TurningPointMode::approx);
    double worst = 0.0;
    for (double theta : {0.0, 0.5 * kPi, exact}) {
        auto c = limit_config(ChannelKind::squeezing, kNbar, r, theta);
        squeezing_optimal_phases(c);
        const double h = qfi_closed_form(c, QfiRegime::exact);
        worst = std::max(worst, std::abs(qfi_exact_theta_derivative(c)) / h);
    }
    const double gap = std::abs(exact - approx);
    res.passed = worst < 1e-6 && gap < 1e-4;
    res.detail = fmt("max |dH/dtheta|/H = %.3e at {0, pi/2, theta_t}; theta_t exact %.7f approx %.7f (gap %.2e)",
                     worst, exact, approx, gap);
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_measurement_optimality(const ValidationOptions& o) {
    Timer timer;
    CriterionResult res{6, "measurement optimality", false, {}, 0.0};

    std::array<double, 2> ratios{};
    bool ratios_ok = true;
    std::size_t idx = 0;
    for (auto kind : {ChannelKind::squeezing, ChannelKind::mode_mixing}) {
        auto c = limit_config(kind, 1e8, 3.0, 0.05);
        kind == ChannelKind::squeezing ? squeezing_optimal_phases(c) : mixing_optimal_phases(c);
        ratios[idx] = sensitivity_number_sum(c).f0 / qfi_numeric(c);
        ratios_ok = ratios_ok && ratios[idx] >= 0.95 && ratios[idx] <= 1.0;
        ++idx;
    }

    std::mt19937_64 rng(o.seed);  // same draws as criterion 1
    std::size_t count = 0;
    std::size_t below_f0 = 0;
    std::size_t above_h = 0;
    std::size_t f0_above_h = 0;
    std::size_t errors = 0;
    double max_f_over_h = 0.0;
    for (auto kind : {ChannelKind::squeezing, ChannelKind::mode_mixing}) {
        for (std::size_t i = 0; i < o.configs_per_channel; ++i) {
            const auto c = random_config(kind, rng);
            try {
                const double h = qfi_numeric(c);
                const double f0 = sensitivity_number_sum(c).f0;
                const double f = fisher_from_moments(c);
                ++count;
                below_f0 += f < f0 ? 1 : 0;
                above_h += f > h * (1.0 + 1e-6) ? 1 : 0;
                f0_above_h += f0 > h * (1.0 + 1e-6) ? 1 : 0;
                max_f_over_h = std::max(max_f_over_h, f / h);
            } catch (const std::exception&) {
                ++errors;
            }
        }
    }
    const bool chain_ok = errors == 0 && below_f0 == 0 && above_h == 0;
    res.passed = ratios_ok && chain_ok;
    res.detail = fmt("F0/H squeezing %.4f, mode mixing %.4f; over %zu configs: F<F0 on %zu, F>H(1+1e-6) on %zu "
                     "(max F/H %.3e), F0>H on %zu, %zu evaluation errors",
                     ratios[0], ratios[1], count, below_f0, above_h, max_f_over_h, f0_above_h, errors);
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_fock_oracle(const ValidationOptions& o) {
    Timer timer;
    CriterionResult res{7, "Fock oracle equivalence", false, {}, 0.0};
    std::mt19937_64 rng(o.seed + 7);
    const FockSpace space{3, o.fock_cutoff};
    constexpr double kEps = 0.3;
    constexpr std::array<std::size_t, 2> kSide{1, 2};
    double worst = 0.0;
    double leakage = 0.0;
    std::size_t checks = 0;
    std::string failure;
    for (std::size_t i = 0; i < o.oracle_configs; ++i) {
        for (auto kind : {ChannelKind::squeezing, ChannelKind::mode_mixing, ChannelKind::phase}) {
            InterferometerConfig c;
            c.channel.kind = kind;
            c.channel.strength = uniform(rng, 0.5, 2.0);
            c.channel.phase = uniform(rng, 0.0, 2.0 * kPi);
            c.squeezing = uniform(rng, 0.0, 0.6);
            c.total_particles = uniform(rng, 0.2, 2.0) + side_particles(c.squeezing);
            c.tritter_angle = uniform(rng, 0.0, 0.5);
            c.tritter_phase = uniform(rng, 0.0, 2.0 * kPi);
            c.pump_phase = uniform(rng, 0.0, 2.0 * kPi);
            c.squeezing_phase = uniform(rng, 0.0, 2.0 * kPi);
            try {
                const auto probe_seq = probe_sequence(c);
                const auto full_seq = interferometer_sequence(c, kEps);
                const FockState probe = prepare_state_fock(probe_seq, space);
                const FockState out = prepare_state_fock(full_seq, space);
                leakage = std::max({leakage, probe.leakage, out.leakage});

                const GaussianState side = side_modes_output(c, kEps);
                const Moments gs = number_sum_moments(side);
                const Moments gh = heterodyne_moments(side);
                const FockMoments fs = number_moments_fock(out, kSide);
                const FockMoments fh = number_difference_moments_fock(out, 1, 2);
                const std::array<double, 5> errs = {
                    rel_err(qfi_numeric(c), generator_variance(probe, c.channel, kSide), 1e-9),
                    rel_err(gs.mean, fs.mean, 1e-9),
                    rel_err(gs.var, fs.var, 1e-9),
                    rel_err(gh.mean, fh.mean, 1e-9),
                    rel_err(gh.var, fh.var, 1e-9),
                };
                worst = std::max(worst, *std::max_element(errs.begin(), errs.end()));
                checks += errs.size();
            } catch (const std::exception& e) {
                failure = e.what();
                worst = std::max(worst, 1.0);
            }
        }
    }
    res.passed = failure.empty() && worst < 1e-3 && leakage < 1e-6;
    res.detail = fmt("%zu comparisons (QFI, number sum, number difference), max rel err %.3e, max leakage %.2e, "
                     "cutoff %zu",
                     checks, worst, leakage, o.fock_cutoff) +
                 (failure.empty() ? std::string() : "; error: " + failure);
    res.seconds = timer.seconds();
    return res;
}

CriterionResult check_structure(const ValidationOptions& o) {
    Timer timer;
    CriterionResult res{8, "structural suite", false, {}, 0.0};
    std::mt19937_64 rng(o.seed + 8);
    double symp = 0.0, inverse = 0.0, purity_gap = 0.0, conservation = 0.0, generator = 0.0;
    const std::size_t n = o.structural_draws;
    auto inv_err = [](const SymplecticOp& a, const SymplecticOp& b) {
        const Matrix prod = (a * b).matrix();
        return (prod - Matrix::Identity(prod.rows(), prod.cols())).cwiseAbs().maxCoeff();
    };
    auto symp_err = [](const Matrix& s) {
        const Matrix omega = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
        return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff();
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double r = uniform(rng, 0.0, 2.0);
        const double theta = uniform(rng, 0.0, 0.5 * kPi);
        const double s = uniform(rng, 0.0, 1.0);
        const double ph = uniform(rng, 0.0, 2.0 * kPi);
        const double ph2 = uniform(rng, 0.0, 2.0 * kPi);

        const auto sq = pumped_two_mode_squeezer(r, ph);
        const auto tr = tritter(theta, ph2);
        const auto sc = squeezing_channel(s, ph);
        const auto mc = mode_mixing_channel(s, ph2);
        const auto pc = phase_channel(ph);
        for (const Matrix* m : {&sq.matrix(), &tr.matrix(), &sc.matrix(), &mc.matrix(), &pc.matrix()}) {
            symp = std::max(symp, symp_err(*m));
        }
        inverse = std::max({inverse, inv_err(sq, pumped_two_mode_squeezer(-r, ph)), inv_err(tr, tritter(-theta, ph2)),
                            inv_err(sc, squeezing_channel(-s, ph)), inv_err(mc, mode_mixing_channel(-s, ph2)),
                            inv_err(pc, phase_channel(-ph))});

        // Mixed 3-mode state through an active chain keeps its purity.
        const SymplecticOp mixer = tr * sq;
        const GaussianState mixed(random_vector(rng, 6), random_gaussian_covariance(rng, 3, mixer.matrix()));
        const SymplecticOp chain = pumped_two_mode_squeezer(-r, ph) * tritter(-theta, ph2) *
                                   embed_on_side_modes(sc) * tr * sq;
        purity_gap = std::max(purity_gap, std::abs(purity(apply_symplectic(mixed, chain)) - purity(mixed)));

        // Passive operations conserve the total occupation.
        for (const SymplecticOp* op : {&tr, &pc}) {
            const double before = mixed.total_occupation();
            conservation = std::max(conservation, rel_err(apply_symplectic(mixed, *op).total_occupation(), before));
        }
        const std::array<std::size_t, 2> side{1, 2};
        const GaussianState pair = reduce_to_modes(mixed, side);
        conservation = std::max(
            conservation, rel_err(apply_symplectic(pair, mc).total_occupation(), pair.total_occupation()));

        generator = std::max(
            generator, (tr.matrix() - tritter_from_generator(theta, ph2).matrix()).cwiseAbs().maxCoeff());
    }
    res.passed = symp < 1e-10 && inverse < 1e-12 && purity_gap < 1e-10 && conservation < 1e-9 && generator < 1e-8;
    res.detail = fmt("%zu draws: symplectic %.2e, inverse %.2e, purity %.2e, passive conservation %.2e, "
                     "tritter vs generator %.2e",
                     n, symp, inverse, purity_gap, conservation, generator);
    res.seconds = timer.seconds();
    return res;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const ValidationOptions& options) {
    using Check = CriterionResult (*)(const ValidationOptions&);
    static const std::array<Check, 8> checks = {
        check_closed_form_equivalence, check_limit_chain,     check_scheme_numbers,         check_max_tritter_angle,
        check_turning_points,          check_measurement_optimality, check_fock_oracle, check_structure,
    };
    std::vector<CriterionResult> out;
    for (int id : ids) {
        if (id < 1 || id > 8) {
            throw std::invalid_argument("criterion id must be in 1..8");
        }
        try {
            out.push_back(checks[static_cast<std::size_t>(id - 1)](options));
        } catch (const std::exception& e) {
            out.push_back({id, "criterion " + std::to_string(id), false, std::string("threw: ") + e.what(), 0.0});
        }
    }
    return out;
}

std::string format_result(const CriterionResult& r) {
    return fmt("%s %d %s: ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str()) + r.detail +
           fmt(" (%.2f s)", r.seconds);
}

}  // namespace su11
