#include <array>
#include <atomic>
#include <cmath>
#include <thread>

#include "su11/cli.hpp"

namespace su11::cli {
namespace {

const std::array<const char*, 7> kResultColumns = {"H_numeric", "H_closed", "F0",    "mean_S",
                                                   "var_S",     "theta_t",  "error"};

void note(std::string& errors, const std::string& what, const std::exception& e) {
    if (!errors.empty()) {
        errors += "; ";
    }
    errors += what + ": " + e.what();
}

std::vector<Cell> evaluate(const InterferometerConfig& config, const Numerics& numerics, const Outputs& outputs) {
    std::vector<Cell> cells(kResultColumns.size());
    std::string errors;
    try {
        config.validate();
    } catch (const std::exception& e) {
        note(errors, "config", e);
        cells.back() = errors;
        return cells;
    }
    const FiniteDifference fd{numerics.fd_step};
    if (outputs.h_numeric) {
        try {
            cells[0] = qfi_numeric(config, numerics.qfi_eps0, fd);
        } catch (const std::exception& e) {
            note(errors, "H_numeric", e);
        }
    }
    if (outputs.h_closed && config.channel.kind != ChannelKind::phase) {
        try {
            cells[1] = qfi_closed_form(config, QfiRegime::exact);
        } catch (const std::exception& e) {
            note(errors, "H_closed", e);
        }
    }
    if (outputs.f0) {
        try {
            cells[2] = sensitivity_number_sum(config, numerics.eps0, fd).f0;
        } catch (const std::exception& e) {
            note(errors, "F0", e);
        }
    }
    if (outputs.moments) {
        try {
            const Moments m = number_sum_moments(side_modes_output(config, numerics.eps0));
            cells[3] = m.mean;
            cells[4] = m.var;
        } catch (const std::exception& e) {
            note(errors, "moments", e);
        }
    }
    if (outputs.theta_t) {
        try {
            const auto pops = pump_depletion(config.total_particles, config.squeezing);
            cells[5] = optimal_tritter_angle(config.total_particles, pops.side, TurningPointMode::exact);
        } catch (const std::exception& e) {
            note(errors, "theta_t", e);
        }
    }
    if (!errors.empty()) {
        cells.back() = errors;
    }
    return cells;
}

std::vector<std::string> header(const SweepSpec& spec) {
    std::vector<std::string> cols;
    for (const auto& axis : spec.axes) {
        cols.push_back(axis.name);
    }
    cols.insert(cols.end(), kResultColumns.begin(), kResultColumns.end());
    return cols;
}

}  // namespace

Table run_sweep(const SweepSpec& spec) {
    const std::size_t total = spec.grid_size();
    if (total == 0) {
        throw std::invalid_argument("run_sweep: empty grid");
    }
    if (total > spec.numerics.grid_cap) {
        throw std::invalid_argument("run_sweep: grid exceeds cap");
    }
    Table table;
    table.columns = header(spec);
    table.rows.resize(total);

    auto row_at = [&](std::size_t index) {
        InterferometerConfig config = spec.base;
        Numerics numerics = spec.numerics;
        std::vector<Cell> row(spec.axes.size());
        std::size_t rest = index;
        for (std::size_t a = spec.axes.size(); a-- > 0;) {
            const auto& axis = spec.axes[a];
            const double v = axis.values[rest % axis.values.size()];
            rest /= axis.values.size();
            row[a] = v;
            apply_parameter(axis.name, v, config, numerics);
        }
        auto results = evaluate(config, numerics, spec.outputs);
        row.insert(row.end(), std::make_move_iterator(results.begin()), std::make_move_iterator(results.end()));
        table.rows[index] = std::move(row);
    };

    const std::size_t workers = std::clamp<std::size_t>(spec.numerics.workers, 1, total);
    if (workers == 1) {
        for (std::size_t i = 0; i < total; ++i) {
            row_at(i);
        }
        return table;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < total; i = next++) {
                row_at(i);
            }
        });
    }
    pool.clear();
    return table;
}

Table run_point(const SweepSpec& spec) {
    SweepSpec single = spec;
    single.axes.clear();
    return run_sweep(single);
}

Table sensitivity_table(const SweepSpec& spec) {
    const FiniteDifference fd{spec.numerics.fd_step};
    const double eps0 = spec.numerics.eps0;
    const Sensitivity s = sensitivity_number_sum(spec.base, eps0, fd);
    const double f = fisher_from_moments(spec.base, eps0, fd);
    const Moments m = number_sum_moments(side_modes_output(spec.base, eps0));
    Table table;
    table.columns = {"eps0", "delta_sq", "F0", "F", "mean_S", "var_S"};
    table.rows.push_back({eps0, s.delta_sq, s.f0, f, m.mean, m.var});
    return table;
}

Table gw_compare_table(const GwDetectorParams& params, std::vector<std::string>* warnings) {
    params.validate();
    const PhononXi xi_n = phonon_xi(params.atom_mass, params.sound_speed, params.omega_n, params.hbar);
    const PhononXi xi_m = phonon_xi(params.atom_mass, params.sound_speed, params.omega_m, params.hbar);
    if (warnings) {
        for (const auto* x : {&xi_n, &xi_m}) {
            if (x->warning) {
                warnings->push_back(*x->warning);
            }
        }
    }
    const double coupling = coupling_constant(params.mode_n, params.mode_m, xi_n.value, xi_m.value, params.resonance);
    const ChannelSpec channel = channel_strength(params);
    const SchemeComparison cmp = compare_schemes(params);
    const auto pops = pump_depletion(params.total_particles, params.squeezing);
    auto qcrb = [&](double h) {
        return qcrb_sensitivity(h, params.detectors, params.integration_time, params.interaction_time);
    };
    Table table;
    table.columns = {"xi_n",           "xi_m",        "coupling",   "strength",           "pump_particles",
                     "side_particles", "tritter_angle", "max_tritter_angle", "original_qfi", "pumped_qfi",
                     "pumped_qfi_large_r", "ratio",   "ratio_large_r", "original_delta_eps", "pumped_delta_eps"};
    table.rows.push_back({xi_n.value, xi_m.value, coupling, channel.strength, pops.pump, cmp.side_particles,
                          cmp.tritter_angle, cmp.max_tritter_angle, cmp.original_qfi, cmp.pumped_qfi,
                          cmp.pumped_qfi_large_r, cmp.ratio, cmp.ratio_large_r, qcrb(cmp.original_qfi),
                          qcrb(cmp.pumped_qfi)});
    return table;
}

}  // namespace su11::cli
