#include <cstdlib>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "su11/cli.hpp"
#include "su11/validation.hpp"

namespace {

enum Exit { kOk = 0, kConfigError = 1, kNumericalError = 2 };

struct Flags {
    std::string config;
    std::string out;
    std::string format;
    std::optional<std::size_t> workers;
    std::optional<double> fd_step;
    std::optional<double> eps0;
};

su11::cli::SweepSpec load(const Flags& flags) {
    auto spec = su11::cli::parse_config(flags.config);
    if (flags.workers) {
        if (*flags.workers == 0) {
            throw su11::cli::ConfigError("--workers", 0, "must be >= 1");
        }
        spec.numerics.workers = *flags.workers;
    }
    if (flags.fd_step) {
        if (!(*flags.fd_step > 0.0)) {
            throw su11::cli::ConfigError("--fd-step", 0, "must be positive");
        }
        spec.numerics.fd_step = *flags.fd_step;
    }
    if (flags.eps0) {
        if (!(*flags.eps0 >= 0.0)) {
            throw su11::cli::ConfigError("--eps0", 0, "must be >= 0");
        }
        spec.numerics.eps0 = *flags.eps0;
    }
    if (!flags.format.empty()) {
        try {
            spec.format = su11::cli::parse_format(flags.format);
        } catch (const std::invalid_argument& e) {
            throw su11::cli::ConfigError("--format", 0, e.what());
        }
    }
    if (!flags.out.empty()) {
        spec.output_path = flags.out;
    }
    return spec;
}

void write(const su11::cli::Table& table, const su11::cli::SweepSpec& spec) {
    if (spec.output_path) {
        su11::cli::emit(table, spec.format, *spec.output_path);
    } else {
        std::cout << su11::cli::render(table, spec.format);
    }
}

// Single-point commands turn a row-level failure into exit code 2.
int first_row_status(const su11::cli::Table& table) {
    const auto& row = table.rows.front();
    if (const auto* err = std::get_if<std::string>(&row.back()); err && !err->empty()) {
        std::cerr << "numerical error: " << *err << '\n';
        return kNumericalError;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pumped-up SU(1,1) interferometer metrology"};
    app.require_subcommand(1);
    Flags flags;

    auto add_common = [&](CLI::App* sub, bool needs_config) {
        auto* opt = sub->add_option("--config", flags.config, "Configuration file");
        if (needs_config) {
            opt->required()->check(CLI::ExistingFile);
        }
        sub->add_option("--out", flags.out, "Output file (stdout if omitted)");
        sub->add_option("--format", flags.format, "csv or json");
        sub->add_option("--workers", flags.workers, "Worker threads for sweeps");
        sub->add_option("--fd-step", flags.fd_step, "Finite-difference step h");
        sub->add_option("--eps0", flags.eps0, "Evaluation point for the sensitivity");
    };

    auto* qfi = app.add_subcommand("qfi", "QFI, F0 and number-sum moments at one point");
    auto* sens = app.add_subcommand("sensitivity", "Number-sum sensitivity and Fisher information");
    auto* sweep = app.add_subcommand("sweep", "Evaluate a parameter grid");
    auto* gw = app.add_subcommand("gw-compare", "Original vs pumped-up detector comparison");
    auto* validate = app.add_subcommand("validate", "Run the oracle checks");
    for (auto* sub : {qfi, sens, sweep, gw}) {
        add_common(sub, true);
    }
    std::vector<int> criteria;
    bool all = false;
    validate->add_option("--criterion", criteria, "Criterion ids (default: 1 7 8)")->check(CLI::Range(1, 8));
    validate->add_flag("--all", all, "Run every criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfigError;
    }

    try {
        if (validate->parsed()) {
            if (all) {
                criteria.resize(8);
                std::iota(criteria.begin(), criteria.end(), 1);
            } else if (criteria.empty()) {
                criteria = {1, 7, 8};
            }
            bool ok = true;
            for (const auto& r : su11::run_criteria(criteria)) {
                std::cout << su11::format_result(r) << '\n';
                ok = ok && r.passed;
            }
            return ok ? kOk : kNumericalError;
        }

        const auto spec = load(flags);
        if (qfi->parsed()) {
            const auto table = su11::cli::run_point(spec);
            write(table, spec);
            return first_row_status(table);
        }
        if (sens->parsed()) {
            write(su11::cli::sensitivity_table(spec), spec);
            return kOk;
        }
        if (sweep->parsed()) {
            write(su11::cli::run_sweep(spec), spec);
            return kOk;
        }
        if (gw->parsed()) {
            if (!spec.gw) {
                throw su11::cli::ConfigError(flags.config, 0, "gw-compare needs a [gw] section");
            }
            std::vector<std::string> warnings;
            const auto table = su11::cli::gw_compare_table(*spec.gw, &warnings);
            for (const auto& w : warnings) {
                std::cerr << "warning: " << w << '\n';
            }
            write(table, spec);
            return kOk;
        }
    } catch (const su11::cli::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const su11::NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << '\n';
        return kNumericalError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kNumericalError;
    }
    return kOk;
}
