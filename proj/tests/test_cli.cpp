#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "su11/cli.hpp"
#include "support.hpp"

using namespace su11;
using namespace su11::cli;

namespace {

const char* kThetaSweep = R"([interferometer]
total_particles = 1e6
squeezing = 2
squeezing_phase = 1.5707963267948966
tritter_phase = 0.7853981633974483

[channel]
kind = squeezing
strength = 1

[sweep]
tritter_angle = range 0 1.5707963267948966 50
)";

std::size_t column(const Table& t, const std::string& name) {
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (t.columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range(name);
}

double number(const Cell& c) { return std::get<double>(c); }

std::filesystem::path temp_dir() {
    auto dir = std::filesystem::temp_directory_path() / "su11_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST(ConfigParse, MinimalFileUsesDefaults) {
    const auto spec = parse_config_text("[channel]\nkind = mode_mixing\n[interferometer]\nsqueezing = 1\n");
    EXPECT_EQ(spec.base.channel.kind, ChannelKind::mode_mixing);
    EXPECT_EQ(spec.base.squeezing, 1.0);
    const InterferometerConfig defaults;
    EXPECT_EQ(spec.base.total_particles, defaults.total_particles);
    EXPECT_EQ(spec.base.tritter_angle, defaults.tritter_angle);
    EXPECT_EQ(spec.base.channel.strength, 1.0);
    EXPECT_EQ(spec.numerics.fd_step, 1e-4);
    EXPECT_EQ(spec.numerics.workers, 1u);
    EXPECT_EQ(spec.format, Format::csv);
    EXPECT_TRUE(spec.axes.empty());
    EXPECT_EQ(spec.grid_size(), 1u);
}

TEST(ConfigParse, UnknownKeyNamesKeyAndLine) {
    try {
        parse_config_text("[interferometer]\nsqueezing = 1\nthetaa = 0.3\n", "bad.cfg");
        FAIL();
    } catch (const ConfigError& e) {
        EXPECT_EQ(e.line(), 3u);
        const std::string msg = e.what();
        EXPECT_NE(msg.find("thetaa"), std::string::npos);
        EXPECT_NE(msg.find("bad.cfg:3"), std::string::npos);
    }
}

TEST(ConfigParse, RejectsMalformedInput) {
    EXPECT_THROW(parse_config_text("[interferometer]\nsqueezing = 1\nsqueezing = 2\n"), ConfigError);
    EXPECT_THROW(parse_config_text("squeezing = 1\n"), ConfigError);
    EXPECT_THROW(parse_config_text("[nonsense]\nx = 1\n"), ConfigError);
    EXPECT_THROW(parse_config_text("[interferometer]\nsqueezing = abc\n"), ConfigError);
    EXPECT_THROW(parse_config_text("[sweep]\ntritter_angle = range 0 1\n"), ConfigError);
    EXPECT_THROW(parse_config_text("[sweep]\ntritter_angle = range 0 1 0\n"), ConfigError);
    EXPECT_THROW(parse_config_text("[sweep]\nbogus = list 1 2\n"), ConfigError);
    EXPECT_THROW(parse_config_text("[channel]\nkind = laser\n"), ConfigError);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(ConfigParse, SweepAxes) {
    const auto spec = parse_config_text(kThetaSweep);
    ASSERT_EQ(spec.axes.size(), 1u);
    EXPECT_EQ(spec.axes[0].name, "tritter_angle");
    ASSERT_EQ(spec.axes[0].values.size(), 50u);
    EXPECT_EQ(spec.axes[0].values.front(), 0.0);
    EXPECT_NEAR(spec.axes[0].values.back(), 0.5 * kPi, 1e-15);
    const auto list = parse_config_text("[sweep]\nqfi_eps0 = list 0 0.01 0.1\n");
    EXPECT_EQ(list.axes[0].values, (std::vector<double>{0.0, 0.01, 0.1}));
}

TEST(ConfigParse, ReadsFileAndReportsMissing) {
    const auto path = temp_dir() / "minimal.cfg";
    std::ofstream(path) << "[channel]\nkind = phase\n";
    EXPECT_EQ(parse_config(path).base.channel.kind, ChannelKind::phase);
    EXPECT_THROW(parse_config(temp_dir() / "missing.cfg"), ConfigError);
}

TEST(Sweep, FiftyRowsWithMaximumNearTurningPoint) {
    const auto spec = parse_config_text(kThetaSweep);
    const auto table = run_sweep(spec);
    ASSERT_EQ(table.rows.size(), 50u);
    const auto h = column(table, "H_numeric");
    const auto th = column(table, "tritter_angle");
    std::size_t best = 0;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (number(table.rows[i][h]) > number(table.rows[best][h])) {
            best = i;
        }
    }
    const double theta_t = optimal_tritter_angle(1e6, test::side_particles(2.0), TurningPointMode::exact);
    const double spacing = 0.5 * kPi / 49.0;
    EXPECT_LE(std::abs(number(table.rows[best][th]) - theta_t), spacing);
}

TEST(Sweep, SinglePointEqualsDirectEvaluation) {
    auto spec = parse_config_text(kThetaSweep);
    spec.axes.clear();
    spec.base.tritter_angle = 0.4;
    const auto table = run_point(spec);
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_EQ(number(table.rows[0][column(table, "H_numeric")]), qfi_numeric(spec.base));
}

TEST(Sweep, QfiIndependentOfEvaluationPoint) {
    auto spec = parse_config_text(kThetaSweep);
    spec.axes = {SweepAxis{"qfi_eps0", {0.0, 0.01, 0.1}}};
    spec.base.tritter_angle = 0.6;
    const auto table = run_sweep(spec);
    const auto h = column(table, "H_numeric");
    for (const auto& row : table.rows) {
        EXPECT_LT(test::rel_err(number(row[h]), number(table.rows[0][h])), 1e-6);
    }
}

TEST(Sweep, DeterministicAcrossWorkerCounts) {
    auto spec = parse_config_text(kThetaSweep);
    spec.axes.push_back(SweepAxis{"squeezing", {1.0, 1.5, 2.0}});
    spec.numerics.workers = 1;
    const auto serial = to_csv(run_sweep(spec));
    spec.numerics.workers = 4;
    EXPECT_EQ(to_csv(run_sweep(spec)), serial);
}

TEST(Sweep, LexicographicOrder) {
    auto spec = parse_config_text("[interferometer]\ntotal_particles = 100\n[sweep]\nsqueezing = list 0.5 1\n"
                                  "tritter_angle = list 0.1 0.2 0.3\n");
    const auto table = run_sweep(spec);
    ASSERT_EQ(table.rows.size(), 6u);
    EXPECT_EQ(table.columns[0], "squeezing");
    EXPECT_EQ(table.columns[1], "tritter_angle");
    EXPECT_EQ(number(table.rows[0][0]), 0.5);
    EXPECT_EQ(number(table.rows[2][1]), 0.3);
    EXPECT_EQ(number(table.rows[3][0]), 1.0);
    EXPECT_EQ(table.columns.back(), "error");
}

TEST(Sweep, RowErrorsDoNotAbort) {
    auto spec = parse_config_text("[interferometer]\ntotal_particles = 10\n[sweep]\nsqueezing = list 0.5 2 1\n");
    const auto table = run_sweep(spec);
    ASSERT_EQ(table.rows.size(), 3u);
    const auto err = column(table, "error");
    EXPECT_TRUE(std::holds_alternative<std::monostate>(table.rows[0][err]));
    ASSERT_TRUE(std::holds_alternative<std::string>(table.rows[1][err]));
    EXPECT_FALSE(std::get<std::string>(table.rows[1][err]).empty());
    EXPECT_TRUE(std::holds_alternative<std::monostate>(table.rows[2][err]));
}

TEST(Sweep, GridCapEnforced) {
    auto spec = parse_config_text(kThetaSweep);
    spec.numerics.grid_cap = 10;
    EXPECT_THROW(run_sweep(spec), std::invalid_argument);
}

TEST(Output, OneRowCsvHasTwoLines) {
    Table t{{"a", "b"}, {{1.0, std::string("x")}}};
    const auto csv = to_csv(t);
    EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Output, CsvRoundTrip) {
    auto spec = parse_config_text(kThetaSweep);
    spec.axes[0].values.resize(5);
    const auto table = run_sweep(spec);
    const auto back = parse_csv(to_csv(table));
    ASSERT_EQ(back.columns, table.columns);
    ASSERT_EQ(back.rows.size(), table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        for (std::size_t j = 0; j < table.columns.size(); ++j) {
            EXPECT_EQ(back.rows[i][j], table.rows[i][j]) << i << "," << j;
        }
    }
    Table quoted{{"error"}, {{std::string("a, \"b\"")}}};
    EXPECT_EQ(std::get<std::string>(parse_csv(to_csv(quoted)).rows[0][0]), "a, \"b\"");
}

TEST(Output, JsonMatchesCsv) {
    auto spec = parse_config_text(kThetaSweep);
    spec.axes[0].values.resize(4);
    const auto table = run_sweep(spec);
    const auto json = nlohmann::json::parse(to_json(table));
    const auto csv = parse_csv(to_csv(table));
    ASSERT_EQ(json.size(), csv.rows.size());
    for (std::size_t i = 0; i < csv.rows.size(); ++i) {
        for (std::size_t j = 0; j < csv.columns.size(); ++j) {
            const auto& v = json[i][csv.columns[j]];
            const auto& c = csv.rows[i][j];
            if (std::holds_alternative<double>(c)) {
                EXPECT_EQ(v.get<double>(), std::get<double>(c));
            } else if (std::holds_alternative<std::monostate>(c)) {
                EXPECT_TRUE(v.is_null());
            }
        }
    }
}

TEST(Output, UnwritablePathThrows) {
    Table t{{"a"}, {{1.0}}};
    EXPECT_THROW(emit(t, Format::csv, "/nonexistent_dir_su11/out.csv"), std::runtime_error);
}

TEST(Output, EnvironmentRelocatesRelativePaths) {
    const auto dir = temp_dir();
    ::setenv(kOutputDirEnv, dir.c_str(), 1);
    EXPECT_EQ(resolve_output_path("out.csv"), dir / "out.csv");
    EXPECT_EQ(resolve_output_path("/abs/out.csv"), std::filesystem::path("/abs/out.csv"));
    Table t{{"a"}, {{1.0}}};
    emit(t, Format::json, resolve_output_path("env.json"));
    EXPECT_TRUE(std::filesystem::exists(dir / "env.json"));
    ::unsetenv(kOutputDirEnv);
    EXPECT_EQ(resolve_output_path("out.csv"), std::filesystem::path("out.csv"));
}

TEST(Tables, SensitivityColumns) {
    auto spec = parse_config_text(kThetaSweep);
    spec.axes.clear();
    spec.base.tritter_angle = 0.5;
    const auto table = sensitivity_table(spec);
    EXPECT_EQ(table.columns, (std::vector<std::string>{"eps0", "delta_sq", "F0", "F", "mean_S", "var_S"}));
    ASSERT_EQ(table.rows.size(), 1u);
    EXPECT_NEAR(number(table.rows[0][1]) * number(table.rows[0][2]), 1.0, 1e-12);
}

TEST(Tables, ApplyParameter) {
    InterferometerConfig c;
    Numerics n;
    apply_parameter("channel_phase", 0.3, c, n);
    apply_parameter("fd_step", 1e-3, c, n);
    EXPECT_EQ(c.channel.phase, 0.3);
    EXPECT_EQ(n.fd_step, 1e-3);
    EXPECT_THROW(apply_parameter("nope", 1.0, c, n), std::invalid_argument);
    EXPECT_EQ(sweepable_parameters().size(), 12u);
}
