#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "su11/gw_detector.hpp"
#include "su11/metrology.hpp"
#include "su11/pipeline.hpp"

namespace su11::cli {

/// Invalid configuration. `line` is 0 when the problem is not tied to a line.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& source, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// One swept parameter: either `range <min> <max> <count>` (inclusive,
/// evenly spaced) or `list <v1> <v2> ...`.
struct SweepAxis {
    std::string name;
    std::vector<double> values;
};

struct Outputs {
    bool h_numeric = true;
    bool h_closed = true;
    bool f0 = true;
    bool moments = true;
    bool theta_t = false;
};

enum class Format { csv, json };

struct Numerics {
    double fd_step = 1e-4;
    double qfi_eps0 = 0.0;
    double eps0 = 1e-3;  ///< sensitivity evaluation point
    std::size_t workers = 1;
    std::size_t grid_cap = 1'000'000;
};

struct SweepSpec {
    InterferometerConfig base;
    Numerics numerics;
    std::vector<SweepAxis> axes;
    Outputs outputs;
    std::optional<std::filesystem::path> output_path;
    Format format = Format::csv;
    std::optional<GwDetectorParams> gw;

    std::size_t grid_size() const;
};

/// Names accepted in a [sweep] block.
const std::vector<std::string>& sweepable_parameters();

/// Parses sectioned key = value text. `source` only labels diagnostics.
SweepSpec parse_config_text(const std::string& text, const std::string& source = "<config>");
SweepSpec parse_config(const std::filesystem::path& path);

Format parse_format(const std::string& name);

/// Sets one sweepable parameter on a config/numerics pair.
void apply_parameter(const std::string& name, double value, InterferometerConfig& config, Numerics& numerics);

using Cell = std::variant<std::monostate, double, std::string>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Evaluates every grid point; row order is lexicographic in the axes
/// (last axis fastest) whatever the worker count. Row failures land in the
/// error column.
Table run_sweep(const SweepSpec& spec);

/// Single-point table for the base configuration (no sweep axes).
Table run_point(const SweepSpec& spec);

/// Δ²ε, F0, F and number-sum moments at the base configuration.
Table sensitivity_table(const SweepSpec& spec);

/// Original vs pumped-up comparison for the [gw] block.
Table gw_compare_table(const GwDetectorParams& params, std::vector<std::string>* warnings = nullptr);

std::string to_csv(const Table& table);
std::string to_json(const Table& table);
std::string render(const Table& table, Format format);

/// Writes the table; throws std::runtime_error if the path is unwritable.
void emit(const Table& table, Format format, const std::filesystem::path& path);

/// Environment variable that relocates relative output paths.
inline constexpr const char* kOutputDirEnv = "SU11_OUTPUT_DIR";

std::filesystem::path resolve_output_path(const std::filesystem::path& path);

/// Parses CSV produced by to_csv back into a table (numbers as double,
/// empty cells as monostate, the error column as string).
Table parse_csv(const std::string& text);

}  // namespace su11::cli
