#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "su11/cli.hpp"

namespace su11::cli {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) {
        out.push_back(tok);
    }
    return out;
}

struct Context {
    const std::string& source;
    std::size_t line;

    [[noreturn]] void fail(const std::string& what) const { throw ConfigError(source, line, what); }

    double number(const std::string& key, const std::string& text) const {
        double v = 0.0;
        const char* first = text.data();
        const char* last = first + text.size();
        const auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
            fail("key '" + key + "': expected a finite number, got '" + text + "'");
        }
        return v;
    }

    std::size_t count(const std::string& key, const std::string& text) const {
        const double v = number(key, text);
        if (v < 1.0 || v != std::floor(v)) {
            fail("key '" + key + "': expected a positive integer, got '" + text + "'");
        }
        return static_cast<std::size_t>(v);
    }

    int integer(const std::string& key, const std::string& text) const {
        const double v = number(key, text);
        if (v != std::floor(v) || std::abs(v) > 1e9) {
            fail("key '" + key + "': expected an integer, got '" + text + "'");
        }
        return static_cast<int>(v);
    }

    bool boolean(const std::string& key, const std::string& text) const {
        if (text == "true" || text == "1" || text == "yes") {
            return true;
        }
        if (text == "false" || text == "0" || text == "no") {
            return false;
        }
        fail("key '" + key + "': expected true or false, got '" + text + "'");
    }
};

using Setter = std::function<void(const Context&, const std::string& key, const std::string& value, SweepSpec&)>;
using Section = std::map<std::string, Setter>;

template <typename Field>
Setter real(Field field) {
    return [field](const Context& ctx, const std::string& key, const std::string& value, SweepSpec& spec) {
        field(spec) = ctx.number(key, value);
    };
}

GwDetectorParams& gw(SweepSpec& spec) {
    if (!spec.gw) {
        spec.gw.emplace();
    }
    return *spec.gw;
}

ChannelKind parse_kind(const Context& ctx, const std::string& value) {
    if (value == "squeezing") return ChannelKind::squeezing;
    if (value == "mode_mixing") return ChannelKind::mode_mixing;
    if (value == "phase") return ChannelKind::phase;
    ctx.fail("channel kind must be squeezing, mode_mixing or phase, got '" + value + "'");
}

const std::map<std::string, Section>& sections() {
    static const std::map<std::string, Section> table = {
        {"interferometer",
         {
             {"total_particles", real([](SweepSpec& s) -> double& { return s.base.total_particles; })},
             {"squeezing", real([](SweepSpec& s) -> double& { return s.base.squeezing; })},
             {"squeezing_phase", real([](SweepSpec& s) -> double& { return s.base.squeezing_phase; })},
             {"tritter_angle", real([](SweepSpec& s) -> double& { return s.base.tritter_angle; })},
             {"tritter_phase", real([](SweepSpec& s) -> double& { return s.base.tritter_phase; })},
             {"pump_phase", real([](SweepSpec& s) -> double& { return s.base.pump_phase; })},
         }},
        {"channel",
         {
             {"kind", [](const Context& c, const std::string&, const std::string& v,
                         SweepSpec& s) { s.base.channel.kind = parse_kind(c, v); }},
             {"strength", real([](SweepSpec& s) -> double& { return s.base.channel.strength; })},
             {"phase", real([](SweepSpec& s) -> double& { return s.base.channel.phase; })},
             {"epsilon", real([](SweepSpec& s) -> double& { return s.base.channel.epsilon; })},
         }},
        {"numerics",
         {
             {"fd_step", real([](SweepSpec& s) -> double& { return s.numerics.fd_step; })},
             {"qfi_eps0", real([](SweepSpec& s) -> double& { return s.numerics.qfi_eps0; })},
             {"eps0", real([](SweepSpec& s) -> double& { return s.numerics.eps0; })},
             {"workers", [](const Context& c, const std::string& k, const std::string& v,
                            SweepSpec& s) { s.numerics.workers = c.count(k, v); }},
             {"grid_cap", [](const Context& c, const std::string& k, const std::string& v,
                             SweepSpec& s) { s.numerics.grid_cap = c.count(k, v); }},
         }},
        {"outputs",
         {
             {"h_numeric", [](const Context& c, const std::string& k, const std::string& v,
                              SweepSpec& s) { s.outputs.h_numeric = c.boolean(k, v); }},
             {"h_closed", [](const Context& c, const std::string& k, const std::string& v,
                             SweepSpec& s) { s.outputs.h_closed = c.boolean(k, v); }},
             {"f0", [](const Context& c, const std::string& k, const std::string& v,
                       SweepSpec& s) { s.outputs.f0 = c.boolean(k, v); }},
             {"moments", [](const Context& c, const std::string& k, const std::string& v,
                            SweepSpec& s) { s.outputs.moments = c.boolean(k, v); }},
             {"theta_t", [](const Context& c, const std::string& k, const std::string& v,
                            SweepSpec& s) { s.outputs.theta_t = c.boolean(k, v); }},
         }},
        {"output",
         {
             {"path", [](const Context&, const std::string&, const std::string& v,
                         SweepSpec& s) { s.output_path = v; }},
             {"format", [](const Context& c, const std::string&, const std::string& v, SweepSpec& s) {
                  try {
                      s.format = parse_format(v);
                  } catch (const std::invalid_argument& e) {
                      c.fail(e.what());
                  }
              }},
         }},
        {"gw",
         {
             {"mode_n", [](const Context& c, const std::string& k, const std::string& v,
                           SweepSpec& s) { gw(s).mode_n = c.integer(k, v); }},
             {"mode_m", [](const Context& c, const std::string& k, const std::string& v,
                           SweepSpec& s) { gw(s).mode_m = c.integer(k, v); }},
             {"omega_n", real([](SweepSpec& s) -> double& { return gw(s).omega_n; })},
             {"omega_m", real([](SweepSpec& s) -> double& { return gw(s).omega_m; })},
             {"sound_speed", real([](SweepSpec& s) -> double& { return gw(s).sound_speed; })},
             {"atom_mass", real([](SweepSpec& s) -> double& { return gw(s).atom_mass; })},
             {"hbar", real([](SweepSpec& s) -> double& { return gw(s).hbar; })},
             {"interaction_time", real([](SweepSpec& s) -> double& { return gw(s).interaction_time; })},
             {"epsilon", real([](SweepSpec& s) -> double& { return gw(s).epsilon; })},
             {"gw_frequency", real([](SweepSpec& s) -> double& { return gw(s).gw_frequency; })},
             {"resonance", [](const Context& c, const std::string&, const std::string& v, SweepSpec& s) {
                  if (v == "sum") {
                      gw(s).resonance = Resonance::sum;
                  } else if (v == "difference") {
                      gw(s).resonance = Resonance::difference;
                  } else {
                      c.fail("resonance must be sum or difference, got '" + v + "'");
                  }
              }},
             {"resonance_tolerance", real([](SweepSpec& s) -> double& { return gw(s).resonance_tolerance; })},
             {"total_particles", real([](SweepSpec& s) -> double& { return gw(s).total_particles; })},
             {"squeezing", real([](SweepSpec& s) -> double& { return gw(s).squeezing; })},
             {"original_squeezing", [](const Context& c, const std::string& k, const std::string& v,
                                       SweepSpec& s) { gw(s).original_squeezing = c.number(k, v); }},
             {"tritter_angle", [](const Context& c, const std::string& k, const std::string& v,
                                  SweepSpec& s) { gw(s).tritter_angle = c.number(k, v); }},
             {"channel_phase", real([](SweepSpec& s) -> double& { return gw(s).channel_phase; })},
             {"depletion_ratio", real([](SweepSpec& s) -> double& { return gw(s).depletion_ratio; })},
             {"detectors", real([](SweepSpec& s) -> double& { return gw(s).detectors; })},
             {"integration_time", real([](SweepSpec& s) -> double& { return gw(s).integration_time; })},
         }},
    };
    return table;
}

SweepAxis parse_axis(const Context& ctx, const std::string& name, const std::string& value) {
    const auto& names = sweepable_parameters();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        ctx.fail("unknown sweep parameter '" + name + "'");
    }
    const auto tokens = split_ws(value);
    if (tokens.empty()) {
        ctx.fail("sweep '" + name + "': expected 'range <min> <max> <count>' or 'list <values...>'");
    }
    SweepAxis axis{name, {}};
    if (tokens[0] == "range") {
        if (tokens.size() != 4) {
            ctx.fail("sweep '" + name + "': range needs exactly <min> <max> <count>");
        }
        const double lo = ctx.number(name, tokens[1]);
        const double hi = ctx.number(name, tokens[2]);
        const std::size_t n = ctx.count(name, tokens[3]);
        if (n > 1'000'000'000) {
            ctx.fail("sweep '" + name + "': count too large");
        }
        axis.values.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            axis.values.push_back(n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
        }
        if (n > 1) {
            axis.values.back() = hi;
        }
    } else if (tokens[0] == "list") {
        if (tokens.size() < 2) {
            ctx.fail("sweep '" + name + "': list needs at least one value");
        }
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            axis.values.push_back(ctx.number(name, tokens[i]));
        }
    } else {
        ctx.fail("sweep '" + name + "': expected 'range' or 'list', got '" + tokens[0] + "'");
    }
    return axis;
}

}  // namespace

ConfigError::ConfigError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}

std::size_t SweepSpec::grid_size() const {
    std::size_t n = 1;
    for (const auto& axis : axes) {
        if (axis.values.empty()) {
            return 0;
        }
        if (n > std::numeric_limits<std::size_t>::max() / axis.values.size()) {
            return std::numeric_limits<std::size_t>::max();
        }
        n *= axis.values.size();
    }
    return n;
}

const std::vector<std::string>& sweepable_parameters() {
    static const std::vector<std::string> names = {
        "total_particles", "squeezing",        "squeezing_phase", "tritter_angle", "tritter_phase", "pump_phase",
        "channel_strength", "channel_phase", "channel_epsilon", "fd_step",        "qfi_eps0",      "eps0",
    };
    return names;
}

void apply_parameter(const std::string& name, double value, InterferometerConfig& c, Numerics& n) {
    if (name == "total_particles") c.total_particles = value;
    else if (name == "squeezing") c.squeezing = value;
    else if (name == "squeezing_phase") c.squeezing_phase = value;
    else if (name == "tritter_angle") c.tritter_angle = value;
    else if (name == "tritter_phase") c.tritter_phase = value;
    else if (name == "pump_phase") c.pump_phase = value;
    else if (name == "channel_strength") c.channel.strength = value;
    else if (name == "channel_phase") c.channel.phase = value;
    else if (name == "channel_epsilon") c.channel.epsilon = value;
    else if (name == "fd_step") n.fd_step = value;
    else if (name == "qfi_eps0") n.qfi_eps0 = value;
    else if (name == "eps0") n.eps0 = value;
    else throw std::invalid_argument("unknown parameter '" + name + "'");
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw std::invalid_argument("format must be csv or json, got '" + name + "'");
}

SweepSpec parse_config_text(const std::string& text, const std::string& source) {
    SweepSpec spec;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::set<std::string> seen;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const Context ctx{source, lineno};
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                ctx.fail("malformed section header '" + line + "'");
            }
            section = trim(std::string_view(line).substr(1, line.size() - 2));
            if (section != "sweep" && !sections().count(section)) {
                ctx.fail("unknown section [" + section + "]");
            }
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            ctx.fail("expected 'key = value', got '" + line + "'");
        }
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (section.empty()) {
            ctx.fail("key '" + key + "' appears before any [section]");
        }
        if (key.empty() || value.empty()) {
            ctx.fail("empty key or value");
        }
        if (!seen.insert(section + "." + key).second) {
            ctx.fail("duplicate key '" + key + "' in [" + section + "]");
        }
        if (section == "sweep") {
            spec.axes.push_back(parse_axis(ctx, key, value));
            continue;
        }
        const auto& keys = sections().at(section);
        const auto it = keys.find(key);
        if (it == keys.end()) {
            ctx.fail("unknown key '" + key + "' in [" + section + "]");
        }
        it->second(ctx, key, value, spec);
    }

    const Context whole{source, 0};
    if (!(spec.numerics.fd_step > 0.0)) {
        whole.fail("numerics.fd_step must be positive");
    }
    if (spec.numerics.qfi_eps0 < 0.0 || spec.numerics.eps0 < 0.0) {
        whole.fail("numerics eps0 values must be >= 0");
    }
    if (spec.grid_size() > spec.numerics.grid_cap) {
        whole.fail("sweep grid has " + std::to_string(spec.grid_size()) + " points, cap is " +
                   std::to_string(spec.numerics.grid_cap));
    }
    try {
        spec.base.validate();
        if (spec.gw) {
            spec.gw->validate();
        }
    } catch (const std::invalid_argument& e) {
        whole.fail(e.what());
    }
    return spec;
}

SweepSpec parse_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError(path.string(), 0, "cannot open config file");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path.string());
}

}  // namespace su11::cli
