#include "stackgame/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "stackgame/cli/presets.hpp"
#include "stackgame/cli/scenario_file.hpp"
#include "stackgame/leader.hpp"
#include "stackgame/response.hpp"
#include "stackgame/sweep.hpp"

namespace stackgame::cli {

namespace {

constexpr double kCheckTolerance = 1e-12;

struct ScenarioSource {
    std::string path;
    std::string preset;

    void attach(CLI::App* cmd) {
        cmd->add_option("scenario", path, "Scenario JSON file");
        cmd->add_option("--preset", preset, "Built-in scenario instead of a file");
    }

    ScenarioFile load() const {
        if (path.empty() == preset.empty()) {
            throw ScenarioError("", "give exactly one of a scenario path or --preset");
        }
        if (!preset.empty()) {
            auto found = find_preset(preset);
            if (!found) throw ScenarioError("", "unknown preset '" + preset + "'");
            return *found;
        }
        return load_scenario(path);
    }
};

class AxisFlagError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class T>
T parse_number(std::string_view text, std::string_view flag) {
    T value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw AxisFlagError(fmt::format("{}: '{}' is not a valid number", flag, text));
    }
    return value;
}

// name:lo:hi:steps
SweepAxis parse_axis(const std::string& flag, std::string_view name) {
    std::vector<std::string_view> parts;
    std::string_view rest = flag;
    while (true) {
        const auto pos = rest.find(':');
        parts.push_back(rest.substr(0, pos));
        if (pos == std::string_view::npos) break;
        rest.remove_prefix(pos + 1);
    }
    if (parts.size() != 4) {
        throw AxisFlagError(fmt::format("{}: expected name:lo:hi:steps, got '{}'", name, flag));
    }
    const auto param = parse_parameter(parts[0]);
    if (!param) {
        throw AxisFlagError(fmt::format("{}: unknown parameter '{}'", name, parts[0]));
    }
    const auto lo = parse_number<double>(parts[1], name);
    const auto hi = parse_number<double>(parts[2], name);
    const auto steps = parse_number<std::size_t>(parts[3], name);
    if (!std::isfinite(lo) || !std::isfinite(hi) || lo < 0.0 || lo > hi || steps == 0) {
        throw AxisFlagError(
            fmt::format("{}: need 0 <= lo <= hi and steps >= 1, got '{}'", name, flag));
    }
    return SweepAxis{*param, lo, hi, steps};
}

void print_utilities(const Scenario& s, std::ostream& out) {
    for (Strategy st : kStrategies) {
        out << to_string(st) << '='
            << format_real(creator_utility(s.weights, s.creator, s.table, st)) << '\n';
    }
}

int cmd_eval(const ScenarioFile& file, std::ostream& out) {
    const auto& s = file.scenario;
    print_utilities(s, out);
    out << "gap=" << format_real(utility_gap(s.weights, s.creator, s.table)) << '\n';
    return kOk;
}

int cmd_best_response(const ScenarioFile& file, std::ostream& out) {
    const auto& s = file.scenario;
    out << "chosen=" << to_string(best_response(s.weights, s.creator, s.table)) << '\n';
    const auto threshold = switching_delta(s.weights, s.creator.model(), s.table);
    // A negative threshold means Beefing never wins for admissible delta.
    out << "delta_star=" << (threshold && *threshold >= 0.0 ? format_real(*threshold) : "none")
        << '\n';
    if (!s.rule.is_exact()) {
        const auto dist = respond(s.rule, s.weights, s.creator, s.table);
        out << "p_collaboration=" << format_real(dist[Strategy::Collaboration]) << '\n';
        out << "p_beefing=" << format_real(dist[Strategy::Beefing]) << '\n';
    }
    return kOk;
}

int cmd_equilibrium(const ScenarioFile& file, std::ostream& out) {
    const auto& s = file.scenario;
    const auto result =
        stackelberg_solve(file.domain, file.effective_population(), s.rule, s.table);
    out << "alpha=" << format_real(result.weights.alpha()) << '\n';
    out << "beta=" << format_real(result.weights.beta()) << '\n';
    out << "gamma=" << format_real(result.weights.gamma()) << '\n';
    out << "share_collaboration=" << format_real(result.shares[Strategy::Collaboration]) << '\n';
    out << "share_beefing=" << format_real(result.shares[Strategy::Beefing]) << '\n';
    out << "leader_value=" << format_real(result.leader_value) << '\n';
    out << "u_collaboration=" << format_real(result.creator_utility(Strategy::Collaboration))
        << '\n';
    out << "u_beefing=" << format_real(result.creator_utility(Strategy::Beefing)) << '\n';
    out << "grid_index=" << result.grid_index << '\n';
    out << "grid_points=" << result.grid_points_evaluated << '\n';
    return kOk;
}

struct SweepOptions {
    std::string axis1;
    std::string axis2;
    std::string csv_path;
    std::string svg_path;
};

int cmd_sweep(const ScenarioFile& file, const SweepOptions& opts, std::ostream& out,
              std::ostream& err) {
    std::optional<SweepAxis> axis2;
    if (!opts.axis2.empty()) axis2 = parse_axis(opts.axis2, "--axis2");
    if (!opts.svg_path.empty() && !axis2) {
        throw AxisFlagError("--svg needs a two-axis sweep (--axis2)");
    }
    const SweepSpec spec{parse_axis(opts.axis1, "--axis1"), axis2, file.scenario};
    const auto cells = run_sweep(spec);

    auto write = [&](const std::string& path, auto&& emit) {
        std::ofstream sink(path, std::ios::binary | std::ios::trunc);
        if (!sink) {
            err << "error: cannot open " << path << " for writing\n";
            return false;
        }
        try {
            emit(sink);
        } catch (const std::ios_base::failure&) {
            err << "error: failed writing " << path << '\n';
            return false;
        }
        return true;
    };

    if (!write(opts.csv_path, [&](std::ostream& s) { emit_csv(cells, s); })) return kIoError;
    if (!opts.svg_path.empty() &&
        !write(opts.svg_path, [&](std::ostream& s) { emit_region_svg(spec, cells, s); })) {
        return kIoError;
    }

    out << "rows=" << cells.size() << '\n';
    if (spec.axis1().parameter == Parameter::Delta && !spec.axis2()) {
        const auto boundary = region_boundary(spec);
        out << "delta_boundary=" << (boundary ? format_real(*boundary) : "none") << '\n';
    }
    return kOk;
}

int cmd_presets(const std::string& name, std::ostream& out, std::ostream& err) {
    if (name.empty()) {
        for (auto n : preset_names()) out << n << '\n';
        return kOk;
    }
    const auto preset = find_preset(name);
    if (!preset) {
        err << "error: unknown preset '" << name << "'\n";
        return kInvalidInput;
    }
    out << to_json(*preset).dump(2) << '\n';
    return kOk;
}

}  // namespace

int reproduce_paper(const GameTable& table, std::ostream& out) {
    struct Case {
        std::string_view preset;
        double u_collab;
        double u_beef;
        Strategy choice;
    };
    const std::array<Case, 3> cases{{
        {"example1", 16.5, 12.0, Strategy::Collaboration},
        {"example2", 16.5, 7.5, Strategy::Collaboration},
        {"example3", 13.5, 18.5, Strategy::Beefing},
    }};

    auto close = [](double a, double b) { return std::abs(a - b) <= kCheckTolerance; };
    bool all_pass = true;
    auto row = [&](std::string_view check, const std::string& expected,
                   const std::string& actual, bool pass) {
        all_pass = all_pass && pass;
        out << fmt::format("{:<22}{:<18}{:<18}{}\n", check, expected, actual,
                           pass ? "PASS" : "FAIL");
    };

    out << fmt::format("{:<22}{:<18}{:<18}{}\n", "check", "expected", "actual", "status");
    for (const auto& c : cases) {
        auto file = *find_preset(c.preset);
        auto& s = file.scenario;
        s.table = table;
        const double uc = creator_utility(s.weights, s.creator, s.table, Strategy::Collaboration);
        const double ub = creator_utility(s.weights, s.creator, s.table, Strategy::Beefing);
        row(fmt::format("{}.utilities", c.preset),
            fmt::format("{},{}", format_real(c.u_collab), format_real(c.u_beef)),
            fmt::format("{},{}", format_real(uc), format_real(ub)),
            close(uc, c.u_collab) && close(ub, c.u_beef));
        const Strategy chosen = best_response(s.weights, s.creator, s.table);
        row(fmt::format("{}.choice", c.preset), std::string(to_string(c.choice)),
            std::string(to_string(chosen)), chosen == c.choice);
    }
    out << "result=" << (all_pass ? "PASS" : "FAIL") << '\n';
    return all_pass ? kOk : kCheckFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Algorithm-creator Stackelberg game solver", "stackgame"};
    app.require_subcommand(1);

    ScenarioSource eval_src, br_src, eq_src, sweep_src;
    auto* eval = app.add_subcommand("eval", "Creator utility of each strategy and the gap");
    eval_src.attach(eval);
    auto* br = app.add_subcommand("best-response", "Creator best response and switching delta");
    br_src.attach(br);
    auto* eq = app.add_subcommand("equilibrium", "Leader-optimal weights by grid search");
    eq_src.attach(eq);

    auto* sweep = app.add_subcommand("sweep", "Strategy regions over a parameter grid");
    sweep_src.attach(sweep);
    SweepOptions sweep_opts;
    sweep->add_option("--axis1", sweep_opts.axis1, "name:lo:hi:steps")->required();
    sweep->add_option("--axis2", sweep_opts.axis2, "name:lo:hi:steps");
    sweep->add_option("--out", sweep_opts.csv_path, "CSV output path")->required();
    sweep->add_option("--svg", sweep_opts.svg_path, "SVG region map path");

    auto* repro = app.add_subcommand("reproduce-paper", "Check the built-in worked examples");

    std::string preset_name;
    auto* presets = app.add_subcommand("presets", "List presets, or print one as JSON");
    presets->add_option("name", preset_name);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        if (*repro) return reproduce_paper(default_table(), out);
        if (*presets) return cmd_presets(preset_name, out, err);
        if (*eval) return cmd_eval(eval_src.load(), out);
        if (*br) return cmd_best_response(br_src.load(), out);
        if (*eq) return cmd_equilibrium(eq_src.load(), out);
        if (*sweep) return cmd_sweep(sweep_src.load(), sweep_opts, out, err);
    } catch (const ScenarioIoError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ScenarioError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const AxisFlagError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InvalidScenario& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
    return kInvalidInput;
}

}  // namespace stackgame::cli
