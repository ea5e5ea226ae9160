#include "stackgame/sweep.hpp"

#include <cmath>
#include <fmt/format.h>
#include <ios>

#include "stackgame/grid.hpp"

namespace stackgame {

std::string_view to_string(Parameter p) {
    switch (p) {
        case Parameter::Alpha: return "alpha";
        case Parameter::Beta: return "beta";
        case Parameter::Gamma: return "gamma";
        case Parameter::Delta: return "delta";
    }
    return "?";
}

std::optional<Parameter> parse_parameter(std::string_view name) {
    for (Parameter p : {Parameter::Alpha, Parameter::Beta, Parameter::Gamma, Parameter::Delta}) {
        if (to_string(p) == name) return p;
    }
    return std::nullopt;
}

std::vector<double> SweepAxis::values() const { return linspace(lo, hi, steps); }

Scenario with_parameter(const Scenario& base, Parameter p, double value) {
    Scenario s = base;
    const auto& w = base.weights;
    switch (p) {
        case Parameter::Alpha: s.weights = AlgorithmWeights{value, w.beta(), w.gamma()}; break;
        case Parameter::Beta: s.weights = AlgorithmWeights{w.alpha(), value, w.gamma()}; break;
        case Parameter::Gamma: s.weights = AlgorithmWeights{w.alpha(), w.beta(), value}; break;
        case Parameter::Delta: s.creator = base.creator.with_delta(value); break;
    }
    return s;
}

namespace {

void validate_axis(const SweepAxis& axis) {
    const auto name = std::string(to_string(axis.parameter));
    require_non_negative(axis.lo, name + " lower bound");
    require_non_negative(axis.hi, name + " upper bound");
    if (axis.lo > axis.hi) {
        throw InvalidScenario(name + " range is inverted");
    }
    if (axis.steps == 0) {
        throw InvalidScenario(name + " steps must be >= 1");
    }
}

}  // namespace

SweepSpec::SweepSpec(SweepAxis axis1, std::optional<SweepAxis> axis2, Scenario fixed)
    : axis1_(axis1), axis2_(axis2), fixed_(std::move(fixed)) {
    validate_axis(axis1_);
    if (axis2_) {
        validate_axis(*axis2_);
        if (axis2_->parameter == axis1_.parameter) {
            throw InvalidScenario("axis2 must sweep a different parameter than axis1");
        }
    }
}

std::vector<SweepCell> run_sweep(const SweepSpec& spec) {
    const auto outer = spec.axis1().values();
    const auto inner = spec.axis2() ? spec.axis2()->values() : std::vector<double>{};

    std::vector<SweepCell> cells;
    cells.reserve(spec.cell_count());

    auto evaluate = [&](std::map<std::string, double> params, const Scenario& s) {
        SweepCell cell{
            .param_values = std::move(params),
            .utilities = {creator_utility(s.weights, s.creator, s.table, Strategy::Collaboration),
                          creator_utility(s.weights, s.creator, s.table, Strategy::Beefing)},
            .chosen = best_response(s.weights, s.creator, s.table),
            .gap = 0.0,
        };
        cell.gap = cell.utilities[index_of(Strategy::Beefing)] -
                   cell.utilities[index_of(Strategy::Collaboration)];
        cells.push_back(std::move(cell));
    };

    const auto name1 = std::string(to_string(spec.axis1().parameter));
    for (double v1 : outer) {
        const Scenario s1 = with_parameter(spec.fixed(), spec.axis1().parameter, v1);
        if (!spec.axis2()) {
            evaluate({{name1, v1}}, s1);
            continue;
        }
        const auto name2 = std::string(to_string(spec.axis2()->parameter));
        for (double v2 : inner) {
            evaluate({{name1, v1}, {name2, v2}},
                     with_parameter(s1, spec.axis2()->parameter, v2));
        }
    }
    return cells;
}

std::optional<double> region_boundary(const SweepSpec& spec) {
    if (spec.axis1().parameter != Parameter::Delta || spec.axis2()) {
        throw InvalidScenario("region boundary needs a delta-only sweep");
    }
    const auto& fixed = spec.fixed();
    const auto threshold = switching_delta(fixed.weights, fixed.creator.model(), fixed.table);
    if (!threshold || *threshold < spec.axis1().lo || *threshold > spec.axis1().hi) {
        return std::nullopt;
    }
    return threshold;
}

std::string format_real(double value) {
    if (value == 0.0) value = 0.0;  // drop the sign of -0
    return fmt::format("{:.9g}", value);
}

void emit_csv(std::span<const SweepCell> cells, std::ostream& sink) {
    if (cells.empty()) {
        throw InvalidScenario("cannot emit CSV for an empty sweep");
    }
    std::string out;
    for (const auto& [name, value] : cells.front().param_values) {
        out += name;
        out += ',';
    }
    out += "u_collab,u_beef,gap,chosen\n";
    for (const auto& cell : cells) {
        for (const auto& [name, value] : cell.param_values) {
            out += format_real(value);
            out += ',';
        }
        out += fmt::format("{},{},{},{}\n", format_real(cell.utility(Strategy::Collaboration)),
                           format_real(cell.utility(Strategy::Beefing)), format_real(cell.gap),
                           to_string(cell.chosen));
    }
    sink.write(out.data(), static_cast<std::streamsize>(out.size()));
    sink.flush();
    if (!sink) {
        throw std::ios_base::failure("failed to write CSV");
    }
}

void emit_region_svg(const SweepSpec& spec, std::span<const SweepCell> cells,
                     std::ostream& sink) {
    if (!spec.axis2()) {
        throw MalformedLattice("region SVG needs a two-axis sweep");
    }
    const auto& ax = spec.axis1();
    const auto& ay = *spec.axis2();
    if (cells.size() != ax.steps * ay.steps) {
        throw MalformedLattice(fmt::format("expected {} x {} = {} cells, got {}", ax.steps,
                                           ay.steps, ax.steps * ay.steps, cells.size()));
    }
    const auto name_x = std::string(to_string(ax.parameter));
    const auto name_y = std::string(to_string(ay.parameter));

    constexpr double left = 70.0;
    constexpr double top = 40.0;
    constexpr double plot = 400.0;
    constexpr double width = left + plot + 170.0;
    constexpr double height = top + plot + 60.0;
    const double cell_w = plot / static_cast<double>(ax.steps);
    const double cell_h = plot / static_cast<double>(ay.steps);

    std::string out;
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n",
        width, height);
    out += fmt::format("<title>Best response over {} x {}</title>\n", name_x, name_y);
    out += fmt::format("<g id=\"cells\">\n");
    for (std::size_t i = 0; i < ax.steps; ++i) {
        for (std::size_t j = 0; j < ay.steps; ++j) {
            const auto& cell = cells[i * ay.steps + j];
            if (!cell.param_values.contains(name_x) || !cell.param_values.contains(name_y)) {
                throw MalformedLattice(
                    fmt::format("cell {} lacks {} or {}", i * ay.steps + j, name_x, name_y));
            }
            const auto color = cell.chosen == Strategy::Beefing ? kBeefingColor
                                                                : kCollaborationColor;
            // Axis 2 increases upward.
            const double x = left + static_cast<double>(i) * cell_w;
            const double y = top + static_cast<double>(ay.steps - 1 - j) * cell_h;
            out += fmt::format(
                "<rect class=\"cell\" x=\"{:.3f}\" y=\"{:.3f}\" width=\"{:.3f}\" "
                "height=\"{:.3f}\" fill=\"{}\"><title>{}={} {}={} {}</title></rect>\n",
                x, y, cell_w, cell_h, color, name_x, format_real(cell.param_values.at(name_x)),
                name_y, format_real(cell.param_values.at(name_y)), to_string(cell.chosen));
        }
    }
    out += "</g>\n";

    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n",
        left, top, plot, plot);
    out += fmt::format(
        "<text class=\"axis-label\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{} [{}, {}]</text>\n",
        left + plot / 2, top + plot + 35, name_x, format_real(ax.lo), format_real(ax.hi));
    out += fmt::format(
        "<text class=\"axis-label\" x=\"{0}\" y=\"{1}\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 {0} {1})\">{2} [{3}, {4}]</text>\n",
        left - 35, top + plot / 2, name_y, format_real(ay.lo), format_real(ay.hi));
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", left, top + plot + 15,
                       format_real(ax.lo));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left + plot,
                       top + plot + 15, format_real(ax.hi));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left - 5,
                       top + plot, format_real(ay.lo));
    out += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", left - 5,
                       top + 10, format_real(ay.hi));

    const double legend_x = left + plot + 20;
    int row = 0;
    for (Strategy s : kStrategies) {
        const auto color = s == Strategy::Beefing ? kBeefingColor : kCollaborationColor;
        const double y = top + 20.0 * row++;
        out += fmt::format(
            "<rect class=\"legend\" x=\"{}\" y=\"{}\" width=\"12\" height=\"12\" fill=\"{}\"/>\n",
            legend_x, y, color);
        out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", legend_x + 18, y + 11,
                           to_string(s));
    }
    out += "</svg>\n";

    sink.write(out.data(), static_cast<std::streamsize>(out.size()));
    sink.flush();
    if (!sink) {
        throw std::ios_base::failure("failed to write SVG");
    }
}

}  // namespace stackgame
