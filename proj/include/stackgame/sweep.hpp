#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stackgame/game_core.hpp"
#include "stackgame/response.hpp"

namespace stackgame {

enum class Parameter { Alpha, Beta, Gamma, Delta };

std::string_view to_string(Parameter p);
std::optional<Parameter> parse_parameter(std::string_view name);

struct SweepAxis {
    Parameter parameter;
    double lo;
    double hi;
    std::size_t steps;

    // Evenly spaced values over [lo, hi], endpoints included; one step is lo.
    std::vector<double> values() const;
};

// Everything a single creator evaluation needs.
struct Scenario {
    AlgorithmWeights weights;
    CreatorParams creator;
    GameTable table;
    ResponseRule rule;
};

Scenario with_parameter(const Scenario& base, Parameter p, double value);

class SweepSpec {
public:
    SweepSpec(SweepAxis axis1, std::optional<SweepAxis> axis2, Scenario fixed);

    const SweepAxis& axis1() const { return axis1_; }
    const std::optional<SweepAxis>& axis2() const { return axis2_; }
    const Scenario& fixed() const { return fixed_; }
    std::size_t cell_count() const { return axis1_.steps * (axis2_ ? axis2_->steps : 1); }

private:
    SweepAxis axis1_;
    std::optional<SweepAxis> axis2_;
    Scenario fixed_;
};

struct SweepCell {
    std::map<std::string, double> param_values;  // keyed by parameter name
    std::array<double, 2> utilities;
    Strategy chosen;  // exact best response
    double gap;       // U(Beefing) - U(Collaboration)

    double utility(Strategy s) const { return utilities[index_of(s)]; }
};

// Axis 1 outer, axis 2 inner, both ascending.
std::vector<SweepCell> run_sweep(const SweepSpec& spec);

// switching_delta for the fixed weights and model, empty when it falls
// outside the swept delta range. Requires a delta-only sweep.
std::optional<double> region_boundary(const SweepSpec& spec);

// Header of sorted parameter names then u_collab,u_beef,gap,chosen. Reals use
// 9 significant digits. Throws std::ios_base::failure on write errors.
void emit_csv(std::span<const SweepCell> cells, std::ostream& sink);

// Real formatting shared by every text output: 9 significant digits.
std::string format_real(double value);

inline constexpr std::string_view kCollaborationColor = "#4c78a8";
inline constexpr std::string_view kBeefingColor = "#e45756";

// Strategy-region heatmap for a two-axis sweep. Throws MalformedLattice if the
// cells do not form the spec's steps1 x steps2 lattice.
void emit_region_svg(const SweepSpec& spec, std::span<const SweepCell> cells,
                     std::ostream& sink);

}  // namespace stackgame
