#include "stackgame/cli/presets.hpp"

#include <array>
#include <utility>

namespace stackgame::cli {

namespace {

ScenarioFile linear_scenario(double alpha, double beta, double gamma, double delta) {
    return ScenarioFile{
        .scenario = Scenario{AlgorithmWeights{alpha, beta, gamma},
                             CreatorParams{delta, UtilityModel::Linear}, default_table(),
                             ResponseRule::exact()},
        .population = std::nullopt,
        .domain = WeightDomain::default_domain(),
    };
}

struct Preset {
    std::string_view name;
    ScenarioFile (*make)();
};

// Short-form platforms lean on clicks and shares, long-form on watch time.
const std::array<Preset, 5> kPresets{{
    {"example1", [] { return linear_scenario(1.0, 2.0, 1.5, 1.0); }},
    {"example2", [] { return linear_scenario(1.0, 2.0, 1.5, 2.5); }},
    {"example3", [] { return linear_scenario(2.5, 0.5, 2.0, 1.0); }},
    {"tiktok-like", [] { return linear_scenario(0.45, 0.1, 0.45, 0.25); }},
    {"youtube-like", [] { return linear_scenario(0.2, 0.6, 0.2, 0.25); }},
}};

}  // namespace

std::vector<std::string_view> preset_names() {
    std::vector<std::string_view> names;
    for (const auto& p : kPresets) names.push_back(p.name);
    return names;
}

std::optional<ScenarioFile> find_preset(std::string_view name) {
    for (const auto& p : kPresets) {
        if (p.name == name) return p.make();
    }
    return std::nullopt;
}

}  // namespace stackgame::cli
