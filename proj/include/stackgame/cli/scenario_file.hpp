#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "stackgame/leader.hpp"
#include "stackgame/population.hpp"
#include "stackgame/sweep.hpp"

namespace stackgame::cli {

// A scenario document failed to parse or validate. `key_path` locates the
// offending value, e.g. "weights.alpha" or "population.grid.count".
class ScenarioError : public std::runtime_error {
public:
    ScenarioError(std::string key_path, const std::string& message)
        : std::runtime_error(key_path.empty() ? message : key_path + ": " + message),
          key_path_(std::move(key_path)) {}

    const std::string& key_path() const { return key_path_; }

private:
    std::string key_path_;
};

// The scenario file could not be read.
class ScenarioIoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ScenarioFile {
    Scenario scenario;                     // table, weights, creator, rule
    std::optional<Population> population;  // absent: the single `creator`
    WeightDomain domain = WeightDomain::default_domain();

    Population effective_population() const {
        return population ? *population : Population::single(scenario.creator);
    }
};

// Strict parse: unknown keys and constraint violations raise ScenarioError.
ScenarioFile parse_scenario(const nlohmann::json& doc);
ScenarioFile parse_scenario_text(std::string_view text);
ScenarioFile load_scenario(const std::filesystem::path& path);

nlohmann::json to_json(const ScenarioFile& file);

}  // namespace stackgame::cli
