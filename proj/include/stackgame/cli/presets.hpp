#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "stackgame/cli/scenario_file.hpp"

namespace stackgame::cli {

// example1, example2, example3, tiktok-like, youtube-like.
std::vector<std::string_view> preset_names();
std::optional<ScenarioFile> find_preset(std::string_view name);

}  // namespace stackgame::cli
