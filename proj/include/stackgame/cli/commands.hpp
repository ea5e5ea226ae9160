#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "stackgame/game_core.hpp"

namespace stackgame::cli {

enum ExitCode : int {
    kOk = 0,
    kIoError = 1,
    kInvalidInput = 2,
    kCheckFailed = 3,
};

// Runs the command line (args excludes the program name). Results go to
// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Recomputes the example1..example3 reference numbers against `table` and
// prints one row per check. Returns kOk if all six checks pass, kCheckFailed
// otherwise.
int reproduce_paper(const GameTable& table, std::ostream& out);

}  // namespace stackgame::cli
