#pragma once

#include <map>
#include <string>

namespace levytail::cli {

// Merged run configuration: config file entries overridden by flags. Keys mirror flag names.
using RunConfig = std::map<std::string, std::string>;

enum Exit { kOk = 0, kConfig = 2, kNumeric = 3, kNoBound = 4, kFail = 5 };

int cmd_functionals(const RunConfig& cfg);
int cmd_bound(const RunConfig& cfg);
int cmd_validate(const RunConfig& cfg);
int cmd_rate(const RunConfig& cfg);
int cmd_simulate(const RunConfig& cfg);
int cmd_constants(const RunConfig& cfg);

// Runs a command, mapping library errors onto exit codes.
int run_guarded(int (*cmd)(const RunConfig&), const RunConfig& cfg);

}  // namespace levytail::cli
