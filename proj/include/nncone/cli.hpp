#pragma once

#include <string>

#include "nncone/json_io.hpp"

namespace nncone {

/// A complete, replayable description of one experiment:
/// {"command": ..., <command parameters>, "config": SearchConfig}.
/// Commands: check, maxt, volume, compare, slice, family, decompose, normalize.
///
/// Returns {"run": run, "result": ...}. Rerunning the embedded "run" gives the
/// same result, regardless of the thread count.
Json run_command(const Json& run);

/// Reruns record["run"] and reports whether the result matches record["result"].
struct ReplayOutcome {
    bool identical = false;
    Json rerun;
};
ReplayOutcome replay(const Json& record);

/// Writes text to a temporary file in the target's directory, then renames it
/// over the target; on failure the target is left untouched.
void write_atomic(const std::string& path, const std::string& text);

}  // namespace nncone
