#pragma once

#include <string>
#include <vector>

#include "lcf/io.hpp"

namespace lcf {

// Exit codes of the tool.
enum ExitCode : int { kPass = 0, kFail = 1, kError = 2 };

struct Verdict {
    bool pass = true;
    json doc;
};

// Every command is a function of its input document and the config; nothing else is read.
json cmd_build(const json& spec);
json cmd_subdivide(const json& doc, const RunConfig& cfg);
json cmd_embed(const json& doc, const RunConfig& cfg);
Verdict cmd_measure(const json& doc, const RunConfig& cfg);
Verdict cmd_check(const json& doc, const RunConfig& cfg);
Verdict cmd_report(const json& doc, const RunConfig& cfg);
json cmd_stack(const json& doc, const RunConfig& cfg);

// Parses argv, runs one command, writes the output document. Errors go to stderr as a JSON
// object {"error": ...} and return kError.
int run_cli(const std::vector<std::string>& args);

}  // namespace lcf
