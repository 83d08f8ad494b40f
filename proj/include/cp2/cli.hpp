#pragma once

// Command-line entry point: wires the catalog, seifert, diagrams,
// obstructions, and genus modules into subcommands with uniform output
// and machine-readable exit codes.

#include <string>
#include <vector>

namespace cp2 {

struct Diagnostic {
    enum class Severity { Info, Error };
    Severity severity = Severity::Info;
    std::string message;
};

struct CommandResult {
    int exit_code = 0;          // 0 ok, 1 domain error, 2 usage
    std::string stdout_payload; // UTF-8 text
    std::vector<Diagnostic> diagnostics;
};

// Never throws and never exits; bad input becomes diagnostics.
CommandResult dispatch(const std::vector<std::string>& argv);

std::string usage_text();

} // namespace cp2
