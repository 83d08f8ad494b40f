#include <iostream>
#include <vector>

#include "cp2/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    cp2::CommandResult res = cp2::dispatch(args);
    std::cout << res.stdout_payload;
    for (const auto& d : res.diagnostics)
        std::cerr << (d.severity == cp2::Diagnostic::Severity::Error ? "error: " : "note: ")
                  << d.message << "\n";
    return res.exit_code;
}
