#ifndef KMODULI_CLI_HPP
#define KMODULI_CLI_HPP

#include <string>
#include <vector>

namespace kmoduli::cli {

struct Outcome {
    int exit_code = 0;  // 0 ok, 1 validation error, 2 internal invariant breach
    std::string output; // JSON report (or help text)
};

// args excludes the program name.  Reports are deterministic: identical
// inputs produce byte-identical output.
Outcome run(const std::vector<std::string>& args);

} // namespace kmoduli::cli

#endif
