#include <cstdio>
#include <string>
#include <vector>

#include "kmoduli/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    kmoduli::cli::Outcome outcome = kmoduli::cli::run(args);
    std::fputs(outcome.output.c_str(), stdout);
    return outcome.exit_code;
}
