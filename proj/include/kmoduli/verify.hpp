#ifndef KMODULI_VERIFY_HPP
#define KMODULI_VERIFY_HPP

#include <string>
#include <vector>

namespace kmoduli::verify {

// One acceptance criterion, executed at its pinned tolerance (always exact
// equality here) with a deterministic seed.
struct CheckResult {
    std::string suite;
    std::string criterion;
    bool pass = false;
    std::string detail;
    double millis = 0.0;
};

const std::vector<std::string>& suite_names();

// Runs one suite, or every suite in order for "all".
std::vector<CheckResult> run_suite(const std::string& name);

} // namespace kmoduli::verify

#endif
