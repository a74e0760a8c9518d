#ifndef KMODULI_ERRORS_HPP
#define KMODULI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kmoduli {

// Bad user input: malformed spec files, non-unimodular forms, classes that
// do not live on the given surface.  CLI exit code 1.
class validation_error : public std::runtime_error {
  public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// An internal certainty failed (e.g. a coefficient that must be an integer
// came out fractional).  CLI exit code 2.  Must never fire on valid input.
class invariant_breach : public std::logic_error {
  public:
    explicit invariant_breach(const std::string& what) : std::logic_error(what) {}
};

} // namespace kmoduli

#endif
