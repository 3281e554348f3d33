#pragma once

#include <stdexcept>
#include <string>

namespace alliance {

/// Thrown when an exact search would exceed its configured size guard.
/// Callers can retry with a larger cap (at their own risk) or fall back to
/// the constructive upper bounds.
class capacity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a construction is invoked on a graph that does not satisfy
/// the hypothesis under which the construction is valid.
class hypothesis_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Edge-list / report document syntax error. Carries a 1-based line number
/// when the failing line is known (0 otherwise).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace alliance
