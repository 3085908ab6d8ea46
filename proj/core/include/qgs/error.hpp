#pragma once

#include <stdexcept>
#include <string>

namespace qgs {

// All recoverable failures (bad input, solver non-convergence, violated
// preconditions) are reported through this type so callers can map them to
// exit codes uniformly.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

inline void require(bool cond, const std::string& msg) {
    if (!cond) fail(msg);
}

}  // namespace qgs
