#pragma once

#include <sstream>
#include <string>

namespace qgs {

// Log levels are selected through the QGS_LOG environment variable:
// off | error | warn (default) | info | debug.
enum class LogLevel { Off = 0, Error = 1, Warn = 2, Info = 3, Debug = 4 };

LogLevel log_level();
void log_line(LogLevel level, const std::string& msg);

namespace detail {
template <typename... Args>
std::string cat(Args&&... args) {
    std::ostringstream os;
    (os << ... << args);
    return os.str();
}
}  // namespace detail

template <typename... Args>
void log_info(Args&&... args) {
    if (log_level() >= LogLevel::Info) log_line(LogLevel::Info, detail::cat(args...));
}

template <typename... Args>
void log_debug(Args&&... args) {
    if (log_level() >= LogLevel::Debug) log_line(LogLevel::Debug, detail::cat(args...));
}

template <typename... Args>
void log_warn(Args&&... args) {
    if (log_level() >= LogLevel::Warn) log_line(LogLevel::Warn, detail::cat(args...));
}

}  // namespace qgs
