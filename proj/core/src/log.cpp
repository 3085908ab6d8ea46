#include "qgs/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace qgs {

namespace {

LogLevel parse_level(const char* s) {
    if (!s) return LogLevel::Warn;
    std::string v(s);
    if (v == "off" || v == "none" || v == "0") return LogLevel::Off;
    if (v == "error") return LogLevel::Error;
    if (v == "warn" || v == "warning") return LogLevel::Warn;
    if (v == "info") return LogLevel::Info;
    if (v == "debug") return LogLevel::Debug;
    return LogLevel::Warn;
}

const char* level_tag(LogLevel l) {
    switch (l) {
        case LogLevel::Error: return "error";
        case LogLevel::Warn: return "warn";
        case LogLevel::Info: return "info";
        case LogLevel::Debug: return "debug";
        default: return "?";
    }
}

std::mutex g_log_mutex;

}  // namespace

LogLevel log_level() {
    static LogLevel level = parse_level(std::getenv("QGS_LOG"));
    return level;
}

void log_line(LogLevel level, const std::string& msg) {
    std::lock_guard<std::mutex> lock(g_log_mutex);
    std::cerr << "[qgs:" << level_tag(level) << "] " << msg << "\n";
}

}  // namespace qgs
