#include "grlie/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace grlie {

namespace {

LogLevel parse_level() {
    const char* env = std::getenv("GRLIE_LOG");
    if (!env) return LogLevel::kWarn;
    std::string v(env);
    if (v == "error") return LogLevel::kError;
    if (v == "warn") return LogLevel::kWarn;
    if (v == "info") return LogLevel::kInfo;
    if (v == "debug") return LogLevel::kDebug;
    return LogLevel::kWarn;
}

const char* level_name(LogLevel l) {
    switch (l) {
        case LogLevel::kError: return "error";
        case LogLevel::kWarn: return "warn";
        case LogLevel::kInfo: return "info";
        case LogLevel::kDebug: return "debug";
    }
    return "?";
}

std::mutex log_mutex;

}  // namespace

LogLevel log_level() {
    static const LogLevel level = parse_level();
    return level;
}

void log_message(LogLevel level, const std::string& message) {
    if (level > log_level()) return;
    std::lock_guard<std::mutex> lock(log_mutex);
    std::cerr << "[" << level_name(level) << "] " << message << "\n";
}

}  // namespace grlie
