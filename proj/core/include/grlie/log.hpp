#pragma once

#include <string>

namespace grlie {

/// Diagnostics verbosity, controlled by the GRLIE_LOG environment variable
/// (error, warn, info, debug). Messages go to the error stream only.
enum class LogLevel { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

LogLevel log_level();
void log_message(LogLevel level, const std::string& message);

}  // namespace grlie

#define GRLIE_LOG_ERROR(msg) ::grlie::log_message(::grlie::LogLevel::kError, (msg))
#define GRLIE_LOG_WARN(msg) ::grlie::log_message(::grlie::LogLevel::kWarn, (msg))
#define GRLIE_LOG_INFO(msg) ::grlie::log_message(::grlie::LogLevel::kInfo, (msg))
#define GRLIE_LOG_DEBUG(msg)                                                      \
    do {                                                                          \
        if (::grlie::log_level() >= ::grlie::LogLevel::kDebug)                    \
            ::grlie::log_message(::grlie::LogLevel::kDebug, (msg));               \
    } while (0)
