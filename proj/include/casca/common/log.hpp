#pragma once

#include <string_view>

namespace casca::log {

enum class Level { debug = 0, info = 1, warn = 2, error = 3, off = 4 };

/// Initial level comes from CASCA_LOG (debug|info|warn|error|off), default info.
void set_level(Level level);
Level level();

void write(Level level, std::string_view component, std::string_view message);

inline void debug(std::string_view component, std::string_view message) { write(Level::debug, component, message); }
inline void info(std::string_view component, std::string_view message) { write(Level::info, component, message); }
inline void warn(std::string_view component, std::string_view message) { write(Level::warn, component, message); }
inline void error(std::string_view component, std::string_view message) { write(Level::error, component, message); }

}  // namespace casca::log
