#pragma once

#include <functional>
#include <string>

namespace asynum {

/// Receives library warnings (defaults to stderr). Pass nullptr to silence.
void set_warning_sink(std::function<void(const std::string&)> sink);
void warn(const std::string& message);

}  // namespace asynum
