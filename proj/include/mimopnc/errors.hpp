#pragma once

#include <stdexcept>
#include <string>

namespace mimopnc {

struct DegenerateChannel : std::runtime_error {
    explicit DegenerateChannel(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidCoefficient : std::runtime_error {
    explicit InvalidCoefficient(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct NoCrossing : std::runtime_error {
    explicit NoCrossing(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mimopnc
