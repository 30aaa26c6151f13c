#pragma once

#include <stdexcept>
#include <string>

namespace surround {

// Malformed input text, bad parameters, invalid designs, and similar. CLI maps
// this to exit code 2.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation would exceed its configured resource budget. Carries the
// amount that would have been required when known. CLI maps this to exit 3.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what, unsigned long long required = 0)
        : std::runtime_error(what), required_(required) {}
    unsigned long long required() const { return required_; }

private:
    unsigned long long required_;
};

// Game-theoretic routines only accept connected graphs. CLI maps this to
// exit 4.
class disconnected_error : public std::runtime_error {
public:
    explicit disconnected_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace surround
