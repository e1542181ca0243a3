#ifndef VOLRIG_ERRORS_HPP
#define VOLRIG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace volrig {

// Shape mismatch: wrong vector length, non-square input, grade out of range.
class DimensionError : public std::invalid_argument {
public:
    explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

// Invalid argument value: unknown vertex, bad preset name, k > n, division by zero.
class ArgumentError : public std::invalid_argument {
public:
    explicit ArgumentError(const std::string& what) : std::invalid_argument(what) {}
};

// A required general-position / independence condition failed at the given data.
class DegeneracyError : public std::runtime_error {
public:
    explicit DegeneracyError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or matrix would exceed the configured size cap.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input file or JSON document.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace volrig

#endif
