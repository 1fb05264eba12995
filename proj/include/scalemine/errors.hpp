#pragma once

#include <stdexcept>
#include <string>

namespace scalemine {

// Problem with input data or files; the CLI maps this to exit code 2.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; the CLI maps this to exit code 3.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace scalemine
