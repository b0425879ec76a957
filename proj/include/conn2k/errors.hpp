#pragma once

#include <stdexcept>
#include <string>

namespace conn2k {

/// Malformed instance file or invalid command-line input (CLI exit code 2).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Violated operation precondition.
class InvalidArgument : public std::runtime_error {
public:
    explicit InvalidArgument(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural guarantee of the algorithms failed at runtime. Reaching this
/// signals an implementation bug, never bad input (CLI exit code 3).
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace conn2k
