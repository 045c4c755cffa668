#pragma once

#include <stdexcept>
#include <string>

namespace ih2 {

/// Rejected input: malformed complexes, filtrations, perversities or files.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Violated internal invariant; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ih2
