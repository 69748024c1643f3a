#pragma once

#include <stdexcept>
#include <string>

namespace catweak {

/// Base for every error raised by the library. `module()` names the
/// component that failed so front ends can report it.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// Invalid parameters handed to a constructor or operation.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The superposition annihilates: 1 + 2 I Re(a* b) is not positive.
class DegenerateState : public Error {
public:
    using Error::Error;
};

/// A numerical routine could not meet its tolerance.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// An approximation was requested outside the regime where it holds.
class RegimeViolation : public Error {
public:
    using Error::Error;
};

/// a1 -> 0 makes the weak value a2/a1 unbounded.
class DivergentWeakValue : public Error {
public:
    using Error::Error;
};

}  // namespace catweak
