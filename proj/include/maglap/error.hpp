// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace maglap {

/// Base of every error the library raises. `kind()` is a stable, machine-readable tag
/// (the CLI puts it in its stderr JSON).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// Malformed or out-of-contract input: unknown ids, bad weights, violated preconditions.
class InvalidInput : public Error {
public:
    explicit InvalidInput(const std::string& message) : Error("invalid_input", message) {}
    InvalidInput(std::string kind, const std::string& message) : Error(std::move(kind), message) {}
};

/// A grid computation was refused because its estimated cost exceeds the configured cap.
class CostGuardExceeded : public Error {
public:
    explicit CostGuardExceeded(const std::string& message) : Error("cost_guard", message) {}
};

/// An internal numerical self-check failed (eigensolver pairing, sandwich order, ...).
class NumericalFailure : public Error {
public:
    explicit NumericalFailure(const std::string& message) : Error("numerical_failure", message) {}
};

}  // namespace maglap
