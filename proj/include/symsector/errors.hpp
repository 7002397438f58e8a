#pragma once

#include <stdexcept>
#include <string>

namespace symsector {

// Requested computation exceeds a size cap or evaluation budget.
class SizeError : public std::runtime_error {
public:
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or out-of-contract input (bad composition, non-normalized row, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A quantity that is real (or otherwise constrained) by construction came out
// numerically inconsistent beyond tolerance.
class ConsistencyError : public std::runtime_error {
public:
    explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symsector
