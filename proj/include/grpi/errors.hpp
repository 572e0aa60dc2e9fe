#pragma once

#include <stdexcept>

namespace grpi {

/// Malformed or inconsistent input (files, labels, preconditions). CLI exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A work estimate exceeded the configured budget before any heavy allocation. CLI exit code 4.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal cross-check failed. This is a bug trap, not an input problem.
struct CheckError : std::logic_error {
    using std::logic_error::logic_error;
};

}
