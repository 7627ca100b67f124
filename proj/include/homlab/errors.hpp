#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace homlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input that does not describe a valid object (bad file line, vertex out of range, ...).
class MalformedInput : public Error {
public:
    using Error::Error;
};

/// An operation was called outside of its precondition.
class ContractViolation : public Error {
public:
    using Error::Error;
};

/// A generator or solver was given an instance it does not accept
/// (wrong CNF dialect, k outside the allowed range, ...).
class InvalidInstance : public Error {
public:
    using Error::Error;
};

/// Signed 64-bit weight arithmetic overflowed.
class WeightOverflow : public Error {
public:
    using Error::Error;
};

/// A search gave up because it ran out of budget (node count or wall clock).
/// `partial_bound` is search specific; for separator search it is the smallest
/// size that was not fully ruled out.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::size_t partial_bound = 0)
        : Error(what), partial_bound_(partial_bound) {}

    std::size_t partial_bound() const noexcept { return partial_bound_; }

private:
    std::size_t partial_bound_;
};

} // namespace homlab
