#pragma once

#include <cstdint>
#include <stdexcept>

namespace toricfrob {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A fan violates one of its structural invariants; the message names it.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Malformed input (fan file, class coordinates, CLI arguments).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Requested builtin fan does not exist.
class UnknownBuiltin : public Error {
public:
    using Error::Error;
};

/// An enumeration would exceed the configured point budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A fixed-width integer operation would overflow.
class ArithmeticOverflow : public Error {
public:
    using Error::Error;
};

/// Default cap on enumeration size (cube points, polytope box volume).
inline constexpr std::uint64_t default_enumeration_budget = 10'000'000;

} // namespace toricfrob
