#pragma once

#include <stdexcept>
#include <string>

namespace gasketlab {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, labels, JSON, edge shorthand).
class ParseError : public Error {
public:
    using Error::Error;
};

// A materialization would exceed the configured vertex cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// An exact search ran past its deadline.
class TimeBudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace gasketlab
