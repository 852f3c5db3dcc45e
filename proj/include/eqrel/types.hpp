#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace eqrel {

using Nat = std::uint64_t;
using NatPair = std::pair<Nat, Nat>;

// Window bound of relations decided on all of omega.
inline constexpr Nat kUnbounded = std::numeric_limits<Nat>::max();

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A query touched an element outside the window on which a relation is decided.
class WindowError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Some class on the window is missed by the range of a function.
class CoverageError : public Error {
public:
    using Error::Error;
};

} // namespace eqrel
