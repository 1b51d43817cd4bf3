#pragma once

#include <stdexcept>
#include <string>

namespace qmatroids {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A size guard tripped: the requested computation is outside the supported
// range (enumeration too large, groundset too big, and so on).  The CLI maps
// this to its own exit code, so keep guard failures distinct from bad input.
class GuardError : public Error {
public:
    explicit GuardError(const std::string& what) : Error(what) {}
};

// Structurally invalid input: mismatched ambients, reducible modulus where an
// irreducible one is required, a set that is not a subspace, and so on.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// Malformed file or JSON payload.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

} // namespace qmatroids
