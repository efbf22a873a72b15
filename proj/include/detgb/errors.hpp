#pragma once
// Error taxonomy for the library. The categories line up with the stable
// CLI exit codes: invalid input -> 2, unsupported case -> 3, internal
// assertion -> 4, desk-scale guard -> 5.

#include <stdexcept>
#include <string>

namespace detgb {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input or a violated operation precondition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// A mathematically undefined request, e.g. a diagonal term order together
// with a non-vexillary permutation.
class Unsupported : public Error {
public:
    using Error::Error;
};

// Input exceeds a documented desk-scale guard.
class ScaleLimit : public Error {
public:
    using Error::Error;
};

// A broken internal invariant.
class InternalError : public Error {
public:
    using Error::Error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw InvalidInput(msg);
}

inline void internal_check(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace detgb
