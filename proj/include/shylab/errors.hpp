#ifndef SHYLAB_ERRORS_HPP
#define SHYLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shylab {

// Error taxonomy used across the library. Each maps to CLI exit code 2
// when raised while loading inputs, or to a diagnostic otherwise.

// A value lies outside the object it must belong to (point not in image,
// x outside a function's domain, missing basepoint).
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration or oracle was asked to exceed its configured size limit.
struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

// Structural mismatch: non-cycle where a cycle is required, circular vs
// non-circular function, compose with incompatible images.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

// A documented operation precondition does not hold (e.g. shyness deciders
// require a continuous map).
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// Wedge maps must send wedge point to wedge point.
struct PointednessError : std::runtime_error {
    explicit PointednessError(const std::string& what) : std::runtime_error(what) {}
};

// Input is well-formed but outside the regime an operation supports
// (e.g. a non-injective angle map).
struct UnsupportedRegimeError : std::runtime_error {
    explicit UnsupportedRegimeError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or schema-violating external input (JSON, rationals).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace shylab

#endif
