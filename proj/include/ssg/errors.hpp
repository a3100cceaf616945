#pragma once

#include <stdexcept>
#include <string>

namespace ssg {

// Base class for all errors raised by the library. Everything thrown here is
// a user-facing domain error (bad input, unsatisfiable request, exceeded cap);
// internal invariant violations use assert instead.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct AlphabetMismatch : Error {
    explicit AlphabetMismatch(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error(msg) {}
};

struct NotInvertible : Error {
    explicit NotInvertible(const std::string& msg) : Error(msg) {}
};

struct SizeBoundExceeded : Error {
    explicit SizeBoundExceeded(const std::string& msg) : Error(msg) {}
};

struct OutOfDomain : Error {
    explicit OutOfDomain(const std::string& msg) : Error(msg) {}
};

struct UnknownEntry : Error {
    explicit UnknownEntry(const std::string& msg) : Error(msg) {}
};

struct OverflowError : Error {
    explicit OverflowError(const std::string& msg) : Error(msg) {}
};

// A bounded decision procedure ran out of budget without reaching either
// verdict; the caller must report this, not guess.
struct Indeterminate : Error {
    explicit Indeterminate(const std::string& msg) : Error(msg) {}
};

} // namespace ssg
