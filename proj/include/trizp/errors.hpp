#pragma once

#include <stdexcept>
#include <string>

namespace trizp {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EvenModulusError : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class ModulusMismatch : public Error {
public:
    using Error::Error;
};

class RingMismatch : public Error {
public:
    using Error::Error;
};

class EnumerationBoundExceeded : public Error {
public:
    using Error::Error;
};

class NotAssociative : public Error {
public:
    using Error::Error;
};

class NoUnity : public Error {
public:
    using Error::Error;
};

class NotUnitalModule : public Error {
public:
    using Error::Error;
};

class NotFaithful : public Error {
public:
    using Error::Error;
};

class NotASolution : public Error {
public:
    using Error::Error;
};

class PreconditionViolated : public Error {
public:
    using Error::Error;
};

class DeltaNotJordanDerivation : public Error {
public:
    using Error::Error;
};

/// Raised when a structure theorem fails on a concrete instance. Never
/// expected to fire; the CLI maps it to exit code 1.
class TheoremViolated : public Error {
public:
    TheoremViolated(std::string step, std::string witness)
        : Error("theorem violated at " + step + ": " + witness),
          step_(std::move(step)),
          witness_(std::move(witness)) {}

    const std::string& step() const noexcept { return step_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string step_;
    std::string witness_;
};

}  // namespace trizp
