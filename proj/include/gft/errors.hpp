#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gft {

enum class ErrorKind {
    Domain,
    ClassViolation,
    Pole,
    IdentityFunction,
    MonotonicityViolation,
    DegenerateAlpha,
    BoundaryViolation,
    RhoOutOfRange,
    CoefficientTooLarge,
    ZeroFunction,
    Config,
};

/// Machine-readable name used in reports and CLI output.
inline constexpr std::string_view error_code(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::ClassViolation: return "ClassViolation";
    case ErrorKind::Pole: return "PoleError";
    case ErrorKind::IdentityFunction: return "IdentityFunction";
    case ErrorKind::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorKind::DegenerateAlpha: return "DegenerateAlpha";
    case ErrorKind::BoundaryViolation: return "BoundaryViolation";
    case ErrorKind::RhoOutOfRange: return "RhoOutOfRange";
    case ErrorKind::CoefficientTooLarge: return "CoefficientTooLarge";
    case ErrorKind::ZeroFunction: return "ZeroFunction";
    case ErrorKind::Config: return "ConfigError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_code(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view code() const noexcept { return error_code(kind_); }

private:
    ErrorKind kind_;
};

template <ErrorKind K>
class TaggedError : public Error {
public:
    explicit TaggedError(const std::string& what) : Error(K, what) {}
};

using DomainError = TaggedError<ErrorKind::Domain>;
using ClassViolation = TaggedError<ErrorKind::ClassViolation>;
using IdentityFunction = TaggedError<ErrorKind::IdentityFunction>;
using MonotonicityViolation = TaggedError<ErrorKind::MonotonicityViolation>;
using DegenerateAlpha = TaggedError<ErrorKind::DegenerateAlpha>;
using BoundaryViolation = TaggedError<ErrorKind::BoundaryViolation>;
using RhoOutOfRange = TaggedError<ErrorKind::RhoOutOfRange>;
using CoefficientTooLarge = TaggedError<ErrorKind::CoefficientTooLarge>;
using ZeroFunction = TaggedError<ErrorKind::ZeroFunction>;
using ConfigError = TaggedError<ErrorKind::Config>;

/// A denominator vanished away from a removable singularity. Carries the offending point.
class PoleError : public Error {
public:
    PoleError(const std::string& what, std::complex<double> z)
        : Error(ErrorKind::Pole, what + " at z = (" + std::to_string(z.real()) + ", " +
                                     std::to_string(z.imag()) + ")"),
          z_(z)
    {
    }

    std::complex<double> where() const noexcept { return z_; }

private:
    std::complex<double> z_;
};

} // namespace gft
