#pragma once

#include <stdexcept>
#include <string>

namespace besselcross {

/// Requested absolute error bound could not be met even after the adaptive
/// precision loop exhausted its doublings.
class PrecisionExhausted : public std::runtime_error {
  public:
    explicit PrecisionExhausted(const std::string &what) : std::runtime_error(what) {}
};

/// A truncated-series identity check was asked for with too short an order
/// to carry any information (or an operation lost all valid coefficients).
class TruncationTooShort : public std::runtime_error {
  public:
    explicit TruncationTooShort(const std::string &what) : std::runtime_error(what) {}
};

/// A leading-term certificate failed. The certified statement is a theorem,
/// so this signals an implementation bug, never a data condition.
class CertificateViolation : public std::logic_error {
  public:
    explicit CertificateViolation(const std::string &what) : std::logic_error(what) {}
};

} // namespace besselcross
