#pragma once

#include <stdexcept>
#include <string>

namespace jumphedge {

// Bad construction parameters or out-of-range arguments; carries the
// name of the offending field.
class ValidationError : public std::invalid_argument {
public:
    ValidationError(std::string field, const std::string& message)
        : std::invalid_argument(message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// The certified series tail could not be driven below the requested
// tolerance within the term budget (ill-posed envelope or extreme
// parameters).
class TruncationFailure : public std::runtime_error {
public:
    TruncationFailure(const std::string& message, int terms_tried)
        : std::runtime_error(message), terms_tried_(terms_tried) {}

    int terms_tried() const noexcept { return terms_tried_; }

private:
    int terms_tried_;
};

// The payoff does not admit a delta-hedging strategy (no usable derivative).
class DeltaUnavailable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Adaptive quadrature failed to converge; carries the offending segment.
class QuadratureFailure : public std::runtime_error {
public:
    QuadratureFailure(const std::string& message, double segment_lo, double segment_hi)
        : std::runtime_error(message), segment_lo_(segment_lo), segment_hi_(segment_hi) {}

    double segment_lo() const noexcept { return segment_lo_; }
    double segment_hi() const noexcept { return segment_hi_; }

private:
    double segment_lo_;
    double segment_hi_;
};

} // namespace jumphedge
