#pragma once

#include <cmath>
#include <functional>
#include <utility>

#include "jumphedge/errors.hpp"

namespace jumphedge {

// Growth bounds |f(y)| <= scale * (1 + y^growth + y^(-decay)) on (0, inf).
// This is what makes the Poisson series tail certifiable: each envelope
// term turns into a Poisson tail at an inflated rate.
struct GrowthEnvelope {
    double scale = 1.0;  // C >= 0
    double growth = 0.0; // p >= 0
    double decay = 0.0;  // q >= 0

    double bound(double y) const {
        return scale * (1.0 + std::pow(y, growth) + std::pow(y, -decay));
    }
};

// Envelope for a monomial coef * y^e.
GrowthEnvelope monomial_envelope(double coef, double exponent);

// Discounted European payoff f(S_T). Log and Power are delta-eligible with
// built-in derivative envelopes; Call is admitted for valuation and
// replication but never for delta (kink at the strike). Customs declare
// their own envelopes; a C1 custom additionally declares f' and a growth
// envelope for it.
class Payoff {
public:
    enum class Kind { log_contract, power, call, custom };

    static Payoff log_contract();
    static Payoff power(double exponent); // exponent != 0
    static Payoff call(double strike);    // strike > 0
    static Payoff custom(std::function<double(double)> f, GrowthEnvelope envelope);
    static Payoff custom_c1(std::function<double(double)> f,
                            std::function<double(double)> derivative,
                            GrowthEnvelope envelope, GrowthEnvelope derivative_envelope);
    static Payoff constant(double c);

    Kind kind() const noexcept { return kind_; }
    double operator()(double y) const { return f_(y); }

    bool delta_eligible() const noexcept { return static_cast<bool>(f_prime_); }
    double derivative(double y) const; // throws DeltaUnavailable if not eligible

    const GrowthEnvelope& envelope() const noexcept { return envelope_; }
    const GrowthEnvelope& derivative_envelope() const; // throws DeltaUnavailable

    // Variant parameters (meaningful for power/call only).
    double exponent() const noexcept { return exponent_; }
    double strike() const noexcept { return strike_; }

private:
    Payoff() = default;

    Kind kind_ = Kind::custom;
    std::function<double(double)> f_;
    std::function<double(double)> f_prime_;
    GrowthEnvelope envelope_;
    GrowthEnvelope deriv_envelope_;
    double exponent_ = 0.0;
    double strike_ = 0.0;
};

} // namespace jumphedge
