#include "jumphedge/payoff.hpp"

#include <cmath>

namespace jumphedge {

GrowthEnvelope monomial_envelope(double coef, double exponent) {
    return GrowthEnvelope{std::abs(coef), std::max(exponent, 0.0), std::max(-exponent, 0.0)};
}

Payoff Payoff::log_contract() {
    Payoff p;
    p.kind_ = Kind::log_contract;
    p.f_ = [](double y) { return std::log(y); };
    p.f_prime_ = [](double y) { return 1.0 / y; };
    // |log y| <= sqrt(y) + 1/sqrt(y) on (0, inf)
    p.envelope_ = GrowthEnvelope{1.0, 0.5, 0.5};
    p.deriv_envelope_ = monomial_envelope(1.0, -1.0);
    return p;
}

Payoff Payoff::power(double exponent) {
    if (exponent == 0.0) {
        throw ValidationError("exponent", "power payoff requires a nonzero exponent");
    }
    Payoff p;
    p.kind_ = Kind::power;
    p.exponent_ = exponent;
    p.f_ = [exponent](double y) { return std::pow(y, exponent); };
    p.f_prime_ = [exponent](double y) { return exponent * std::pow(y, exponent - 1.0); };
    p.envelope_ = monomial_envelope(1.0, exponent);
    p.deriv_envelope_ = monomial_envelope(exponent, exponent - 1.0);
    return p;
}

Payoff Payoff::call(double strike) {
    if (!(strike > 0.0)) {
        throw ValidationError("strike", "call strike must be strictly positive");
    }
    Payoff p;
    p.kind_ = Kind::call;
    p.strike_ = strike;
    p.f_ = [strike](double y) { return std::max(y - strike, 0.0); };
    p.envelope_ = monomial_envelope(1.0, 1.0);
    return p;
}

Payoff Payoff::custom(std::function<double(double)> f, GrowthEnvelope envelope) {
    if (!f) throw ValidationError("f", "custom payoff requires a function");
    if (!(envelope.scale >= 0.0 && envelope.growth >= 0.0 && envelope.decay >= 0.0)) {
        throw ValidationError("envelope", "growth envelope fields must be nonnegative");
    }
    Payoff p;
    p.kind_ = Kind::custom;
    p.f_ = std::move(f);
    p.envelope_ = envelope;
    return p;
}

Payoff Payoff::custom_c1(std::function<double(double)> f, std::function<double(double)> derivative,
                         GrowthEnvelope envelope, GrowthEnvelope derivative_envelope) {
    Payoff p = custom(std::move(f), envelope);
    if (!derivative) throw ValidationError("derivative", "C1 custom payoff requires a derivative");
    if (!(derivative_envelope.scale >= 0.0 && derivative_envelope.growth >= 0.0 &&
          derivative_envelope.decay >= 0.0)) {
        throw ValidationError("derivative_envelope", "growth envelope fields must be nonnegative");
    }
    p.f_prime_ = std::move(derivative);
    p.deriv_envelope_ = derivative_envelope;
    return p;
}

Payoff Payoff::constant(double c) {
    return custom_c1([c](double) { return c; }, [](double) { return 0.0; },
                     GrowthEnvelope{std::abs(c), 0.0, 0.0}, GrowthEnvelope{0.0, 0.0, 0.0});
}

double Payoff::derivative(double y) const {
    if (!f_prime_) {
        throw DeltaUnavailable("payoff has no usable derivative (delta-hedging unavailable)");
    }
    return f_prime_(y);
}

const GrowthEnvelope& Payoff::derivative_envelope() const {
    if (!f_prime_) {
        throw DeltaUnavailable("payoff has no usable derivative (delta-hedging unavailable)");
    }
    return deriv_envelope_;
}

} // namespace jumphedge
