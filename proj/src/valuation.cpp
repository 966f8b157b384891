#include "jumphedge/valuation.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "jumphedge/stats.hpp"

namespace jumphedge {

namespace {

void require_valuation_args(const ModelParams& params, double t, double x, double tol) {
    if (!(t >= 0.0 && t <= params.horizon)) {
        throw ValidationError("t", "time must lie in [0, horizon]");
    }
    if (!(x > 0.0)) throw ValidationError("x", "x must be strictly positive");
    if (!(tol > 0.0)) throw ValidationError("tol", "tol must be strictly positive");
}

// Certified upper bound on sum_{k>K} r^k / k! given next_term = r^(K+1)/(K+1)!.
// Valid (geometric majorant) once K + 2 > r.
double poisson_tail_bound(double rate, int cutoff, double next_term) {
    const double ratio = rate / (cutoff + 2.0);
    if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
    return next_term / (1.0 - ratio);
}

struct CutoffResult {
    int cutoff = 0;
    double raw_tail = 0.0; // bound on sum_{k>K} env(z e^{alpha k}) rate^k / k!
};

// Smallest K with  sum_{k>K} C (1 + z^p e^{p alpha k} + z^-q e^{q alpha k}) rate^k / k! <= tol.
// Each envelope term is a Poisson tail at an inflated rate.
CutoffResult cutoff_core(const GrowthEnvelope& env, double alpha, double rate, double z,
                         double tol, int max_terms) {
    if (rate == 0.0) return {0, 0.0};
    const double coef0 = env.scale;
    const double coef_p = env.scale * std::pow(z, env.growth);
    const double coef_q = env.scale * std::pow(z, -env.decay);
    const double rate_p = rate * std::exp(env.growth * alpha);
    const double rate_q = rate * std::exp(env.decay * alpha);

    double term0 = 1.0, term_p = 1.0, term_q = 1.0; // r^k / k! at k = 0
    for (int k = 0; k <= max_terms; ++k) {
        term0 *= rate / (k + 1);
        term_p *= rate_p / (k + 1);
        term_q *= rate_q / (k + 1);
        const double bound = coef0 * poisson_tail_bound(rate, k, term0) +
                             coef_p * poisson_tail_bound(rate_p, k, term_p) +
                             coef_q * poisson_tail_bound(rate_q, k, term_q);
        if (bound <= tol) return {k, bound};
    }
    throw TruncationFailure(
        "certified tail bound did not reach tol within " + std::to_string(max_terms) +
            " terms (ill-posed envelope or extreme parameters)",
        max_terms);
}

// Shared series driver: prefactor * sum_{k=0..K} g(x e^{alpha k - beta tau}) rate^k / k!.
template <class Term>
SeriesResult sum_series(const GrowthEnvelope& env, const ModelParams& params, double tau,
                        double x, double rate, double prefactor, double tol, int max_terms,
                        Term&& g) {
    const double z = x * std::exp(-params.beta * tau);
    const auto cut = cutoff_core(env, params.alpha, rate, z, tol, max_terms);

    CompensatedSum acc;
    double weight = prefactor; // prefactor * rate^k / k!
    for (int k = 0; k <= cut.cutoff; ++k) {
        if (weight == 0.0) break;
        const double y = x * std::exp(params.alpha * k - params.beta * tau);
        const double term = weight * g(y);
        if (!std::isfinite(term)) {
            throw TruncationFailure("series term overflowed before the certified cutoff", k);
        }
        acc.add(term);
        weight *= rate / (k + 1);
    }
    return SeriesResult{acc.value(), cut.cutoff, prefactor * cut.raw_tail};
}

} // namespace

SeriesResult value(const Payoff& payoff, const ModelParams& params, double t, double x,
                   double tol, int max_terms) {
    require_valuation_args(params, t, x, tol);
    const double tau = params.horizon - t;
    if (tau == 0.0) return SeriesResult{payoff(x), 0, 0.0};
    const double rate = params.lambda_rn * tau;
    if (rate > 700.0) {
        throw TruncationFailure("lambda * (T - t) too large for a stable series weight", 0);
    }
    return sum_series(payoff.envelope(), params, tau, x, rate, std::exp(-rate), tol, max_terms,
                      [&payoff](double y) { return payoff(y); });
}

SeriesResult value_delta(const Payoff& payoff, const ModelParams& params, double t, double x,
                         double tol, int max_terms) {
    require_valuation_args(params, t, x, tol);
    const GrowthEnvelope& denv = payoff.derivative_envelope(); // throws DeltaUnavailable
    const double tau = params.horizon - t;
    if (tau == 0.0) return SeriesResult{payoff.derivative(x), 0, 0.0};
    const double rate = std::exp(params.alpha) * params.lambda_rn * tau;
    if (rate > 700.0) {
        throw TruncationFailure("inflated rate too large for a stable series weight", 0);
    }
    const double prefactor = std::exp(-(params.lambda_rn + params.beta) * tau);
    return sum_series(denv, params, tau, x, rate, prefactor, tol, max_terms,
                      [&payoff](double y) { return payoff.derivative(y); });
}

double closed_form_value(const Payoff& payoff, const ModelParams& params, double t, double x) {
    require_valuation_args(params, t, x, 1.0);
    const double tau = params.horizon - t;
    switch (payoff.kind()) {
    case Payoff::Kind::log_contract:
        return std::log(x) + (params.lambda_rn * params.alpha - params.beta) * tau;
    case Payoff::Kind::power: {
        const double a = payoff.exponent();
        const double gamma =
            params.lambda_rn * (std::pow(1.0 + params.sigma, a) - 1.0) - params.beta * a;
        return std::pow(x, a) * std::exp(gamma * tau);
    }
    default:
        throw ValidationError("payoff", "closed form available only for log and power payoffs");
    }
}

double closed_form_delta(const Payoff& payoff, const ModelParams& params, double t, double x) {
    require_valuation_args(params, t, x, 1.0);
    const double tau = params.horizon - t;
    switch (payoff.kind()) {
    case Payoff::Kind::log_contract:
        return 1.0 / x;
    case Payoff::Kind::power: {
        const double a = payoff.exponent();
        const double gamma =
            params.lambda_rn * (std::pow(1.0 + params.sigma, a) - 1.0) - params.beta * a;
        return a * std::pow(x, a - 1.0) * std::exp(gamma * tau);
    }
    default:
        throw ValidationError("payoff", "closed form available only for log and power payoffs");
    }
}

int truncation_cutoff(const GrowthEnvelope& envelope, const ModelParams& params, double t,
                      double x, double tol, int max_terms) {
    require_valuation_args(params, t, x, tol);
    const double tau = params.horizon - t;
    const double z = x * std::exp(-params.beta * tau);
    return cutoff_core(envelope, params.alpha, params.lambda_rn * tau, z, tol, max_terms).cutoff;
}

void check_integrable(const Payoff& payoff, const ModelParams& params) {
    const GrowthEnvelope& env = payoff.envelope();
    const double rate = params.lambda_rn * params.horizon;
    const double z = params.s0 * std::exp(-params.beta * params.horizon);
    const double majorant =
        env.scale * std::exp(-rate) *
        (std::exp(rate) + std::pow(z, env.growth) * std::exp(rate * std::exp(env.growth * params.alpha)) +
         std::pow(z, -env.decay) * std::exp(rate * std::exp(env.decay * params.alpha)));
    if (!std::isfinite(majorant)) {
        throw ValidationError("payoff",
                              "payoff growth envelope is not integrable for these parameters");
    }
}

} // namespace jumphedge
