#pragma once

#include "jumphedge/market.hpp"
#include "jumphedge/payoff.hpp"

namespace jumphedge {

inline constexpr double kDefaultTol = 1e-12;
inline constexpr int kDefaultMaxTerms = 10000;

// Truncated-series evaluation together with its truncation certificate.
struct SeriesResult {
    double value = 0.0;
    int terms_used = 0;      // cutoff index K; terms k = 0..K were summed
    double tail_bound = 0.0; // certified upper bound on the discarded remainder
};

// Value function V(t, x) = E[ f(S_T) | S_t = x ] as the truncated Poisson
// series, certified so that |value - exact| <= tail_bound <= tol. At t = T
// the series collapses to f(x) exactly.
SeriesResult value(const Payoff& payoff, const ModelParams& params, double t, double x,
                   double tol = kDefaultTol, int max_terms = kDefaultMaxTerms);

// Spatial derivative dV/dx(t, x), available for delta-eligible payoffs only.
SeriesResult value_delta(const Payoff& payoff, const ModelParams& params, double t, double x,
                         double tol = kDefaultTol, int max_terms = kDefaultMaxTerms);

// Exact closed forms for the log and power payoffs:
//   log:      V(t,x) = log x + (lambda*alpha - beta) * (T - t)
//   power(a): V(t,x) = x^a * exp((T-t) * (lambda*((1+sigma)^a - 1) - sigma*lambda*a))
double closed_form_value(const Payoff& payoff, const ModelParams& params, double t, double x);
double closed_form_delta(const Payoff& payoff, const ModelParams& params, double t, double x);

// Smallest K with  sum_{k>K} env(x e^{alpha k + beta t - beta T}) (lambda(T-t))^k / k!  <= tol,
// bounding each envelope term by a Poisson tail at rate inflated by
// e^{p alpha} (resp. e^{q alpha}).
int truncation_cutoff(const GrowthEnvelope& envelope, const ModelParams& params, double t,
                      double x, double tol, int max_terms = kDefaultMaxTerms);

// Envelope majorant of E|f(S_T)|; finite for every well-posed envelope.
// Rejects payoff/parameter combinations whose majorant overflows.
void check_integrable(const Payoff& payoff, const ModelParams& params);

} // namespace jumphedge
