#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jumphedge/montecarlo.hpp"
#include "jumphedge/payoff.hpp"

namespace jumphedge {

// Diffusion baseline: S_t = s0 * exp(sigma_vol W_t - sigma_vol^2 t / 2).
struct BmsParams {
    double s0 = 0.0;
    double sigma_vol = 0.0; // diffusion volatility (distinct from the jump size)
    double horizon = 0.0;
};

BmsParams make_bms_params(double s0, double sigma_vol, double horizon);

// Closed-form value function for log and power payoffs:
//   log:      V(t,x) = log x - sigma_vol^2 (T-t) / 2
//   power(a): V(t,x) = x^a * exp(a (a-1) sigma_vol^2 (T-t) / 2)
double bms_value(const Payoff& payoff, const BmsParams& params, double t, double x);
double bms_delta(const Payoff& payoff, const BmsParams& params, double t, double x);

// Discretely rebalanced delta hedging on exact (lognormal-step) GBM paths:
// hold dV/dx(t_i, S_{t_i}) on each of n_steps uniform intervals; the
// terminal error shrinks at rate sqrt(dt), unlike the jump model.
ErrorStats bms_discrete_hedge_error(const Payoff& payoff, const BmsParams& params, int n_steps,
                                    std::size_t n_paths, std::uint64_t seed,
                                    unsigned threads = 0);

// One stopped path of the Brownian suicide wealth L, simulated on a grid
// uniform in the quadratic-variation clock (so refined toward T) and frozen
// at zero from the first nonpositive value on.
std::vector<double> bms_suicide_path(double x, const BmsParams& params, int n_grid,
                                     std::uint64_t seed, std::uint64_t path_index);

// Fraction of paths whose stopped value reaches 0 before the horizon.
double bms_suicide_demo(double x, const BmsParams& params, int n_grid, std::size_t n_paths,
                        std::uint64_t seed, unsigned threads = 0);

} // namespace jumphedge
