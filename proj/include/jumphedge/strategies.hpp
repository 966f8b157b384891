#pragma once

#include <utility>
#include <vector>

#include "jumphedge/market.hpp"
#include "jumphedge/payoff.hpp"
#include "jumphedge/valuation.hpp"

namespace jumphedge {

// Identifies the predictable integrand rule. Replicating and DeltaHedge
// both start from the minimal capital U0 = V(0, s0); Suicide(x) starts
// from x and burns it to zero by the horizon; Combined is a weighted
// portfolio of sub-strategies.
struct Strategy {
    enum class Kind { replicating, delta_hedge, suicide, combined };

    Kind kind = Kind::replicating;
    double suicide_capital = 0.0; // x > 0 when kind == suicide
    std::vector<std::pair<double, Strategy>> components; // kind == combined

    static Strategy replicating() { return Strategy{Kind::replicating, 0.0, {}}; }
    static Strategy delta_hedge() { return Strategy{Kind::delta_hedge, 0.0, {}}; }
    static Strategy suicide(double initial_x);
    static Strategy combined(std::vector<std::pair<double, Strategy>> parts);
};

double initial_capital(const Strategy& strategy, const Payoff& payoff, const ModelParams& params,
                       double tol = kDefaultTol);

// Sampled discounted wealth V^pi along one path. sample_times holds 0, all
// jump times, the optional uniform grid, and T; wealth jumps only at jump
// times, where values_pre carries the left limit.
struct WealthSeries {
    std::vector<double> sample_times;
    std::vector<double> values;     // V_t (right-continuous)
    std::vector<double> values_pre; // left limits V_t-
    double initial_capital = 0.0;
    double quadrature_tol = 0.0;
};

struct WealthOptions {
    int grid_resolution = 0;        // uniform samples added to jumps/endpoints; 0 = none
    double quad_tol = 1e-9;         // compensator-integral tolerance per inter-jump segment
    double tol = kDefaultTol;       // series tolerance for integrand evaluations
    int max_terms = kDefaultMaxTerms;
    bool force_quadrature = false;  // bypass closed-form time integrals (test hook)
};

// phi_t = (V(t, (1+sigma) s) - V(t, s)) / (sigma s), evaluated at s = S_t-.
double replicating_units(const Payoff& payoff, const ModelParams& params, double t,
                         double s_minus, double tol = kDefaultTol);

// delta_t = dV/dx(t, S_t-).
double delta_units(const Payoff& payoff, const ModelParams& params, double t, double s_minus,
                   double tol = kDefaultTol);

// psi~_t = (x / (lambda T)) * prod_{j <= N_t-} (1 + 1/(lambda (T - tau_j))),
// the piecewise-constant predictable integrand whose wealth starts at x and
// hits zero exactly at T. Jumps within 1e-12 of T contribute no factor.
double suicide_integrand(double x, double lambda_rn, double horizon, const JumpPath& path,
                         double t);

// The dX-integrand theta~_t: sigma S_t- units for replicating/delta, psi~
// for suicide, weighted sum for combined.
double normalized_integrand(const Strategy& strategy, const Payoff& payoff,
                            const ModelParams& params, const JumpPath& path, double t,
                            double tol = kDefaultTol);

WealthSeries wealth_process(const Strategy& strategy, const Payoff& payoff,
                            const ModelParams& params, const JumpPath& path,
                            const WealthOptions& options = {});

// Terminal wealth minus f(S_T).
double replication_error(const Strategy& strategy, const Payoff& payoff,
                         const ModelParams& params, const JumpPath& path,
                         const WealthOptions& options = {});

} // namespace jumphedge
