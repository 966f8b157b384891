#include "jumphedge/strategies.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "jumphedge/quadrature.hpp"
#include "jumphedge/stats.hpp"

namespace jumphedge {

namespace {

constexpr double kTerminalJumpGuard = 1e-12; // jumps within this of T add no suicide factor

// Integrand theta~ restricted to one inter-jump segment, where it is either
// coef * exp(theta * u) in closed form (log/power/suicide) or a generic
// smooth function evaluated through the series engine (call/custom).
struct SegmentIntegrand {
    bool exponential = true;
    double coef = 0.0;
    double theta = 0.0;
    std::function<double(double)> generic;

    double eval(double u) const {
        return exponential ? coef * std::exp(theta * u) : generic(u);
    }

    double integrate(double a, double b, double piece_tol) const {
        if (exponential) {
            if (theta == 0.0) return coef * (b - a);
            return coef * (std::exp(theta * b) - std::exp(theta * a)) / theta;
        }
        return adaptive_simpson(generic, a, b, piece_tol);
    }
};

double power_gamma(const ModelParams& params, double a) {
    return params.lambda_rn * (std::pow(1.0 + params.sigma, a) - 1.0) - params.beta * a;
}

double suicide_level(double x, double lambda, double horizon,
                     const std::vector<double>& jump_times, int n_jumps) {
    double psi = x / (lambda * horizon);
    for (int j = 0; j < n_jumps; ++j) {
        const double tau = jump_times[static_cast<std::size_t>(j)];
        if (tau >= horizon - kTerminalJumpGuard) continue;
        psi *= 1.0 + 1.0 / (lambda * (horizon - tau));
    }
    return psi;
}

// Integrand for the inter-jump segment with n_jumps jumps already realized,
// so S_u- = s0 * exp(alpha * n_jumps - beta * u) throughout the segment.
SegmentIntegrand make_integrand(const Strategy& strategy, const Payoff& payoff,
                                const ModelParams& params, const JumpPath& path, int n_jumps,
                                const WealthOptions& options) {
    SegmentIntegrand seg;
    const bool closed_form_ok =
        !options.force_quadrature && (payoff.kind() == Payoff::Kind::log_contract ||
                                      payoff.kind() == Payoff::Kind::power);

    switch (strategy.kind) {
    case Strategy::Kind::replicating:
        if (closed_form_ok) {
            if (payoff.kind() == Payoff::Kind::log_contract) {
                seg.coef = params.alpha;
            } else {
                const double a = payoff.exponent();
                const double gamma = power_gamma(params, a);
                seg.coef = (std::pow(1.0 + params.sigma, a) - 1.0) *
                           std::pow(params.s0 * std::exp(params.alpha * n_jumps), a) *
                           std::exp(gamma * params.horizon);
                seg.theta = -(a * params.beta + gamma);
            }
        } else {
            seg.exponential = false;
            seg.generic = [&payoff, &params, n_jumps, &options](double u) {
                const double s =
                    params.s0 * std::exp(params.alpha * n_jumps - params.beta * u);
                return value(payoff, params, u, (1.0 + params.sigma) * s, options.tol,
                             options.max_terms)
                           .value -
                       value(payoff, params, u, s, options.tol, options.max_terms).value;
            };
        }
        break;
    case Strategy::Kind::delta_hedge:
        if (closed_form_ok) {
            if (payoff.kind() == Payoff::Kind::log_contract) {
                seg.coef = params.sigma;
            } else {
                const double a = payoff.exponent();
                const double gamma = power_gamma(params, a);
                seg.coef = a * params.sigma *
                           std::pow(params.s0 * std::exp(params.alpha * n_jumps), a) *
                           std::exp(gamma * params.horizon);
                seg.theta = -(a * params.beta + gamma);
            }
        } else {
            seg.exponential = false;
            seg.generic = [&payoff, &params, n_jumps, &options](double u) {
                const double s =
                    params.s0 * std::exp(params.alpha * n_jumps - params.beta * u);
                return params.sigma * s *
                       value_delta(payoff, params, u, s, options.tol, options.max_terms).value;
            };
        }
        break;
    case Strategy::Kind::suicide:
        seg.coef = suicide_level(strategy.suicide_capital, params.lambda_rn, path.horizon,
                                 path.jump_times, n_jumps);
        break;
    case Strategy::Kind::combined:
        throw ValidationError("strategy", "combined strategies are integrated per component");
    }
    return seg;
}

double initial_capital_for(const Strategy& strategy, const Payoff& payoff,
                           const ModelParams& params, const WealthOptions& options) {
    switch (strategy.kind) {
    case Strategy::Kind::replicating:
    case Strategy::Kind::delta_hedge:
        return value(payoff, params, 0.0, params.s0, options.tol, options.max_terms).value;
    case Strategy::Kind::suicide:
        return strategy.suicide_capital;
    case Strategy::Kind::combined: {
        double total = 0.0;
        for (const auto& [weight, part] : strategy.components) {
            total += weight * initial_capital_for(part, payoff, params, options);
        }
        return total;
    }
    }
    return 0.0;
}

std::vector<double> build_sample_times(const JumpPath& path, int grid_resolution) {
    std::vector<double> ts;
    ts.reserve(path.jump_times.size() + static_cast<std::size_t>(std::max(grid_resolution, 0)) + 2);
    ts.push_back(0.0);
    ts.insert(ts.end(), path.jump_times.begin(), path.jump_times.end());
    for (int i = 1; i < grid_resolution; ++i) {
        ts.push_back(path.horizon * i / grid_resolution);
    }
    ts.push_back(path.horizon);
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    return ts;
}

} // namespace

Strategy Strategy::suicide(double initial_x) {
    if (!(initial_x > 0.0)) {
        throw ValidationError("x", "suicide strategy requires strictly positive initial capital");
    }
    return Strategy{Kind::suicide, initial_x, {}};
}

Strategy Strategy::combined(std::vector<std::pair<double, Strategy>> parts) {
    if (parts.empty()) {
        throw ValidationError("components", "combined strategy requires at least one component");
    }
    return Strategy{Kind::combined, 0.0, std::move(parts)};
}

double initial_capital(const Strategy& strategy, const Payoff& payoff, const ModelParams& params,
                       double tol) {
    switch (strategy.kind) {
    case Strategy::Kind::replicating:
    case Strategy::Kind::delta_hedge:
        return value(payoff, params, 0.0, params.s0, tol).value;
    case Strategy::Kind::suicide:
        return strategy.suicide_capital;
    case Strategy::Kind::combined: {
        double total = 0.0;
        for (const auto& [weight, part] : strategy.components) {
            total += weight * initial_capital(part, payoff, params, tol);
        }
        return total;
    }
    }
    return 0.0;
}

double replicating_units(const Payoff& payoff, const ModelParams& params, double t,
                         double s_minus, double tol) {
    const double up = value(payoff, params, t, (1.0 + params.sigma) * s_minus, tol).value;
    const double at = value(payoff, params, t, s_minus, tol).value;
    return (up - at) / (params.sigma * s_minus);
}

double delta_units(const Payoff& payoff, const ModelParams& params, double t, double s_minus,
                   double tol) {
    return value_delta(payoff, params, t, s_minus, tol).value;
}

double suicide_integrand(double x, double lambda_rn, double horizon, const JumpPath& path,
                         double t) {
    if (!(x > 0.0)) throw ValidationError("x", "x must be strictly positive");
    const int n = count_before(path, t);
    return suicide_level(x, lambda_rn, horizon, path.jump_times, n);
}

double normalized_integrand(const Strategy& strategy, const Payoff& payoff,
                            const ModelParams& params, const JumpPath& path, double t,
                            double tol) {
    switch (strategy.kind) {
    case Strategy::Kind::replicating: {
        const double s = stock_before(params, path, t);
        return value(payoff, params, t, (1.0 + params.sigma) * s, tol).value -
               value(payoff, params, t, s, tol).value;
    }
    case Strategy::Kind::delta_hedge: {
        const double s = stock_before(params, path, t);
        return params.sigma * s * value_delta(payoff, params, t, s, tol).value;
    }
    case Strategy::Kind::suicide:
        return suicide_integrand(strategy.suicide_capital, params.lambda_rn, params.horizon,
                                 path, t);
    case Strategy::Kind::combined: {
        double total = 0.0;
        for (const auto& [weight, part] : strategy.components) {
            total += weight * normalized_integrand(part, payoff, params, path, t, tol);
        }
        return total;
    }
    }
    return 0.0;
}

WealthSeries wealth_process(const Strategy& strategy, const Payoff& payoff,
                            const ModelParams& params, const JumpPath& path,
                            const WealthOptions& options) {
    if (!(options.quad_tol > 0.0)) {
        throw ValidationError("quad_tol", "quad_tol must be strictly positive");
    }

    if (strategy.kind == Strategy::Kind::combined) {
        WealthSeries combined;
        combined.sample_times = build_sample_times(path, options.grid_resolution);
        combined.values.assign(combined.sample_times.size(), 0.0);
        combined.values_pre.assign(combined.sample_times.size(), 0.0);
        combined.quadrature_tol = options.quad_tol;
        for (const auto& [weight, part] : strategy.components) {
            const WealthSeries w = wealth_process(part, payoff, params, path, options);
            for (std::size_t i = 0; i < w.values.size(); ++i) {
                combined.values[i] += weight * w.values[i];
                combined.values_pre[i] += weight * w.values_pre[i];
            }
            combined.initial_capital += weight * w.initial_capital;
        }
        return combined;
    }

    if (strategy.kind == Strategy::Kind::delta_hedge && !payoff.delta_eligible()) {
        throw DeltaUnavailable("payoff has no usable derivative (delta-hedging unavailable)");
    }

    WealthSeries series;
    series.sample_times = build_sample_times(path, options.grid_resolution);
    series.quadrature_tol = options.quad_tol;
    series.initial_capital = initial_capital_for(strategy, payoff, params, options);

    const std::vector<double>& jumps = path.jump_times;
    const std::size_t n_times = series.sample_times.size();
    series.values.reserve(n_times);
    series.values_pre.reserve(n_times);
    series.values.push_back(series.initial_capital);
    series.values_pre.push_back(series.initial_capital);

    CompensatedSum compensator; // integral of theta~ over [0, t]
    CompensatedSum jump_sum;    // sum of theta~ at jumps <= t
    std::size_t next_jump = 0;
    int n_jumps = 0;
    SegmentIntegrand seg = make_integrand(strategy, payoff, params, path, 0, options);
    double seg_lo = 0.0;
    double seg_hi = jumps.empty() ? path.horizon : jumps.front();

    for (std::size_t i = 1; i < n_times; ++i) {
        const double a = series.sample_times[i - 1];
        const double b = series.sample_times[i];
        const double piece_tol = options.quad_tol * (b - a) / (seg_hi - seg_lo);
        compensator.add(seg.integrate(a, b, piece_tol));

        const double pre = series.initial_capital + jump_sum.value() -
                           params.lambda_rn * compensator.value();
        double val = pre;
        if (next_jump < jumps.size() && jumps[next_jump] == b) {
            const double contribution = seg.eval(b); // pre-jump state by construction
            jump_sum.add(contribution);
            val = pre + contribution;
            ++next_jump;
            ++n_jumps;
            seg = make_integrand(strategy, payoff, params, path, n_jumps, options);
            seg_lo = b;
            seg_hi = next_jump < jumps.size() ? jumps[next_jump] : path.horizon;
        }
        series.values_pre.push_back(pre);
        series.values.push_back(val);
    }
    return series;
}

double replication_error(const Strategy& strategy, const Payoff& payoff,
                         const ModelParams& params, const JumpPath& path,
                         const WealthOptions& options) {
    WealthOptions terminal_only = options;
    terminal_only.grid_resolution = 0;
    const WealthSeries series = wealth_process(strategy, payoff, params, path, terminal_only);
    const double s_terminal = stock_at(params, path, path.horizon);
    return series.values.back() - payoff(s_terminal);
}

} // namespace jumphedge
