#include "jumphedge/bms.hpp"

#include <cmath>

#include "jumphedge/parallel.hpp"
#include "jumphedge/rng.hpp"
#include "jumphedge/stats.hpp"

namespace jumphedge {

namespace {

// Quadratic-variation clock horizon for the Brownian suicide demo. The cap
// scales with x^2, so the hit probability before discretization is
// 2 * Phi(-0.01) for every starting level.
constexpr double kClockCapFactor = 1e4;

void require_bms_args(const BmsParams& params, double t, double x) {
    if (!(t >= 0.0 && t <= params.horizon)) {
        throw ValidationError("t", "time must lie in [0, horizon]");
    }
    if (!(x > 0.0)) throw ValidationError("x", "x must be strictly positive");
}

} // namespace

BmsParams make_bms_params(double s0, double sigma_vol, double horizon) {
    if (!(s0 > 0.0)) throw ValidationError("s0", "s0 must be strictly positive");
    if (!(sigma_vol > 0.0)) throw ValidationError("sigma_vol", "sigma_vol must be strictly positive");
    if (!(horizon > 0.0)) throw ValidationError("horizon", "horizon must be strictly positive");
    return BmsParams{s0, sigma_vol, horizon};
}

double bms_value(const Payoff& payoff, const BmsParams& params, double t, double x) {
    require_bms_args(params, t, x);
    const double tau = params.horizon - t;
    const double var = params.sigma_vol * params.sigma_vol * tau;
    switch (payoff.kind()) {
    case Payoff::Kind::log_contract:
        return std::log(x) - 0.5 * var;
    case Payoff::Kind::power: {
        const double a = payoff.exponent();
        return std::pow(x, a) * std::exp(0.5 * a * (a - 1.0) * var);
    }
    default:
        throw ValidationError("payoff", "BMS value available only for log and power payoffs");
    }
}

double bms_delta(const Payoff& payoff, const BmsParams& params, double t, double x) {
    require_bms_args(params, t, x);
    const double tau = params.horizon - t;
    const double var = params.sigma_vol * params.sigma_vol * tau;
    switch (payoff.kind()) {
    case Payoff::Kind::log_contract:
        return 1.0 / x;
    case Payoff::Kind::power: {
        const double a = payoff.exponent();
        return a * std::pow(x, a - 1.0) * std::exp(0.5 * a * (a - 1.0) * var);
    }
    default:
        throw ValidationError("payoff", "BMS delta available only for log and power payoffs");
    }
}

ErrorStats bms_discrete_hedge_error(const Payoff& payoff, const BmsParams& params, int n_steps,
                                    std::size_t n_paths, std::uint64_t seed, unsigned threads) {
    if (n_steps < 1) throw ValidationError("n_steps", "n_steps must be at least 1");
    if (n_paths < 1) throw ValidationError("n_paths", "at least one path is required");
    bms_value(payoff, params, 0.0, params.s0); // rejects unsupported payoffs up front

    const double dt = params.horizon / n_steps;
    const double sq_dt = std::sqrt(dt);
    const double drift = -0.5 * params.sigma_vol * params.sigma_vol * dt;
    const double u0 = bms_value(payoff, params, 0.0, params.s0);

    std::vector<double> errors(n_paths);
    detail::parallel_for_index(n_paths, threads, [&](std::size_t i) {
        PathRng rng(seed, i);
        double stock = params.s0;
        double wealth = u0;
        for (int step = 0; step < n_steps; ++step) {
            const double t = step * dt;
            const double units = bms_delta(payoff, params, t, stock);
            const double next =
                stock * std::exp(params.sigma_vol * sq_dt * rng.next_normal() + drift);
            wealth += units * (next - stock);
            stock = next;
        }
        errors[i] = wealth - payoff(stock);
    });
    return summarize_errors(errors, seed, 0.0);
}

std::vector<double> bms_suicide_path(double x, const BmsParams& params, int n_grid,
                                     std::uint64_t seed, std::uint64_t path_index) {
    require_bms_args(params, 0.0, x);
    if (n_grid < 100) throw ValidationError("n_grid", "n_grid must be at least 100");

    const double step_sd = std::sqrt(kClockCapFactor * x * x / n_grid);
    PathRng rng(seed, path_index);
    std::vector<double> values;
    values.reserve(static_cast<std::size_t>(n_grid) + 1);
    values.push_back(x);
    double level = x;
    bool hit = false;
    for (int i = 0; i < n_grid; ++i) {
        if (!hit) {
            level += step_sd * rng.next_normal();
            if (level <= 0.0) {
                hit = true;
                level = 0.0; // the continuous path would stop exactly at zero
            }
        }
        values.push_back(level);
    }
    return values;
}

double bms_suicide_demo(double x, const BmsParams& params, int n_grid, std::size_t n_paths,
                        std::uint64_t seed, unsigned threads) {
    require_bms_args(params, 0.0, x);
    if (n_grid < 100) throw ValidationError("n_grid", "n_grid must be at least 100");
    if (n_paths < 1) throw ValidationError("n_paths", "at least one path is required");

    const double step_sd = std::sqrt(kClockCapFactor * x * x / n_grid);
    std::vector<double> hits(n_paths);
    detail::parallel_for_index(n_paths, threads, [&](std::size_t i) {
        PathRng rng(seed, i);
        double level = x;
        double hit = 0.0;
        for (int k = 0; k < n_grid; ++k) {
            level += step_sd * rng.next_normal();
            if (level <= 0.0) {
                hit = 1.0;
                break;
            }
        }
        hits[i] = hit;
    });
    return pairwise_sum(hits) / static_cast<double>(n_paths);
}

} // namespace jumphedge
