#include "jumphedge/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "jumphedge/parallel.hpp"
#include "jumphedge/stats.hpp"

namespace jumphedge {

ErrorStats summarize_errors(const std::vector<double>& errors, std::uint64_t seed,
                            double intensity) {
    if (errors.empty()) throw ValidationError("n_paths", "at least one path is required");
    ErrorStats stats;
    stats.n_paths = errors.size();
    stats.seed = seed;
    stats.intensity_used = intensity;

    const double n = static_cast<double>(errors.size());
    stats.mean = pairwise_sum(errors) / n;

    std::vector<double> scratch(errors.size());
    for (std::size_t i = 0; i < errors.size(); ++i) {
        const double d = errors[i] - stats.mean;
        scratch[i] = d * d;
    }
    stats.std_dev = errors.size() > 1 ? std::sqrt(pairwise_sum(scratch) / (n - 1.0)) : 0.0;
    stats.standard_error = stats.std_dev / std::sqrt(n);

    constexpr double z99 = 2.5758293035489004; // Phi^-1(0.995)
    stats.ci99_low = stats.mean - z99 * stats.standard_error;
    stats.ci99_high = stats.mean + z99 * stats.standard_error;

    const auto [mn, mx] = std::minmax_element(errors.begin(), errors.end());
    stats.min = *mn;
    stats.max = *mx;

    for (std::size_t i = 0; i < errors.size(); ++i) scratch[i] = errors[i] * errors[i];
    stats.rmse = std::sqrt(pairwise_sum(scratch) / n);
    return stats;
}

ErrorStats simulate_errors(const Strategy& strategy, const Payoff& payoff,
                           const ModelParams& params, double real_intensity,
                           std::size_t n_paths, std::uint64_t seed, const SimOptions& options) {
    if (n_paths < 1) throw ValidationError("n_paths", "at least one path is required");
    if (!(real_intensity > 0.0)) {
        throw ValidationError("real_intensity", "real_intensity must be strictly positive");
    }
    WealthOptions wealth_options;
    wealth_options.grid_resolution = 0;
    wealth_options.quad_tol = options.quad_tol;
    wealth_options.tol = options.tol;
    wealth_options.max_terms = options.max_terms;

    std::vector<double> errors(n_paths);
    detail::parallel_for_index(n_paths, options.threads, [&](std::size_t i) {
        const JumpPath path = sample_path(seed, i, real_intensity, params.horizon);
        errors[i] = replication_error(strategy, payoff, params, path, wealth_options);
    });
    return summarize_errors(errors, seed, real_intensity);
}

std::vector<CheckpointStat> martingale_diagnostic(const Payoff& payoff,
                                                  const ModelParams& params,
                                                  const std::vector<double>& t_checkpoints,
                                                  std::size_t n_paths, std::uint64_t seed,
                                                  const SimOptions& options) {
    if (n_paths < 1) throw ValidationError("n_paths", "at least one path is required");
    for (double t : t_checkpoints) {
        if (!(t >= 0.0 && t <= params.horizon)) {
            throw ValidationError("t_checkpoints", "checkpoints must lie in [0, horizon]");
        }
    }

    const std::size_t n_checks = t_checkpoints.size();
    std::vector<std::vector<double>> samples(n_checks, std::vector<double>(n_paths));
    detail::parallel_for_index(n_paths, options.threads, [&](std::size_t i) {
        const JumpPath path = sample_path(seed, i, params.lambda_rn, params.horizon);
        for (std::size_t c = 0; c < n_checks; ++c) {
            const double t = t_checkpoints[c];
            const double s = stock_at(params, path, t);
            samples[c][i] = value(payoff, params, t, s, options.tol, options.max_terms).value;
        }
    });

    std::vector<CheckpointStat> out(n_checks);
    for (std::size_t c = 0; c < n_checks; ++c) {
        const ErrorStats s = summarize_errors(samples[c], seed, params.lambda_rn);
        out[c] = CheckpointStat{t_checkpoints[c], s.mean, s.standard_error};
    }
    return out;
}

ErrorStats minimal_capital_demo(const Payoff& payoff, const ModelParams& params, double x0,
                                std::size_t n_paths, std::uint64_t seed,
                                const SimOptions& options) {
    const double u0 = value(payoff, params, 0.0, params.s0, options.tol, options.max_terms).value;
    if (x0 < u0) {
        throw ValidationError("x0", "initial capital below the minimal replication capital");
    }
    const Strategy strategy =
        x0 == u0 ? Strategy::replicating()
                 : Strategy::combined({{1.0, Strategy::replicating()},
                                       {1.0, Strategy::suicide(x0 - u0)}});
    return simulate_errors(strategy, payoff, params, params.lambda_rn, n_paths, seed, options);
}

} // namespace jumphedge
