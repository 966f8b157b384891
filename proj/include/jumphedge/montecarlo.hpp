#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "jumphedge/strategies.hpp"

namespace jumphedge {

// Monte Carlo summary of terminal replication errors.
struct ErrorStats {
    std::size_t n_paths = 0;
    double mean = 0.0;
    double std_dev = 0.0;
    double standard_error = 0.0; // std_dev / sqrt(n_paths)
    double ci99_low = 0.0;       // normal approximation, symmetric about mean
    double ci99_high = 0.0;
    double min = 0.0;
    double max = 0.0;
    double rmse = 0.0;
    std::uint64_t seed = 0;
    double intensity_used = 0.0;
};

struct SimOptions {
    unsigned threads = 0; // 0 = hardware concurrency
    double quad_tol = 1e-9;
    double tol = kDefaultTol;
    int max_terms = kDefaultMaxTerms;
};

// Deterministic reduction (pairwise, fixed path-index order) of per-path
// errors into summary statistics.
ErrorStats summarize_errors(const std::vector<double>& errors, std::uint64_t seed,
                            double intensity);

// Samples n_paths trajectories at real_intensity (which may differ from the
// risk-neutral lambda), runs the strategy with the risk-neutral compensator,
// and summarizes terminal errors. Aborts on the first TruncationFailure,
// reporting the smallest failing path index.
ErrorStats simulate_errors(const Strategy& strategy, const Payoff& payoff,
                           const ModelParams& params, double real_intensity,
                           std::size_t n_paths, std::uint64_t seed,
                           const SimOptions& options = {});

struct CheckpointStat {
    double t = 0.0;
    double mean = 0.0;
    double standard_error = 0.0;
};

// Mean of V(t, S_t) per checkpoint under risk-neutral sampling; each mean
// should sit within sampling error of V(0, s0).
std::vector<CheckpointStat> martingale_diagnostic(const Payoff& payoff,
                                                  const ModelParams& params,
                                                  const std::vector<double>& t_checkpoints,
                                                  std::size_t n_paths, std::uint64_t seed,
                                                  const SimOptions& options = {});

// Replication from excess capital x0 >= U0 via Replicating + Suicide(x0 - U0).
// Rejects x0 < U0 (impossible admissibly).
ErrorStats minimal_capital_demo(const Payoff& payoff, const ModelParams& params, double x0,
                                std::size_t n_paths, std::uint64_t seed,
                                const SimOptions& options = {});

} // namespace jumphedge
