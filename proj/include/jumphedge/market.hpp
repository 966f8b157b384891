#pragma once

#include <cstdint>
#include <vector>

#include "jumphedge/errors.hpp"

namespace jumphedge {

// Market constants of the Poisson jump model. The discounted stock is
//   S_t = s0 * exp(alpha * N_t - beta * t)
// with alpha = log(1 + sigma) and beta = sigma * lambda_rn, which makes S a
// strictly positive martingale under the risk-neutral intensity lambda_rn.
struct ModelParams {
    double s0 = 0.0;        // initial price, > 0
    double sigma = 0.0;     // relative jump size, > 0
    double lambda_rn = 0.0; // risk-neutral jump intensity, > 0
    double horizon = 0.0;   // maturity T, > 0
    double alpha = 0.0;     // log(1 + sigma), derived
    double beta = 0.0;      // sigma * lambda_rn, derived
};

// Validates positivity and fills the derived fields.
ModelParams derive_params(double s0, double sigma, double lambda_rn, double horizon);

// One realized Poisson trajectory: strictly increasing jump times in (0, T].
struct JumpPath {
    std::vector<double> jump_times;
    double intensity_used = 0.0; // sampling intensity (bookkeeping only)
    double horizon = 0.0;
};

// Validating constructor for hand-built paths.
JumpPath make_jump_path(std::vector<double> jump_times, double intensity, double horizon);

int count_at(const JumpPath& path, double t);     // N_t  (jumps <= t)
int count_before(const JumpPath& path, double t); // N_t- (jumps <  t)

double stock_at(const ModelParams& params, const JumpPath& path, double t);     // S_t
double stock_before(const ModelParams& params, const JumpPath& path, double t); // S_t-

// Exponential-interarrival sampling, truncated at the horizon. Fully
// deterministic given (seed, path_index); see PathRng.
JumpPath sample_path(std::uint64_t seed, std::uint64_t path_index, double intensity,
                     double horizon);

} // namespace jumphedge
