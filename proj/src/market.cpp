#include "jumphedge/market.hpp"

#include <algorithm>
#include <cmath>

#include "jumphedge/rng.hpp"

namespace jumphedge {

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0)) {
        throw ValidationError(field, std::string(field) + " must be strictly positive");
    }
}

void require_time_in_range(double t, double horizon) {
    if (!(t >= 0.0 && t <= horizon)) {
        throw ValidationError("t", "time must lie in [0, horizon]");
    }
}

} // namespace

ModelParams derive_params(double s0, double sigma, double lambda_rn, double horizon) {
    require_positive(s0, "s0");
    require_positive(sigma, "sigma");
    require_positive(lambda_rn, "lambda_rn");
    require_positive(horizon, "horizon");
    ModelParams p;
    p.s0 = s0;
    p.sigma = sigma;
    p.lambda_rn = lambda_rn;
    p.horizon = horizon;
    p.alpha = std::log1p(sigma);
    p.beta = sigma * lambda_rn;
    return p;
}

JumpPath make_jump_path(std::vector<double> jump_times, double intensity, double horizon) {
    require_positive(intensity, "intensity");
    require_positive(horizon, "horizon");
    double prev = 0.0;
    for (double tau : jump_times) {
        if (!(tau > prev && tau <= horizon)) {
            throw ValidationError("jump_times",
                                  "jump times must be strictly increasing within (0, horizon]");
        }
        prev = tau;
    }
    return JumpPath{std::move(jump_times), intensity, horizon};
}

int count_at(const JumpPath& path, double t) {
    require_time_in_range(t, path.horizon);
    const auto& ts = path.jump_times;
    return static_cast<int>(std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
}

int count_before(const JumpPath& path, double t) {
    require_time_in_range(t, path.horizon);
    const auto& ts = path.jump_times;
    return static_cast<int>(std::lower_bound(ts.begin(), ts.end(), t) - ts.begin());
}

double stock_at(const ModelParams& params, const JumpPath& path, double t) {
    return params.s0 * std::exp(params.alpha * count_at(path, t) - params.beta * t);
}

double stock_before(const ModelParams& params, const JumpPath& path, double t) {
    return params.s0 * std::exp(params.alpha * count_before(path, t) - params.beta * t);
}

JumpPath sample_path(std::uint64_t seed, std::uint64_t path_index, double intensity,
                     double horizon) {
    require_positive(intensity, "intensity");
    require_positive(horizon, "horizon");
    PathRng rng(seed, path_index);
    std::vector<double> times;
    double t = rng.next_exponential(intensity);
    while (t <= horizon) {
        times.push_back(t);
        t += rng.next_exponential(intensity);
    }
    return JumpPath{std::move(times), intensity, horizon};
}

} // namespace jumphedge
