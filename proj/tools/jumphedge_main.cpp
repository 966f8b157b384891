// jumphedge: batch experiments in the Poisson jump market — valuation,
// exact replication vs delta hedging, suicide strategies, and the BMS
// discrete-hedging baseline. Subcommands write CSV plus a JSON run-metadata
// file; all randomness flows from a single seed.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jumphedge/bms.hpp"
#include "jumphedge/montecarlo.hpp"
#include "jumphedge/rng.hpp"
#include "jumphedge/strategies.hpp"
#include "jumphedge/valuation.hpp"

namespace jh = jumphedge;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    double s0 = 100.0;
    double sigma = 0.1;
    double lambda = 1.0;
    double real_lambda = -1.0; // <= 0 means "use lambda"
    double horizon = 1.0;
    std::string payoff = "log";
    std::string strategy = "repl";
    std::uint64_t paths = 100000;
    std::uint64_t seed = 12345;
    double tol = 1e-12;
    double quad_tol = 1e-9;
    int grid = 64;
    std::string out = ".";
    unsigned threads = 0; // 0 = all cores
    double x0 = std::numeric_limits<double>::quiet_NaN();

    double sampling_intensity() const { return real_lambda > 0.0 ? real_lambda : lambda; }
};

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void register_common(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "JSON config file (flags override file values)");
    cmd->add_option("--payoff", cfg.payoff, "log|power:a|call:K|const:c");
    cmd->add_option("--strategy", cfg.strategy, "repl|delta|suicide:x|combined");
    cmd->add_option("--s0", cfg.s0, "initial stock price");
    cmd->add_option("--sigma", cfg.sigma, "jump size fraction (diffusion vol for bms-demo)");
    cmd->add_option("--lambda", cfg.lambda, "risk-neutral jump intensity");
    cmd->add_option("--real-lambda", cfg.real_lambda, "real-world sampling intensity");
    cmd->add_option("--horizon", cfg.horizon, "maturity T");
    cmd->add_option("--paths", cfg.paths, "number of Monte Carlo paths");
    cmd->add_option("--seed", cfg.seed, "master seed");
    cmd->add_option("--tol", cfg.tol, "series truncation tolerance");
    cmd->add_option("--quad-tol", cfg.quad_tol, "quadrature tolerance per segment");
    cmd->add_option("--grid", cfg.grid, "uniform sample-grid resolution");
    cmd->add_option("--out", cfg.out, "output directory");
    cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
    cmd->add_option("--x0", cfg.x0, "total initial capital for the combined strategy");
}

// File values fill in only the fields not given on the command line;
// unknown keys are rejected outright.
void apply_config_file(const std::string& path, CLI::App* cmd, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw jh::ValidationError("config", "cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw jh::ValidationError("config", std::string("config parse error: ") + e.what());
    }
    if (!doc.is_object()) throw jh::ValidationError("config", "config root must be an object");

    const auto overridden = [&](const char* flag) { return cmd->count(flag) > 0; };
    for (const auto& [key, val] : doc.items()) {
        try {
            if (key == "s0") { if (!overridden("--s0")) cfg.s0 = val.get<double>(); }
            else if (key == "sigma") { if (!overridden("--sigma")) cfg.sigma = val.get<double>(); }
            else if (key == "lambda") { if (!overridden("--lambda")) cfg.lambda = val.get<double>(); }
            else if (key == "real_lambda") { if (!overridden("--real-lambda")) cfg.real_lambda = val.get<double>(); }
            else if (key == "horizon") { if (!overridden("--horizon")) cfg.horizon = val.get<double>(); }
            else if (key == "payoff") { if (!overridden("--payoff")) cfg.payoff = val.get<std::string>(); }
            else if (key == "strategy") { if (!overridden("--strategy")) cfg.strategy = val.get<std::string>(); }
            else if (key == "paths") { if (!overridden("--paths")) cfg.paths = val.get<std::uint64_t>(); }
            else if (key == "seed") { if (!overridden("--seed")) cfg.seed = val.get<std::uint64_t>(); }
            else if (key == "tol") { if (!overridden("--tol")) cfg.tol = val.get<double>(); }
            else if (key == "quad_tol") { if (!overridden("--quad-tol")) cfg.quad_tol = val.get<double>(); }
            else if (key == "grid") { if (!overridden("--grid")) cfg.grid = val.get<int>(); }
            else if (key == "out") { if (!overridden("--out")) cfg.out = val.get<std::string>(); }
            else if (key == "threads") { if (!overridden("--threads")) cfg.threads = val.get<unsigned>(); }
            else if (key == "x0") { if (!overridden("--x0")) cfg.x0 = val.get<double>(); }
            else {
                throw jh::ValidationError("config", "unknown config key: " + key);
            }
        } catch (const json::exception& e) {
            throw jh::ValidationError("config",
                                      "bad value for config key '" + key + "': " + e.what());
        }
    }
}

jh::Payoff parse_payoff(const std::string& spec) {
    if (spec == "log") return jh::Payoff::log_contract();
    const auto colon = spec.find(':');
    if (colon != std::string::npos) {
        const std::string head = spec.substr(0, colon);
        double arg = 0.0;
        try {
            arg = std::stod(spec.substr(colon + 1));
        } catch (const std::exception&) {
            throw jh::ValidationError("payoff", "bad numeric argument in payoff spec: " + spec);
        }
        if (head == "power") return jh::Payoff::power(arg);
        if (head == "call") return jh::Payoff::call(arg);
        if (head == "const") return jh::Payoff::constant(arg);
    }
    throw jh::ValidationError("payoff", "unknown payoff spec: " + spec);
}

jh::Strategy parse_strategy(const RunConfig& cfg, const jh::Payoff& payoff,
                            const jh::ModelParams& params) {
    const std::string& spec = cfg.strategy;
    if (spec == "repl") return jh::Strategy::replicating();
    if (spec == "delta") return jh::Strategy::delta_hedge();
    if (spec.rfind("suicide:", 0) == 0) {
        double x = 0.0;
        try {
            x = std::stod(spec.substr(8));
        } catch (const std::exception&) {
            throw jh::ValidationError("strategy", "bad numeric argument in strategy spec: " + spec);
        }
        return jh::Strategy::suicide(x);
    }
    if (spec == "combined") {
        const double u0 = jh::value(payoff, params, 0.0, params.s0, cfg.tol).value;
        const double x0 = std::isnan(cfg.x0) ? u0 + 1.0 : cfg.x0;
        if (x0 < u0) {
            throw jh::ValidationError("x0",
                                      "initial capital below the minimal replication capital");
        }
        if (x0 == u0) return jh::Strategy::replicating();
        return jh::Strategy::combined(
            {{1.0, jh::Strategy::replicating()}, {1.0, jh::Strategy::suicide(x0 - u0)}});
    }
    throw jh::ValidationError("strategy", "unknown strategy spec: " + spec);
}

std::filesystem::path ensure_outdir(const RunConfig& cfg) {
    std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    return dir;
}

void write_run_meta(const RunConfig& cfg, const std::string& command,
                    const std::filesystem::path& dir) {
    json meta;
    meta["command"] = command;
    meta["version"] = kVersion;
    meta["rng"] = jh::kRngName;
    meta["seed"] = cfg.seed;
    meta["paths"] = cfg.paths;
    meta["params"] = {{"s0", cfg.s0},
                      {"sigma", cfg.sigma},
                      {"lambda", cfg.lambda},
                      {"real_lambda", cfg.sampling_intensity()},
                      {"horizon", cfg.horizon}};
    meta["payoff"] = cfg.payoff;
    meta["strategy"] = cfg.strategy;
    meta["tolerances"] = {{"tol", cfg.tol}, {"quad_tol", cfg.quad_tol}};
    meta["grid"] = cfg.grid;
    meta["threads"] = cfg.threads;
    std::ofstream out(dir / "run_meta.json");
    out << meta.dump(2) << "\n";
}

int cmd_value(const RunConfig& cfg) {
    const jh::ModelParams params = jh::derive_params(cfg.s0, cfg.sigma, cfg.lambda, cfg.horizon);
    const jh::Payoff payoff = parse_payoff(cfg.payoff);
    jh::check_integrable(payoff, params);

    const jh::SeriesResult v = jh::value(payoff, params, 0.0, params.s0, cfg.tol);
    std::cout << "value " << fmt17(v.value) << "\n";
    std::cout << "terms " << v.terms_used << "\n";
    std::cout << "tail_bound " << fmt17(v.tail_bound) << "\n";

    const bool delta_requested = cfg.strategy == "delta";
    if (delta_requested && !payoff.delta_eligible()) {
        throw jh::DeltaUnavailable("delta requested for a payoff without a usable derivative");
    }
    if (payoff.delta_eligible()) {
        const jh::SeriesResult d = jh::value_delta(payoff, params, 0.0, params.s0, cfg.tol);
        std::cout << "delta " << fmt17(d.value) << "\n";
        std::cout << "delta_terms " << d.terms_used << "\n";
        std::cout << "delta_tail_bound " << fmt17(d.tail_bound) << "\n";
    }
    return 0;
}

int cmd_path_report(const RunConfig& cfg) {
    const jh::ModelParams params = jh::derive_params(cfg.s0, cfg.sigma, cfg.lambda, cfg.horizon);
    const jh::Payoff payoff = parse_payoff(cfg.payoff);
    if (!payoff.delta_eligible()) {
        throw jh::DeltaUnavailable("path-report requires a delta-eligible payoff");
    }

    const jh::JumpPath path = jh::sample_path(cfg.seed, 0, cfg.sampling_intensity(), cfg.horizon);
    jh::WealthOptions opt;
    opt.grid_resolution = cfg.grid;
    opt.quad_tol = cfg.quad_tol;
    opt.tol = cfg.tol;
    const jh::WealthSeries repl =
        jh::wealth_process(jh::Strategy::replicating(), payoff, params, path, opt);
    const jh::WealthSeries del =
        jh::wealth_process(jh::Strategy::delta_hedge(), payoff, params, path, opt);

    const auto dir = ensure_outdir(cfg);
    std::ofstream csv(dir / "path_report.csv");
    csv << "t,n_jumps,stock,wealth_repl,wealth_delta,value_fn\n";
    for (std::size_t i = 0; i < repl.sample_times.size(); ++i) {
        const double t = repl.sample_times[i];
        const double s = jh::stock_at(params, path, t);
        const double vf = jh::value(payoff, params, t, s, cfg.tol).value;
        csv << fmt17(t) << ',' << jh::count_at(path, t) << ',' << fmt17(s) << ','
            << fmt17(repl.values[i]) << ',' << fmt17(del.values[i]) << ',' << fmt17(vf) << "\n";
    }
    write_run_meta(cfg, "path-report", dir);
    std::cout << (dir / "path_report.csv").string() << "\n";
    return 0;
}

int cmd_simulate(const RunConfig& cfg) {
    const jh::ModelParams params = jh::derive_params(cfg.s0, cfg.sigma, cfg.lambda, cfg.horizon);
    const jh::Payoff payoff = parse_payoff(cfg.payoff);
    jh::check_integrable(payoff, params);
    const jh::Strategy strategy = parse_strategy(cfg, payoff, params);

    jh::SimOptions opt;
    opt.threads = cfg.threads;
    opt.quad_tol = cfg.quad_tol;
    opt.tol = cfg.tol;
    const jh::ErrorStats stats = jh::simulate_errors(
        strategy, payoff, params, cfg.sampling_intensity(), cfg.paths, cfg.seed, opt);

    const auto dir = ensure_outdir(cfg);
    std::ofstream csv(dir / "error_stats.csv");
    csv << "n_paths,mean,std,standard_error,ci99_low,ci99_high,min,max,rmse,seed,intensity_used\n";
    csv << stats.n_paths << ',' << fmt17(stats.mean) << ',' << fmt17(stats.std_dev) << ','
        << fmt17(stats.standard_error) << ',' << fmt17(stats.ci99_low) << ','
        << fmt17(stats.ci99_high) << ',' << fmt17(stats.min) << ',' << fmt17(stats.max) << ','
        << fmt17(stats.rmse) << ',' << stats.seed << ',' << fmt17(stats.intensity_used) << "\n";
    write_run_meta(cfg, "simulate", dir);
    std::cout << "mean " << fmt17(stats.mean) << "\n";
    std::cout << "rmse " << fmt17(stats.rmse) << "\n";
    std::cout << (dir / "error_stats.csv").string() << "\n";
    return 0;
}

int cmd_suicide_demo(const RunConfig& cfg) {
    const jh::ModelParams params = jh::derive_params(cfg.s0, cfg.sigma, cfg.lambda, cfg.horizon);
    double x = 1.0;
    if (cfg.strategy.rfind("suicide:", 0) == 0) {
        try {
            x = std::stod(cfg.strategy.substr(8));
        } catch (const std::exception&) {
            throw jh::ValidationError("strategy",
                                      "bad numeric argument in strategy spec: " + cfg.strategy);
        }
    } else if (!std::isnan(cfg.x0)) {
        x = cfg.x0;
    }

    const jh::JumpPath path = jh::sample_path(cfg.seed, 0, cfg.sampling_intensity(), cfg.horizon);
    jh::WealthOptions opt;
    opt.grid_resolution = cfg.grid;
    opt.quad_tol = cfg.quad_tol;
    opt.tol = cfg.tol;
    const jh::WealthSeries mart = jh::wealth_process(
        jh::Strategy::suicide(x), jh::Payoff::constant(0.0), params, path, opt);

    const auto dir = ensure_outdir(cfg);
    std::ofstream csv(dir / "suicide_path.csv");
    csv << "t,n_jumps,psi,mart,wealth_from_zero\n";
    for (std::size_t i = 0; i < mart.sample_times.size(); ++i) {
        const double t = mart.sample_times[i];
        const double psi = jh::suicide_integrand(x, params.lambda_rn, params.horizon, path, t);
        csv << fmt17(t) << ',' << jh::count_at(path, t) << ',' << fmt17(psi) << ','
            << fmt17(mart.values[i]) << ',' << fmt17(x - mart.values[i]) << "\n";
    }
    write_run_meta(cfg, "suicide-demo", dir);
    std::cout << (dir / "suicide_path.csv").string() << "\n";
    return 0;
}

int cmd_bms_demo(const RunConfig& cfg) {
    const jh::BmsParams params = jh::make_bms_params(cfg.s0, cfg.sigma, cfg.horizon);
    const jh::Payoff payoff = parse_payoff(cfg.payoff);

    const auto dir = ensure_outdir(cfg);
    std::ofstream csv(dir / "bms_table.csv");
    csv << "n_steps,n_paths,mean,std,standard_error,rmse\n";
    for (int steps : {64, 256, 1024}) {
        const jh::ErrorStats s =
            jh::bms_discrete_hedge_error(payoff, params, steps, cfg.paths, cfg.seed, cfg.threads);
        csv << steps << ',' << s.n_paths << ',' << fmt17(s.mean) << ',' << fmt17(s.std_dev) << ','
            << fmt17(s.standard_error) << ',' << fmt17(s.rmse) << "\n";
    }
    write_run_meta(cfg, "bms-demo", dir);
    std::cout << (dir / "bms_table.csv").string() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poisson jump-market hedging experiments"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_path;
    CLI::App* value_cmd = app.add_subcommand("value", "value and delta at (0, s0)");
    CLI::App* report_cmd = app.add_subcommand("path-report", "per-sample-time CSV on one path");
    CLI::App* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo replication errors");
    CLI::App* suicide_cmd = app.add_subcommand("suicide-demo", "suicide integrand and wealth CSV");
    CLI::App* bms_cmd = app.add_subcommand("bms-demo", "BMS discrete-hedging convergence table");
    for (CLI::App* cmd : {value_cmd, report_cmd, simulate_cmd, suicide_cmd, bms_cmd}) {
        register_common(cmd, cfg, config_path);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    CLI::App* active = app.get_subcommands().front();
    try {
        if (!config_path.empty()) apply_config_file(config_path, active, cfg);
        if (active == value_cmd) return cmd_value(cfg);
        if (active == report_cmd) return cmd_path_report(cfg);
        if (active == simulate_cmd) return cmd_simulate(cfg);
        if (active == suicide_cmd) return cmd_suicide_demo(cfg);
        return cmd_bms_demo(cfg);
    } catch (const jh::DeltaUnavailable& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const jh::TruncationFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const jh::QuadratureFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const jh::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
