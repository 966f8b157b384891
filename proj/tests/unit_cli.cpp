#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const fs::path capture =
        fs::temp_directory_path() / ("jh_cli_" + std::to_string(counter++) + ".out");
    const std::string cmd =
        std::string(JUMPHEDGE_CLI_PATH) + " " + args + " > " + capture.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(capture);
    std::stringstream ss;
    ss << in.rdbuf();
    r.output = ss.str();
    fs::remove(capture);
    return r;
}

fs::path fresh_dir(const std::string& tag) {
    const fs::path dir = fs::temp_directory_path() / ("jh_test_" + tag);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// value printed after "<key> " on its own line
double parse_keyed(const std::string& text, const std::string& key) {
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (line.rfind(key + " ", 0) == 0) return std::stod(line.substr(key.size() + 1));
    }
    FAIL("missing output line: ", key);
    return 0.0;
}

std::vector<std::vector<std::string>> read_csv(const fs::path& p) {
    std::vector<std::vector<std::string>> rows;
    std::ifstream in(p);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("value prints the series value and delta for the log payoff") {
    const CliResult r = run_cli("value --payoff log --s0 100 --sigma 0.1 --lambda 1 --horizon 1");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(parse_keyed(r.output, "value") - 4.6004803657924162) <= 1e-7);
    CHECK(std::abs(parse_keyed(r.output, "delta") - 0.01) <= 1e-10);
    CHECK(parse_keyed(r.output, "tail_bound") <= 1e-12);
}

TEST_CASE("value handles constant payoffs") {
    const CliResult r = run_cli("value --payoff const:5");
    CHECK(r.exit_code == 0);
    CHECK(std::abs(parse_keyed(r.output, "value") - 5.0) <= 1e-11);
}

TEST_CASE("exit codes: delta on a call is 3, bad flags and configs are 1") {
    CHECK(run_cli("value --payoff call:100 --strategy delta").exit_code == 3);
    CHECK(run_cli("value --sigma -0.5").exit_code == 1);
    CHECK(run_cli("value --payoff nonsense").exit_code == 1);
    CHECK(run_cli("nonsense-command").exit_code == 1);

    const fs::path dir = fresh_dir("badcfg");
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"sigma": 0.2, "bogus_key": 1})";
    }
    CHECK(run_cli("value --config " + (dir / "cfg.json").string()).exit_code == 1);
}

TEST_CASE("config file values apply and CLI flags override them") {
    const fs::path dir = fresh_dir("cfg");
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"payoff": "log", "sigma": 0.2, "s0": 100.0})";
    }
    const CliResult from_file = run_cli("value --config " + (dir / "cfg.json").string());
    CHECK(from_file.exit_code == 0);
    // sigma 0.2: log(100) + (log(1.2) - 0.2) T
    const double sigma02 = std::log(100.0) + std::log(1.2) - 0.2;
    CHECK(std::abs(parse_keyed(from_file.output, "value") - sigma02) <= 1e-7);

    const CliResult overridden =
        run_cli("value --config " + (dir / "cfg.json").string() + " --sigma 0.1");
    CHECK(std::abs(parse_keyed(overridden.output, "value") - 4.6004803657924162) <= 1e-7);
}

TEST_CASE("path-report emits the pinned header and consistent columns") {
    const fs::path dir = fresh_dir("report");
    const CliResult r = run_cli("path-report --payoff log --seed 31 --grid 16 --out " +
                                dir.string());
    CHECK(r.exit_code == 0);
    const auto rows = read_csv(dir / "path_report.csv");
    REQUIRE(rows.size() >= 3);
    REQUIRE(rows[0] == std::vector<std::string>{"t", "n_jumps", "stock", "wealth_repl",
                                                "wealth_delta", "value_fn"});
    const double u0 = std::stod(rows[1][4]); // wealth_delta at t = 0
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double t = std::stod(rows[i][0]);
        const double n_jumps = std::stod(rows[i][1]);
        const double repl = std::stod(rows[i][3]);
        const double del = std::stod(rows[i][4]);
        const double vf = std::stod(rows[i][5]);
        CHECK(std::abs(repl - vf) <= 1e-8);
        CHECK(std::abs(del - u0 - 0.1 * (n_jumps - t)) <= 1e-9);
    }

    // call payoffs cannot fill the wealth_delta column
    CHECK(run_cli("path-report --payoff call:100 --out " + dir.string()).exit_code == 3);
}

TEST_CASE("simulate writes byte-identical CSV across reruns and thread counts") {
    const fs::path a = fresh_dir("sim_a");
    const fs::path b = fresh_dir("sim_b");
    const std::string base =
        "simulate --payoff log --strategy delta --paths 20000 --seed 99 --real-lambda 2 --out ";
    CHECK(run_cli(base + a.string() + " --threads 1").exit_code == 0);
    CHECK(run_cli(base + b.string() + " --threads 0").exit_code == 0);
    const std::string csv_a = slurp(a / "error_stats.csv");
    CHECK(!csv_a.empty());
    CHECK(csv_a == slurp(b / "error_stats.csv"));

    const auto rows = read_csv(a / "error_stats.csv");
    REQUIRE(rows.size() == 2);
    REQUIRE(rows[0][0] == "n_paths");
    // real-world bias: mean near (sigma - log(1+sigma)) * (lambda' - lambda) * T
    const double mean = std::stod(rows[1][1]);
    const double se = std::stod(rows[1][3]);
    CHECK(std::abs(mean - 0.00468982019567514) <= 3.0 * se);
    CHECK(fs::exists(a / "run_meta.json"));

    // risk-neutral run: the reported 99% CI straddles zero
    const fs::path rn = fresh_dir("sim_rn");
    CHECK(run_cli("simulate --payoff log --strategy delta --paths 20000 --seed 99 --out " +
                  rn.string())
              .exit_code == 0);
    const auto rn_rows = read_csv(rn / "error_stats.csv");
    CHECK(std::stod(rn_rows[1][4]) <= 0.0); // ci99_low
    CHECK(std::stod(rn_rows[1][5]) >= 0.0); // ci99_high
}

TEST_CASE("suicide-demo: wealth dies at T; empty path gives one linear run to zero") {
    const fs::path dir = fresh_dir("suicide");
    const CliResult r = run_cli("suicide-demo --strategy suicide:2 --seed 7 --grid 8 --out " +
                                dir.string());
    CHECK(r.exit_code == 0);
    auto rows = read_csv(dir / "suicide_path.csv");
    REQUIRE(rows[0] == std::vector<std::string>{"t", "n_jumps", "psi", "mart",
                                                "wealth_from_zero"});
    CHECK(std::stod(rows[1][3]) == 2.0);
    CHECK(std::abs(std::stod(rows.back()[3])) <= 1e-9);            // M_T = 0
    CHECK(std::abs(std::stod(rows.back()[4]) - 2.0) <= 1e-9);      // x - M_T = x
    double prev_psi = 0.0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double psi = std::stod(rows[i][2]);
        CHECK(psi > 0.0);
        CHECK(psi >= prev_psi);
        prev_psi = psi;
    }

    // a tiny intensity leaves the path empty: M decays linearly from x to 0
    const fs::path dir2 = fresh_dir("suicide_empty");
    CHECK(run_cli("suicide-demo --strategy suicide:2 --lambda 0.001 --seed 7 --grid 4 --out " +
                  dir2.string())
              .exit_code == 0);
    rows = read_csv(dir2 / "suicide_path.csv");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i][1] == "0");
        const double t = std::stod(rows[i][0]);
        CHECK(std::abs(std::stod(rows[i][3]) - 2.0 * (1.0 - t)) <= 1e-12);
    }
}

TEST_CASE("bms-demo table has strictly decreasing error std") {
    const fs::path dir = fresh_dir("bms");
    const CliResult r = run_cli("bms-demo --payoff log --sigma 0.2 --paths 4000 --seed 13 --out " +
                                dir.string());
    CHECK(r.exit_code == 0);
    const auto rows = read_csv(dir / "bms_table.csv");
    REQUIRE(rows.size() == 4);
    REQUIRE(rows[0][0] == "n_steps");
    double prev = 1e300;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double sd = std::stod(rows[i][3]);
        CHECK(sd < prev);
        prev = sd;
    }
}

} // TEST_SUITE
