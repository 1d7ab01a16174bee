#include "twinasset/cli.hpp"

#include "twinasset/errors.hpp"
#include "twinasset/experiment_harness.hpp"
#include "twinasset/report.hpp"
#include "twinasset/twin_core.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>

namespace twinasset::cli {

namespace {

double parse_double(std::string text) {
    text.erase(std::remove_if(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); }),
               text.end());
    double value = 0.0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size() || text.empty()) {
        throw InvalidArgument("not a number: '" + text + "'");
    }
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string item;
    std::istringstream stream(text);
    while (std::getline(stream, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

struct RunConfig {
    std::uint64_t seed = 42;
    std::string out = "-";
    std::string threads = "auto";

    double mu_i = 0.4;
    double mu_j = 0.8;
    double sigma_i = 0.2;
    double sigma_j = 0.4;
    double spot_i = 80.0;
    double spot_j = 90.0;
    double rho = 1.0;
    std::optional<double> alpha;

    std::size_t steps = 252;
    double dt = kOneDay;
    std::optional<std::size_t> n;
    std::string horizon = "day";
    std::optional<double> strike;
    double rate = 0.05;
    double maturity = kThreeMonths;

    std::string mode = "asset";
    std::string rho_grid;
    std::string alpha_grid;
    std::string sigma_grid = "0.2,0.4,0.6";
    std::string horizons = "day,month";

    unsigned thread_count() const {
        if (threads == "auto") {
            return 0;
        }
        const double value = parse_double(threads);
        if (!(value >= 1.0) || value != static_cast<unsigned>(value)) {
            throw InvalidArgument("--threads must be a positive integer or 'auto'");
        }
        return static_cast<unsigned>(value);
    }

    TwinPair pair() const {
        TwinPair p{AssetParams{mu_i, sigma_i, spot_i}, AssetParams{mu_j, sigma_j, spot_j}, rho};
        if (alpha) {
            p.asset_j.mu = alpha_to_mu_j(*alpha, mu_i, sigma_i, sigma_j);
        }
        p.validate();
        return p;
    }

    OptionSpec option() const {
        OptionSpec spec{strike.value_or(spot_j), maturity, rate};
        spec.validate();
        return spec;
    }

    GridSpec grid(std::size_t default_n) const {
        GridSpec g;
        g.rho_values = rho_grid.empty() ? default_rho_grid() : parse_grid(rho_grid);
        g.alpha_values = alpha_grid.empty() ? default_alpha_grid() : parse_grid(alpha_grid);
        g.n_replications = n.value_or(default_n);
        g.horizon = parse_horizon(horizon);
        g.master_seed = seed;
        g.validate();
        return g;
    }
};

void add_options(CLI::App& app, RunConfig& cfg) {
    app.add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    app.add_option("--out", cfg.out, "Output file ('-' for stdout)")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads or 'auto'; never changes results")
        ->capture_default_str();

    app.add_option("--mu-i", cfg.mu_i, "Drift of the traded twin i")->capture_default_str();
    app.add_option("--mu-j", cfg.mu_j, "Drift of asset j")->capture_default_str();
    app.add_option("--sigma-i", cfg.sigma_i, "Volatility of asset i")->capture_default_str();
    app.add_option("--sigma-j", cfg.sigma_j, "Volatility of asset j")->capture_default_str();
    app.add_option("--spot-i", cfg.spot_i, "Initial price of asset i")->capture_default_str();
    app.add_option("--spot-j", cfg.spot_j, "Initial price of asset j")->capture_default_str();
    app.add_option("--rho", cfg.rho, "Return correlation")->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "Impose alpha by setting mu_j (overrides --mu-j)");

    app.add_option("--steps", cfg.steps, "simulate: number of steps")->capture_default_str();
    app.add_option("--dt", cfg.dt, "simulate: step length in years")->capture_default_str();
    app.add_option("--n", cfg.n, "Replications (default 40000 asset, 10000 option)");
    app.add_option("--horizon", cfg.horizon, "Prediction horizon: day, month, quarter or years")
        ->capture_default_str();
    app.add_option("--strike", cfg.strike, "Strike K_j (default: spot of asset j)");
    app.add_option("--rate", cfg.rate, "Risk-free rate")->capture_default_str();
    app.add_option("--maturity", cfg.maturity, "Option maturity in years")->capture_default_str();

    app.add_option("--mode", cfg.mode, "mape: asset | option | sigma-sweep | horizon-compare")
        ->check(CLI::IsMember({"asset", "option", "sigma-sweep", "horizon-compare"}))
        ->capture_default_str();
    app.add_option("--rho-grid", cfg.rho_grid, "rho values: list or start:stop:step (default -1:1:0.1)");
    app.add_option("--alpha-grid", cfg.alpha_grid, "alpha values: list or start:stop:step (default 0.5:1.5:0.05)");
    app.add_option("--sigma-grid", cfg.sigma_grid, "sigma-sweep: sigma_j values")->capture_default_str();
    app.add_option("--horizons", cfg.horizons, "horizon-compare: horizons")->capture_default_str();
}

std::string run_simulate(const RunConfig& cfg) {
    const TwinPair pair = cfg.pair();
    const PathPair paths = simulate_paths(pair, cfg.steps, cfg.dt, cfg.seed);
    const std::vector<double> predicted = predict_path(pair, paths, cfg.seed);
    std::ostringstream out;
    write_path_csv(out, paths, predicted);
    return out.str();
}

std::string run_price(const RunConfig& cfg) {
    const TwinPair pair = cfg.pair();
    const OptionSpec spec = cfg.option();
    const std::size_t n = cfg.n.value_or(kDefaultOptionReplications);
    if (n < 1) {
        throw InvalidArgument("--n must be at least 1");
    }
    const double a = alpha(pair);
    if (!(a > 0.0)) {
        throw UnsupportedSimilarity("twin pricing requires alpha > 0");
    }
    const ExecutionOptions exec{cfg.thread_count()};
    const TwinPriceSummary summary = price_summary(pair, spec, n, cfg.seed, exec);
    std::ostringstream out;
    write_price_record(out, summary, a, n);
    return out.str();
}

std::string run_mape(const RunConfig& cfg) {
    const TwinPair base = cfg.pair();
    const ExecutionOptions exec{cfg.thread_count()};
    std::ostringstream out;
    if (cfg.mode == "asset") {
        write_grid_csv(out, mape_asset(base, cfg.grid(kDefaultAssetReplications), exec));
    } else if (cfg.mode == "option") {
        const OptionSpec spec = cfg.option();
        write_grid_csv(out, mape_option(base, spec, cfg.grid(kDefaultOptionReplications), exec));
    } else if (cfg.mode == "sigma-sweep") {
        const auto sigmas = parse_grid(cfg.sigma_grid);
        const GridSpec grid = cfg.grid(kDefaultAssetReplications);
        write_tagged_grids_csv(out, "sigma_j", sigmas, sigma_sweep(base, sigmas, grid, exec));
    } else {
        std::vector<double> horizons;
        for (const auto& item : split(cfg.horizons, ',')) {
            horizons.push_back(parse_horizon(item));
        }
        if (horizons.empty()) {
            throw InvalidArgument("--horizons must list at least one horizon");
        }
        const GridSpec grid = cfg.grid(kDefaultAssetReplications);
        write_tagged_grids_csv(out, "horizon", horizons, horizon_compare(base, horizons, grid, exec));
    }
    return out.str();
}

void emit(const RunConfig& cfg, const std::string& content, std::ostream& out) {
    if (cfg.out == "-") {
        out << content;
        out.flush();
        if (!out) {
            throw IoError("failed writing to standard output");
        }
        return;
    }
    write_file_atomically(cfg.out, content);
}

std::string one_line(std::string text) {
    std::replace(text.begin(), text.end(), '\n', ' ');
    while (!text.empty() && text.back() == ' ') {
        text.pop_back();
    }
    return text;
}

}  // namespace

std::vector<double> parse_grid(const std::string& text) {
    if (text.find(':') != std::string::npos) {
        const auto parts = split(text, ':');
        if (parts.size() != 3) {
            throw InvalidArgument("range grids take the form start:stop:step, got '" + text + "'");
        }
        return linear_grid(parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2]));
    }
    std::vector<double> values;
    for (const auto& item : split(text, ',')) {
        values.push_back(parse_double(item));
    }
    if (values.empty()) {
        throw InvalidArgument("empty grid");
    }
    return values;
}

double parse_horizon(const std::string& text) {
    double years = 0.0;
    if (text == "day") {
        years = kOneDay;
    } else if (text == "month") {
        years = kOneMonth;
    } else if (text == "quarter") {
        years = kThreeMonths;
    } else {
        years = parse_double(text);
    }
    if (!(years > 0.0)) {
        throw InvalidArgument("horizon must be positive, got '" + text + "'");
    }
    return years;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Monte Carlo engine for twin-asset approximation and option pricing", "twinasset"};
    app.set_config("--config", "", "Optional 'key = value' file; command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig cfg;
    add_options(app, cfg);
    auto* simulate = app.add_subcommand("simulate", "Simulate a joint path and its one-step twin prediction");
    auto* price = app.add_subcommand("price", "Black-Scholes and twin call prices");
    auto* mape = app.add_subcommand("mape", "MAPE over a (rho, alpha) grid");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: usage: " << one_line(e.what()) << '\n';
        return kUsageError;
    }

    try {
        std::string content;
        if (*simulate) {
            content = run_simulate(cfg);
        } else if (*price) {
            content = run_price(cfg);
        } else if (*mape) {
            content = run_mape(cfg);
        }
        emit(cfg, content, out);
    } catch (const InvalidArgument& e) {
        err << "error: usage: " << one_line(e.what()) << '\n';
        return kUsageError;
    } catch (const IoError& e) {
        err << "error: io: " << one_line(e.what()) << '\n';
        return kIoError;
    } catch (const NumericalError& e) {
        err << "error: numerical: " << one_line(e.what()) << '\n';
        return kNumericalError;
    }
    return kSuccess;
}

}  // namespace twinasset::cli
