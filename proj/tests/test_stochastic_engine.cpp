#include "twinasset/errors.hpp"
#include "twinasset/experiment_harness.hpp"
#include "twinasset/statistics.hpp"
#include "twinasset/stochastic_engine.hpp"

#include <doctest.h>

#include <cmath>

using namespace twinasset;

namespace {

// Sample correlation of two equally long series.
double correlation(const std::vector<double>& x, const std::vector<double>& y) {
    RunningStats sx, sy;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx.push(x[k]);
        sy.push(y[k]);
    }
    double cov = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        cov += (x[k] - sx.mean()) * (y[k] - sy.mean());
    }
    cov /= static_cast<double>(x.size() - 1);
    return cov / std::sqrt(sx.variance() * sy.variance());
}

}  // namespace

TEST_CASE("terminal_pair with zero noise follows the drift") {
    const TwinPair pair = reference_pair();
    const auto [s_i, s_j] = terminal_pair(pair, 1.0, NoiseDraw{});
    // 80 e^{0.38} and 90 e^{0.72}, evaluated in 40-digit arithmetic
    CHECK(s_i == doctest::Approx(116.98276715473796).epsilon(1e-14));
    CHECK(s_j == doctest::Approx(184.89898895794990).epsilon(1e-14));
}

TEST_CASE("terminal_pair in the vanishing-volatility limit") {
    TwinPair pair{AssetParams{0.3, 1e-12, 50.0}, AssetParams{-0.1, 1e-12, 20.0}, 0.4};
    const auto [s_i, s_j] = terminal_pair(pair, 2.0, NoiseDraw{1.5, -2.0, 0.0, 0.0});
    CHECK(s_i == doctest::Approx(50.0 * std::exp(0.6)).epsilon(1e-10));
    CHECK(s_j == doctest::Approx(20.0 * std::exp(-0.2)).epsilon(1e-10));
}

TEST_CASE("terminal_pair ignores z_tilde under perfect correlation") {
    const TwinPair pair = reference_pair();
    const auto a = terminal_pair(pair, 0.5, NoiseDraw{0.7, -3.0, 0.0, 0.0});
    const auto b = terminal_pair(pair, 0.5, NoiseDraw{0.7, 2.5, 0.0, 0.0});
    CHECK(a.first == b.first);
    CHECK(a.second == b.second);
}

TEST_CASE("terminal_pair validates inputs") {
    TwinPair pair = reference_pair();
    CHECK_THROWS_AS(terminal_pair(pair, 0.0, NoiseDraw{}), InvalidArgument);
    CHECK_THROWS_AS(terminal_pair(pair, -1.0, NoiseDraw{}), InvalidArgument);
    pair.rho = 1.01;
    CHECK_THROWS_AS(terminal_pair(pair, 1.0, NoiseDraw{}), InvalidArgument);
    pair = reference_pair();
    pair.asset_i.sigma = 0.0;
    CHECK_THROWS_AS(terminal_pair(pair, 1.0, NoiseDraw{}), InvalidArgument);
    pair = reference_pair();
    pair.asset_j.spot = -5.0;
    CHECK_THROWS_AS(terminal_pair(pair, 1.0, NoiseDraw{}), InvalidArgument);
}

TEST_CASE("simulate_paths builds a daily grid deterministically") {
    TwinPair pair = reference_pair();
    pair.rho = 0.3;
    const PathPair p = simulate_paths(pair, 252, kOneDay, 99);
    REQUIRE(p.size() == 253);
    CHECK(p.times.front() == 0.0);
    CHECK(p.times.back() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(p.path_i.front() == 80.0);
    CHECK(p.path_j.front() == 90.0);
    for (std::size_t k = 1; k < p.size(); ++k) {
        CHECK(p.times[k] > p.times[k - 1]);
        CHECK(p.path_i[k] > 0.0);
        CHECK(p.path_j[k] > 0.0);
    }

    const PathPair again = simulate_paths(pair, 252, kOneDay, 99);
    CHECK(again.path_i == p.path_i);
    CHECK(again.path_j == p.path_j);
    const PathPair other = simulate_paths(pair, 252, kOneDay, 100);
    CHECK(other.path_i != p.path_i);

    CHECK_THROWS_AS(simulate_paths(pair, 0, kOneDay, 1), InvalidArgument);
    CHECK_THROWS_AS(simulate_paths(pair, 10, 0.0, 1), InvalidArgument);
}

TEST_CASE("per-step log returns of a long path carry the correlation") {
    for (double rho : {-0.6, 0.0, 0.45, 0.9}) {
        TwinPair pair = reference_pair();
        pair.rho = rho;
        constexpr std::size_t steps = 40000;
        const PathPair p = simulate_paths(pair, steps, kOneDay, 5);
        std::vector<double> r_i, r_j;
        for (std::size_t k = 1; k < p.size(); ++k) {
            r_i.push_back(log_return(p.path_i[k], p.path_i[k - 1]));
            r_j.push_back(log_return(p.path_j[k], p.path_j[k - 1]));
        }
        const double se = (1.0 - rho * rho) / std::sqrt(static_cast<double>(steps));
        CHECK(std::abs(correlation(r_i, r_j) - rho) < 3.0 * std::max(se, 1e-12));
    }
}

TEST_CASE("log_return") {
    CHECK(log_return(80.0, 80.0) == 0.0);
    CHECK(log_return(std::exp(1.0) * 90.0, 90.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK_THROWS_AS(log_return(0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(log_return(1.0, -1.0), InvalidArgument);
}

TEST_CASE("terminal distribution moments") {
    TwinPair pair = reference_pair();
    pair.rho = 0.35;
    const double tau = kOneMonth;
    constexpr std::size_t n = 40000;

    RunningStats r_i, r_j, disc_i, disc_j;
    std::vector<double> xs, ys;
    for (std::size_t k = 0; k < n; ++k) {
        const auto [s_i, s_j] = terminal_pair(pair, tau, draw_noise(17, k));
        r_i.push(log_return(s_i, pair.asset_i.spot));
        r_j.push(log_return(s_j, pair.asset_j.spot));
        disc_i.push(s_i * std::exp(-pair.asset_i.mu * tau));
        disc_j.push(s_j * std::exp(-pair.asset_j.mu * tau));
        xs.push_back(log_return(s_i, pair.asset_i.spot));
        ys.push_back(log_return(s_j, pair.asset_j.spot));
    }
    for (const auto& [stats, asset] : {std::pair{&r_i, pair.asset_i}, std::pair{&r_j, pair.asset_j}}) {
        const double mean = (asset.mu - 0.5 * asset.sigma * asset.sigma) * tau;
        const double var = asset.sigma * asset.sigma * tau;
        CHECK(std::abs(stats->mean() - mean) < 4.0 * std::sqrt(var / n));
        CHECK(std::abs(stats->variance() - var) < 4.0 * var * std::sqrt(2.0 / n));
    }
    CHECK(std::abs(disc_i.mean() - pair.asset_i.spot) < 4.0 * disc_i.standard_error());
    CHECK(std::abs(disc_j.mean() - pair.asset_j.spot) < 4.0 * disc_j.standard_error());
    const double se_rho = (1.0 - pair.rho * pair.rho) / std::sqrt(static_cast<double>(n));
    CHECK(std::abs(correlation(xs, ys) - pair.rho) < 3.0 * se_rho);

    pair.rho = 1.0;
    xs.clear();
    ys.clear();
    for (std::size_t k = 0; k < n; ++k) {
        const auto [s_i, s_j] = terminal_pair(pair, tau, draw_noise(17, k));
        xs.push_back(log_return(s_i, pair.asset_i.spot));
        ys.push_back(log_return(s_j, pair.asset_j.spot));
    }
    CHECK(correlation(xs, ys) >= 0.999);
}
