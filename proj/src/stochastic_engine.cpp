#include "twinasset/stochastic_engine.hpp"

#include "twinasset/errors.hpp"
#include "twinasset/random.hpp"

#include <cmath>
#include <random>
#include <string>

namespace twinasset {

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InvalidArgument(std::string(name) + " must be positive and finite, got " + std::to_string(value));
    }
}

}  // namespace

void AssetParams::validate() const {
    if (!std::isfinite(mu)) {
        throw InvalidArgument("mu must be finite");
    }
    require_positive(sigma, "sigma");
    require_positive(spot, "spot");
}

void TwinPair::validate() const {
    asset_i.validate();
    asset_j.validate();
    if (!(rho >= -1.0 && rho <= 1.0)) {
        throw InvalidArgument("rho must lie in [-1, 1], got " + std::to_string(rho));
    }
}

NoiseDraw draw_noise(std::uint64_t master_seed, std::uint64_t index) {
    CounterRng rng(master_seed, index);
    std::normal_distribution<double> normal;
    NoiseDraw draw;
    draw.z_j = normal(rng);
    draw.z_tilde = normal(rng);
    draw.z_x = normal(rng);
    draw.z_y = normal(rng);
    return draw;
}

std::pair<double, double> terminal_pair(const TwinPair& pair, double tau, const NoiseDraw& draw) {
    pair.validate();
    require_positive(tau, "tau");

    const auto& ai = pair.asset_i;
    const auto& aj = pair.asset_j;
    const double root_tau = std::sqrt(tau);
    const double w_i = (pair.rho * draw.z_j + std::sqrt(1.0 - pair.rho * pair.rho) * draw.z_tilde) * root_tau;
    const double w_j = draw.z_j * root_tau;

    const double s_i = ai.spot * std::exp((ai.mu - 0.5 * ai.sigma * ai.sigma) * tau + ai.sigma * w_i);
    const double s_j = aj.spot * std::exp((aj.mu - 0.5 * aj.sigma * aj.sigma) * tau + aj.sigma * w_j);
    return {s_i, s_j};
}

PathPair simulate_paths(const TwinPair& pair, std::size_t n_steps, double dt, std::uint64_t seed) {
    pair.validate();
    if (n_steps < 1) {
        throw InvalidArgument("n_steps must be at least 1");
    }
    require_positive(dt, "dt");

    PathPair out;
    out.times.reserve(n_steps + 1);
    out.path_i.reserve(n_steps + 1);
    out.path_j.reserve(n_steps + 1);
    out.times.push_back(0.0);
    out.path_i.push_back(pair.asset_i.spot);
    out.path_j.push_back(pair.asset_j.spot);

    TwinPair state = pair;
    for (std::size_t k = 1; k <= n_steps; ++k) {
        const auto [s_i, s_j] = terminal_pair(state, dt, draw_noise(seed, k - 1));
        state.asset_i.spot = s_i;
        state.asset_j.spot = s_j;
        out.times.push_back(static_cast<double>(k) * dt);
        out.path_i.push_back(s_i);
        out.path_j.push_back(s_j);
    }
    return out;
}

double log_return(double s_end, double s_start) {
    require_positive(s_end, "s_end");
    require_positive(s_start, "s_start");
    return std::log(s_end / s_start);
}

}  // namespace twinasset
