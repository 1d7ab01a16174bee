#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace twinasset {

/// Trading-day convention used to express short horizons in years.
inline constexpr double kTradingDaysPerYear = 252.0;
inline constexpr double kOneDay = 1.0 / kTradingDaysPerYear;
inline constexpr double kOneMonth = 21.0 / kTradingDaysPerYear;
inline constexpr double kThreeMonths = 0.25;

/// Lognormal asset dS = mu S dt + sigma S dW.
struct AssetParams {
    double mu = 0.0;     ///< drift per year
    double sigma = 0.0;  ///< volatility per sqrt(year), > 0
    double spot = 0.0;   ///< price at the reference time, > 0

    void validate() const;
};

/// Two assets whose Brownian drivers have instantaneous correlation rho.
/// Asset i is the traded twin; asset j is the one being approximated.
struct TwinPair {
    AssetParams asset_i;
    AssetParams asset_j;
    double rho = 0.0;

    void validate() const;
};

/// Unit normals driving one replication. z_j and z_tilde drive the pair
/// itself; z_x and z_y are the independent noises of the twin approximation.
/// Wiener increments over a horizon tau are z * sqrt(tau).
struct NoiseDraw {
    double z_j = 0.0;
    double z_tilde = 0.0;
    double z_x = 0.0;
    double z_y = 0.0;
};

/// Draw for replication `index` of the experiment seeded by `master_seed`.
/// Pure in its arguments.
NoiseDraw draw_noise(std::uint64_t master_seed, std::uint64_t index);

struct PathPair {
    std::vector<double> times;
    std::vector<double> path_i;
    std::vector<double> path_j;

    std::size_t size() const noexcept { return times.size(); }
};

/// Terminal prices (S_i^T, S_j^T) after `tau` years from the exact lognormal
/// solution. Asset i loads on rho * z_j + sqrt(1 - rho^2) * z_tilde.
std::pair<double, double> terminal_pair(const TwinPair& pair, double tau, const NoiseDraw& draw);

/// Joint path on the grid t_k = k * dt, k = 0..n_steps, stepped with the
/// exact solution. Step k uses draw_noise(seed, k - 1).
PathPair simulate_paths(const TwinPair& pair, std::size_t n_steps, double dt, std::uint64_t seed);

/// ln(s_end / s_start).
double log_return(double s_end, double s_start);

}  // namespace twinasset
