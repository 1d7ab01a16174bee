#pragma once

#include "twinasset/pricing.hpp"
#include "twinasset/statistics.hpp"
#include "twinasset/stochastic_engine.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace twinasset {

/// Grid of similarity parameters to evaluate. alpha is imposed by moving
/// the drift of asset j (see alpha_to_mu_j).
struct GridSpec {
    std::vector<double> rho_values;
    std::vector<double> alpha_values;
    std::size_t n_replications = 0;
    double horizon = kOneDay;  ///< prediction horizon in years (asset mode)
    std::uint64_t master_seed = 0;

    void validate() const;
};

/// MAPE (in percent) and its Monte Carlo standard error per (rho, alpha)
/// cell, stored row-major with rho as the row index.
struct MapeGrid {
    GridSpec spec;
    double sigma_j = 0.0;
    std::vector<double> mape;
    std::vector<double> standard_errors;
    std::uint64_t clipped = 0;  ///< option mode: replications clipped to zero

    std::size_t rows() const noexcept { return spec.rho_values.size(); }
    std::size_t cols() const noexcept { return spec.alpha_values.size(); }
    double at(std::size_t rho_index, std::size_t alpha_index) const {
        return mape.at(rho_index * cols() + alpha_index);
    }
    double se_at(std::size_t rho_index, std::size_t alpha_index) const {
        return standard_errors.at(rho_index * cols() + alpha_index);
    }
};

/// Knobs that affect wall time only, never results.
struct ExecutionOptions {
    unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// Replications per work unit. Partial sums are formed per block and merged
/// in block order, which makes results independent of the thread count.
inline constexpr std::size_t kReplicationBlock = 2048;

/// Drift of asset j that yields the requested alpha:
/// mu_j = alpha * sigma_j * mu_i / sigma_i.
double alpha_to_mu_j(double alpha_target, double mu_i, double sigma_i, double sigma_j);

/// Asset-prediction MAPE: per replication the pair is simulated over
/// `grid.horizon` and S_j^T is compared against its twin estimate built from
/// S_i^T with fresh approximation noise. `base` supplies both assets; its
/// mu_j and rho are overridden per cell.
MapeGrid mape_asset(const TwinPair& base, const GridSpec& grid, const ExecutionOptions& exec = {});

/// Option-pricing MAPE: twin_call per replication against the fixed
/// Black-Scholes price of the call on asset j. `grid.horizon` is unused; the
/// contract's maturity applies.
MapeGrid mape_option(const TwinPair& base, const OptionSpec& spec, const GridSpec& grid,
                     const ExecutionOptions& exec = {});

/// mape_asset repeated for each sigma_j (mu_j is re-derived per cell).
std::vector<MapeGrid> sigma_sweep(const TwinPair& base, const std::vector<double>& sigmas_j,
                                  const GridSpec& grid, const ExecutionOptions& exec = {});

/// mape_asset repeated for each prediction horizon.
std::vector<MapeGrid> horizon_compare(const TwinPair& base, const std::vector<double>& horizons,
                                      const GridSpec& grid, const ExecutionOptions& exec = {});

/// Black-Scholes reference and the Monte Carlo mean of twin_call over
/// `n_replications` draws of (z_x, z_y).
struct TwinPriceSummary {
    double bs_price = 0.0;
    double twin_price_mean = 0.0;
    double twin_price_se = 0.0;
    std::uint64_t clipped = 0;
};

TwinPriceSummary price_summary(const TwinPair& pair, const OptionSpec& spec, std::size_t n_replications,
                               std::uint64_t master_seed, const ExecutionOptions& exec = {});

/// Inclusive arithmetic grid start, start + step, ..., stop (the endpoint is
/// snapped when within 1e-9 steps).
std::vector<double> linear_grid(double start, double stop, double step);

/// rho in {-1, -0.9, ..., 1}.
std::vector<double> default_rho_grid();
/// alpha in {0.5, 0.55, ..., 1.5}.
std::vector<double> default_alpha_grid();

/// Reference parameter set: mu_i = 0.4, mu_j = 0.8, sigma_i = 0.2,
/// sigma_j = 0.4, S_i = 80, S_j = 90, rho = 1 (alpha = 1).
TwinPair reference_pair();
/// K_j = S_j = 90, r = 0.05, three months.
OptionSpec reference_option();

inline constexpr std::size_t kDefaultAssetReplications = 40000;
inline constexpr std::size_t kDefaultOptionReplications = 10000;

}  // namespace twinasset
