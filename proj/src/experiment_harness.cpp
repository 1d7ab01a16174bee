#include "twinasset/experiment_harness.hpp"

#include "twinasset/errors.hpp"
#include "twinasset/parallel.hpp"
#include "twinasset/twin_core.hpp"

#include <cmath>
#include <string>

namespace twinasset {

void GridSpec::validate() const {
    if (rho_values.empty() || alpha_values.empty()) {
        throw InvalidArgument("rho and alpha grids must be non-empty");
    }
    for (double rho : rho_values) {
        if (!(rho >= -1.0 && rho <= 1.0)) {
            throw InvalidArgument("rho grid value outside [-1, 1]: " + std::to_string(rho));
        }
    }
    for (double a : alpha_values) {
        if (!(a > 0.0) || !std::isfinite(a)) {
            throw UnsupportedSimilarity("alpha grid values must be positive, got " + std::to_string(a));
        }
    }
    if (n_replications < 1) {
        throw InvalidArgument("n_replications must be at least 1");
    }
    if (!(horizon > 0.0) || !std::isfinite(horizon)) {
        throw InvalidArgument("horizon must be positive");
    }
}

double alpha_to_mu_j(double alpha_target, double mu_i, double sigma_i, double sigma_j) {
    if (!(sigma_i > 0.0) || !(sigma_j > 0.0)) {
        throw InvalidArgument("volatilities must be positive");
    }
    if (mu_i == 0.0) {
        throw UndefinedAlpha("alpha cannot be imposed with mu_i = 0");
    }
    if (!(alpha_target > 0.0)) {
        throw InvalidArgument("alpha_target must be positive");
    }
    return alpha_target * sigma_j * mu_i / sigma_i;
}

namespace {

TwinPair cell_pair(const TwinPair& base, double rho, double alpha_target) {
    TwinPair pair = base;
    pair.rho = rho;
    pair.asset_j.mu = alpha_to_mu_j(alpha_target, base.asset_i.mu, base.asset_i.sigma, base.asset_j.sigma);
    pair.validate();
    return pair;
}

struct BlockResult {
    RunningStats stats;
    std::uint64_t clipped = 0;
};

// Evaluates `sample(pair, draw, clipped)` for every replication of every
// cell. Work is split into (cell, block) units; each unit owns one slot and
// slots are merged in a fixed order afterwards.
template <class Sample>
MapeGrid run_grid(const TwinPair& base, const GridSpec& grid, const ExecutionOptions& exec, Sample&& sample) {
    grid.validate();
    base.validate();

    const std::size_t n_rho = grid.rho_values.size();
    const std::size_t n_alpha = grid.alpha_values.size();
    const std::size_t n_cells = n_rho * n_alpha;
    const std::size_t n_blocks = (grid.n_replications + kReplicationBlock - 1) / kReplicationBlock;

    std::vector<TwinPair> pairs;
    pairs.reserve(n_cells);
    for (double rho : grid.rho_values) {
        for (double a : grid.alpha_values) {
            pairs.push_back(cell_pair(base, rho, a));
        }
    }

    std::vector<BlockResult> blocks(n_cells * n_blocks);
    parallel_for(blocks.size(), exec.threads, [&](std::size_t unit) {
        const std::size_t cell = unit / n_blocks;
        const std::size_t block = unit % n_blocks;
        const std::size_t begin = block * kReplicationBlock;
        const std::size_t end = std::min(grid.n_replications, begin + kReplicationBlock);
        BlockResult& slot = blocks[unit];
        for (std::size_t n = begin; n < end; ++n) {
            bool clipped = false;
            slot.stats.push(sample(pairs[cell], draw_noise(grid.master_seed, n), clipped));
            slot.clipped += clipped ? 1 : 0;
        }
    });

    MapeGrid out;
    out.spec = grid;
    out.sigma_j = base.asset_j.sigma;
    out.mape.resize(n_cells);
    out.standard_errors.resize(n_cells);
    for (std::size_t cell = 0; cell < n_cells; ++cell) {
        RunningStats total;
        for (std::size_t block = 0; block < n_blocks; ++block) {
            const BlockResult& part = blocks[cell * n_blocks + block];
            total.merge(part.stats);
            out.clipped += part.clipped;
        }
        out.mape[cell] = total.mean();
        out.standard_errors[cell] = total.standard_error();
    }
    return out;
}

}  // namespace

MapeGrid mape_asset(const TwinPair& base, const GridSpec& grid, const ExecutionOptions& exec) {
    const double tau = grid.horizon;
    return run_grid(base, grid, exec, [tau](const TwinPair& pair, const NoiseDraw& draw, bool&) {
        const auto [s_i, s_j] = terminal_pair(pair, tau, draw);
        const double estimate = predict_twin(s_i, twin_terms(pair, tau, draw));
        return 100.0 * std::abs((estimate - s_j) / s_j);
    });
}

MapeGrid mape_option(const TwinPair& base, const OptionSpec& spec, const GridSpec& grid,
                     const ExecutionOptions& exec) {
    spec.validate();
    base.validate();
    const double benchmark = bs_call(base.asset_j.spot, spec, base.asset_j.sigma);
    if (!(benchmark > 0.0)) {
        throw NumericalError("Black-Scholes benchmark is zero; option MAPE is undefined", benchmark, 0.0);
    }
    return run_grid(base, grid, exec, [&spec, benchmark](const TwinPair& pair, const NoiseDraw& draw, bool& clipped) {
        const TwinPriceResult twin = twin_call(pair, spec, draw);
        clipped = twin.clipped;
        return 100.0 * std::abs((twin.price - benchmark) / benchmark);
    });
}

std::vector<MapeGrid> sigma_sweep(const TwinPair& base, const std::vector<double>& sigmas_j, const GridSpec& grid,
                                  const ExecutionOptions& exec) {
    for (double sigma : sigmas_j) {
        if (!(sigma > 0.0) || !std::isfinite(sigma)) {
            throw InvalidArgument("sigma_j sweep values must be positive");
        }
    }
    std::vector<MapeGrid> out;
    out.reserve(sigmas_j.size());
    for (double sigma : sigmas_j) {
        TwinPair pair = base;
        pair.asset_j.sigma = sigma;
        out.push_back(mape_asset(pair, grid, exec));
    }
    return out;
}

std::vector<MapeGrid> horizon_compare(const TwinPair& base, const std::vector<double>& horizons,
                                      const GridSpec& grid, const ExecutionOptions& exec) {
    std::vector<MapeGrid> out;
    out.reserve(horizons.size());
    for (double horizon : horizons) {
        GridSpec g = grid;
        g.horizon = horizon;
        out.push_back(mape_asset(base, g, exec));
    }
    return out;
}

TwinPriceSummary price_summary(const TwinPair& pair, const OptionSpec& spec, std::size_t n_replications,
                               std::uint64_t master_seed, const ExecutionOptions& exec) {
    pair.validate();
    spec.validate();
    if (n_replications < 1) {
        throw InvalidArgument("n_replications must be at least 1");
    }
    const std::size_t n_blocks = (n_replications + kReplicationBlock - 1) / kReplicationBlock;
    std::vector<BlockResult> blocks(n_blocks);
    parallel_for(n_blocks, exec.threads, [&](std::size_t block) {
        const std::size_t begin = block * kReplicationBlock;
        const std::size_t end = std::min(n_replications, begin + kReplicationBlock);
        for (std::size_t n = begin; n < end; ++n) {
            const TwinPriceResult twin = twin_call(pair, spec, draw_noise(master_seed, n));
            blocks[block].stats.push(twin.price);
            blocks[block].clipped += twin.clipped ? 1 : 0;
        }
    });

    RunningStats total;
    TwinPriceSummary out;
    for (const auto& block : blocks) {
        total.merge(block.stats);
        out.clipped += block.clipped;
    }
    out.bs_price = bs_call(pair.asset_j.spot, spec, pair.asset_j.sigma);
    out.twin_price_mean = total.mean();
    out.twin_price_se = total.standard_error();
    return out;
}

std::vector<double> linear_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !std::isfinite(start) || !std::isfinite(stop) || stop < start) {
        throw InvalidArgument("grid needs start <= stop and a positive step");
    }
    const double span = (stop - start) / step;
    const auto n = static_cast<std::size_t>(std::floor(span + 1e-9));
    std::vector<double> values;
    values.reserve(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        values.push_back(start + static_cast<double>(k) * step);
    }
    if (std::abs(span - static_cast<double>(n)) < 1e-9) {
        values.back() = stop;
    }
    return values;
}

std::vector<double> default_rho_grid() {
    std::vector<double> values;
    for (int k = -10; k <= 10; ++k) {
        values.push_back(k / 10.0);
    }
    return values;
}

std::vector<double> default_alpha_grid() {
    std::vector<double> values;
    for (int k = 10; k <= 30; ++k) {
        values.push_back(k / 20.0);
    }
    return values;
}

TwinPair reference_pair() {
    return TwinPair{AssetParams{0.4, 0.2, 80.0}, AssetParams{0.8, 0.4, 90.0}, 1.0};
}

OptionSpec reference_option() {
    return OptionSpec{90.0, kThreeMonths, 0.05};
}

}  // namespace twinasset
