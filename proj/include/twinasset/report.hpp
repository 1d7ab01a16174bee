#pragma once

#include "twinasset/experiment_harness.hpp"
#include "twinasset/stochastic_engine.hpp"

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace twinasset {

/// Shortest decimal text that round-trips to the same double. Independent
/// of the global locale.
std::string format_number(double value);

/// `t,s_i,s_j,s_j_predicted`, one row per grid time.
void write_path_csv(std::ostream& out, const PathPair& paths, const std::vector<double>& predicted);

/// Long-format grid: `rho,alpha,mape,se`, rho-major.
void write_grid_csv(std::ostream& out, const MapeGrid& grid);

/// Several grids tagged by a leading column (e.g. `sigma_j` or `horizon`).
void write_tagged_grids_csv(std::ostream& out, std::string_view tag, const std::vector<double>& tags,
                            const std::vector<MapeGrid>& grids);

/// `key=value` lines for a price summary.
void write_price_record(std::ostream& out, const TwinPriceSummary& summary, double alpha, std::size_t n);

/// Writes `content` to a sibling temporary file and renames it over `path`,
/// so a failed run never leaves a partial file behind. Throws IoError.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace twinasset
