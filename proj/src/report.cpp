#include "twinasset/report.hpp"

#include "twinasset/errors.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

namespace twinasset {

std::string format_number(double value) {
    char buffer[64];
    const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) {
        throw IoError("failed to format number");
    }
    return std::string(buffer, end);
}

void write_path_csv(std::ostream& out, const PathPair& paths, const std::vector<double>& predicted) {
    if (predicted.size() != paths.size()) {
        throw InvalidArgument("prediction length does not match path length");
    }
    out << "t,s_i,s_j,s_j_predicted\n";
    for (std::size_t k = 0; k < paths.size(); ++k) {
        out << format_number(paths.times[k]) << ',' << format_number(paths.path_i[k]) << ','
            << format_number(paths.path_j[k]) << ',' << format_number(predicted[k]) << '\n';
    }
}

namespace {

void write_grid_rows(std::ostream& out, const MapeGrid& grid, const std::string& prefix) {
    for (std::size_t r = 0; r < grid.rows(); ++r) {
        for (std::size_t a = 0; a < grid.cols(); ++a) {
            out << prefix << format_number(grid.spec.rho_values[r]) << ','
                << format_number(grid.spec.alpha_values[a]) << ',' << format_number(grid.at(r, a)) << ','
                << format_number(grid.se_at(r, a)) << '\n';
        }
    }
}

}  // namespace

void write_grid_csv(std::ostream& out, const MapeGrid& grid) {
    out << "rho,alpha,mape,se\n";
    write_grid_rows(out, grid, "");
}

void write_tagged_grids_csv(std::ostream& out, std::string_view tag, const std::vector<double>& tags,
                            const std::vector<MapeGrid>& grids) {
    if (tags.size() != grids.size()) {
        throw InvalidArgument("one tag per grid required");
    }
    out << tag << ",rho,alpha,mape,se\n";
    for (std::size_t k = 0; k < grids.size(); ++k) {
        write_grid_rows(out, grids[k], format_number(tags[k]) + ",");
    }
}

void write_price_record(std::ostream& out, const TwinPriceSummary& summary, double alpha, std::size_t n) {
    out << "alpha=" << format_number(alpha) << '\n'
        << "n=" << n << '\n'
        << "bs_price=" << format_number(summary.bs_price) << '\n'
        << "twin_price_mean=" << format_number(summary.twin_price_mean) << '\n'
        << "twin_price_se=" << format_number(summary.twin_price_se) << '\n'
        << "clipped=" << summary.clipped << '\n';
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw IoError("cannot open " + tmp.string() + " for writing");
        }
        file.write(content.data(), static_cast<std::streamsize>(content.size()));
        file.flush();
        if (!file) {
            std::error_code ignored;
            std::filesystem::remove(tmp, ignored);
            throw IoError("failed writing " + tmp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        std::filesystem::remove(tmp, ignored);
        throw IoError("cannot move output into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace twinasset
