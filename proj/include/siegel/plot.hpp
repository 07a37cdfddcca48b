#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "siegel/scan.hpp"

namespace siegel {

// Self-contained SVG figures over a scanned column: scatter of (q, value)
// or an equal-width histogram with mean/sigma in the legend. Deterministic
// text output, diffable in tests.
struct PlotSpec {
    enum class Kind { scatter, histogram };
    Kind kind = Kind::scatter;
    std::string column;  // one of c1, c2, uli, lli
    uint32_t qmin = 3;
    uint32_t qmax = 1000;
    size_t bins = 40;    // histogram only
    bool log_x = false;  // scatter only
    std::vector<std::pair<double, std::string>> reference_lines;
    std::string output_path;
};

struct ColumnStats {
    size_t count = 0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
};

// Extracts the named column over rows with qmin <= q <= qmax; rows lacking
// the column (e.g. uli at q=3) are skipped. Throws on unknown column.
std::vector<std::pair<uint32_t, double>> extract_column(
    const std::vector<ScanRow>& rows, const std::string& column, uint32_t qmin,
    uint32_t qmax);

ColumnStats column_stats(const std::vector<std::pair<uint32_t, double>>& points);

// Renders the figure to spec.output_path. Throws std::invalid_argument for
// an unknown column or an empty selection (no file is written then).
void render_plot(const PlotSpec& spec, const std::vector<ScanRow>& rows);

}  // namespace siegel
