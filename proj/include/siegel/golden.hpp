#pragma once

#include <cstdint>
#include <vector>

namespace siegel {

// One reference row: L(1,chi_square), c1..c4 and 1 - c2/log q, retained to
// 20 significant digits from an independent 38-digit computation.
struct GoldenRow {
    uint32_t q;
    double L;
    double c1;
    double c2;
    double c3;
    double c4;
    double beta_upper;
};

struct GoldenTable {
    std::vector<GoldenRow> rows;  // every odd prime q <= 1000, ascending
};

const GoldenTable& golden_table();

}  // namespace siegel
