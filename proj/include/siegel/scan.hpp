#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "siegel/bounds.hpp"
#include "siegel/golden.hpp"
#include "siegel/lfun.hpp"

namespace siegel {

// One flattened per-prime CSV record.
struct ScanRow {
    uint32_t q;
    Parity parity;
    double L;
    double err_bound;
    double c1, c2, c3, c4;
    double beta_upper;
    double S;
    double gq;
    std::optional<double> uli, lli;  // absent for q = 3
    std::optional<uint32_t> h;       // absent unless q == 3 (mod 4), q >= 7
    bool joshi1, joshi2;
    Method method;
};

struct ScanConfig {
    uint32_t qmin = 3;
    uint32_t qmax = 3;
    unsigned workers = 1;
    Method method = Method::alternating;
    std::string checkpoint_path;  // empty: no checkpointing
    bool emit_spectrum = false;   // fft method only: sidecar q,j,|L| dump
    double eps_model = kMachineEps;
    uint32_t block_size = 4096;   // primes per work unit
    size_t max_blocks = 0;        // 0 = unlimited; >0 stops early (resumable)
    // Checked at block boundaries; set (e.g. from a signal handler) to stop
    // the scan after the current block with the checkpoint intact.
    const std::atomic<bool>* stop_flag = nullptr;
};

struct ExtremaReport {
    struct Entry {
        double min_value, max_value;
        uint32_t argmin, argmax;
        bool valid = false;
    };
    Entry c1, c2;
    Entry uli;  // over q >= 5
    Entry lli;  // over q >= 5 excluding the known lli < 1 primes {5, 163}
    std::vector<std::pair<uint32_t, double>> lli_exceptions;  // lli < 1 cases
};

struct JoshiCensus {
    uint64_t count1 = 0, count2 = 0;
    std::vector<uint32_t> first1, first2;
};

struct GoldenColumnDiff {
    std::string column;
    double worst_rel_err = 0.0;
    uint32_t worst_q = 0;
};

struct GoldenViolation {
    uint32_t q;
    std::string column;
    double got, want;
};

struct GoldenReport {
    bool pass = true;
    std::vector<GoldenColumnDiff> columns;
    std::vector<GoldenViolation> violations;
};

struct ScanOutcome {
    uint64_t rows_emitted = 0;
    bool completed = false;  // false when stopped early (max_blocks / stop)
};

// Computes one prime's full record with the given method. S must equal
// s_of_q(q); pass by value from an SAccumulator during scans.
ScanRow compute_row(uint32_t q, Method method, double S);

// Core driver: one row per prime in [qmin, qmax], ascending, computed in
// parallel over `workers` threads in blocks of `block_size` primes and
// delivered to `on_block` strictly in block order. Output is bit-identical
// for a fixed config regardless of worker count. `on_block` returning false
// stops the scan after that block.
ScanOutcome scan_blocks(
    const ScanConfig& config,
    const std::function<bool(size_t block_index, const std::vector<ScanRow>&)>& on_block,
    size_t first_block = 0);

// Convenience: collect all rows in memory (no checkpointing).
std::vector<ScanRow> scan_collect(const ScanConfig& config);

// Full CSV pipeline with atomic per-block checkpointing and resume.
// `resume` requires config.checkpoint_path and an out path (not "-").
// Returns io/verification errors via std::runtime_error.
ScanOutcome scan_to_csv(const ScanConfig& config, const std::string& out_path,
                        bool resume = false);

std::string csv_header();
std::string format_csv_row(const ScanRow& row);
std::vector<ScanRow> read_csv(const std::string& path);

ExtremaReport extrema(const std::vector<ScanRow>& rows);
JoshiCensus joshi_census(const std::vector<ScanRow>& rows, size_t first_n);

// Recomputes every reference-table column over [3,1000] and diffs against
// the embedded table at 1e-11 relative tolerance.
GoldenReport verify_golden();
GoldenReport verify_golden(const GoldenTable& table);

}  // namespace siegel
