#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "siegel/kahan.hpp"
#include "siegel/lfun.hpp"

namespace siegel {

// S(q), g(q), c1..c4 and the Siegel-zero bound 1 - c2/log q for one prime.
struct BoundsRecord {
    uint32_t q;
    double S;
    double gq;
    double c1;
    double c2;
    double c3;
    double c4;
    double beta_upper;
};

// Littlewood indices, Joshi flags and (when defined) the class number of
// Q(sqrt(-q)). uli/lli are reported for q >= 5 only; h is present iff
// q == 3 (mod 4) and q >= 7.
struct IndexRecord {
    uint32_t q;
    std::optional<double> uli;
    std::optional<double> lli;
    bool joshi1;
    bool joshi2;
    std::optional<uint32_t> h;
    double h_residual;  // 0 when h absent
};

// S(q) = sum_{n=2}^{q} (log n)/n, compensated. The accumulator form lets an
// ascending scan extend S(q) to S(q') without recomputation.
class SAccumulator {
public:
    // Accumulated through n = upper(); starts at upper() == 1, S == 0.
    uint64_t upper() const { return n_; }
    double value() const { return acc_.value(); }

    void extend_to(uint64_t n);

    // Raw Kahan state, for handing a scan block its exact starting point.
    KahanSum state() const { return acc_; }
    void restore(uint64_t n, const KahanSum& state) { n_ = n; acc_ = state; }

private:
    uint64_t n_ = 1;
    KahanSum acc_;
};

double s_of_q(uint64_t q);

// Lapkova's explicit Polya-Vinogradov constant g(q).
double lapkova_g(uint64_t q, Parity parity);

// c3 = e*S/(log q)^2 and c4 = e*g(q)/sqrt(q). S must equal s_of_q(q).
std::pair<double, double> c3_c4(uint32_t q, Parity parity, double S);

BoundsRecord siegel_bounds(const LValue& L, double S);
BoundsRecord siegel_bounds(const LValue& L);  // computes S(q) itself

// (uli, lli); requires q >= 5 so that loglog q is bounded away from 0.
std::pair<double, double> littlewood_indices(uint32_t q, const LValue& L);

// joshi1 = [L/loglog q >= e^gamma], joshi2 = [L*loglog q <= pi^2/(6 e^gamma)].
std::pair<bool, bool> joshi_flags(uint32_t q, const LValue& L);

// h(-q) = round((sqrt q/pi) L) with its integrality residual, for
// q == 3 (mod 4), q >= 7; nullopt otherwise. Throws std::runtime_error if
// the residual exceeds 1e-6 (signals a defective L value).
std::optional<std::pair<uint32_t, double>> class_number(uint32_t q, const LValue& L);

IndexRecord make_index_record(uint32_t q, const LValue& L);

}  // namespace siegel
