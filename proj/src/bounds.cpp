#include "siegel/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace siegel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;
constexpr double kEulerGamma = std::numbers::egamma;
const double kExpGamma = std::exp(kEulerGamma);

double loglog(uint32_t q) { return std::log(std::log(static_cast<double>(q))); }

}  // namespace

void SAccumulator::extend_to(uint64_t n) {
    if (n < n_)
        throw std::invalid_argument("SAccumulator: cannot extend backwards");
    for (uint64_t m = n_ + 1; m <= n; ++m)
        acc_.add(std::log(static_cast<double>(m)) / static_cast<double>(m));
    n_ = n;
}

double s_of_q(uint64_t q) {
    if (q < 2) throw std::invalid_argument("s_of_q: q must be >= 2");
    SAccumulator acc;
    acc.extend_to(q);
    return acc.value();
}

double lapkova_g(uint64_t q, Parity parity) {
    if (q < 2) throw std::invalid_argument("lapkova_g: q must be >= 2");
    const double lq = std::log(static_cast<double>(q));
    const double rq = std::sqrt(static_cast<double>(q));
    if (parity == Parity::even)
        return 2.0 / (kPi * kPi) + 0.9467 / lq + 1.668 / (rq * lq);
    return 1.0 / (2.0 * kPi) + 0.8204 / lq + 1.0286 / (rq * lq);
}

std::pair<double, double> c3_c4(uint32_t q, Parity parity, double S) {
    const double lq = std::log(static_cast<double>(q));
    const double c3 = kE * S / (lq * lq);
    const double c4 = kE * lapkova_g(q, parity) / std::sqrt(static_cast<double>(q));
    return {c3, c4};
}

BoundsRecord siegel_bounds(const LValue& L, double S) {
    const uint32_t q = L.q;
    const double lq = std::log(static_cast<double>(q));
    auto [c3, c4] = c3_c4(q, L.parity, S);
    BoundsRecord rec;
    rec.q = q;
    rec.S = S;
    rec.gq = lapkova_g(q, L.parity);
    rec.c1 = L.value / lq;
    rec.c3 = c3;
    rec.c4 = c4;
    rec.c2 = rec.c1 / (c3 + c4);
    rec.beta_upper = 1.0 - rec.c2 / lq;
    return rec;
}

BoundsRecord siegel_bounds(const LValue& L) {
    return siegel_bounds(L, s_of_q(L.q));
}

std::pair<double, double> littlewood_indices(uint32_t q, const LValue& L) {
    if (q < 5)
        throw std::domain_error("littlewood_indices: defined for q >= 5 only");
    const double ll = loglog(q);
    const double uli = L.value / (2.0 * kExpGamma * ll);
    const double lli = L.value * (12.0 * kExpGamma / (kPi * kPi)) * ll;
    return {uli, lli};
}

std::pair<bool, bool> joshi_flags(uint32_t q, const LValue& L) {
    const double ll = loglog(q);
    const bool j1 = L.value / ll >= kExpGamma;
    const bool j2 = L.value * ll <= kPi * kPi / (6.0 * kExpGamma);
    return {j1, j2};
}

std::optional<std::pair<uint32_t, double>> class_number(uint32_t q, const LValue& L) {
    if (q % 4 != 3 || q < 7) return std::nullopt;
    const double x = std::sqrt(static_cast<double>(q)) / kPi * L.value;
    const double h = std::round(x);
    const double residual = std::abs(x - h);
    if (residual > 1e-6 || h < 1.0)
        throw std::runtime_error("class_number: integrality violated at q=" +
                                 std::to_string(q) + " (residual " +
                                 std::to_string(residual) + ")");
    return std::make_pair(static_cast<uint32_t>(h), residual);
}

IndexRecord make_index_record(uint32_t q, const LValue& L) {
    IndexRecord rec;
    rec.q = q;
    if (q >= 5) {
        auto [uli, lli] = littlewood_indices(q, L);
        rec.uli = uli;
        rec.lli = lli;
    }
    auto [j1, j2] = joshi_flags(q, L);
    rec.joshi1 = j1;
    rec.joshi2 = j2;
    rec.h_residual = 0.0;
    if (auto h = class_number(q, L)) {
        rec.h = h->first;
        rec.h_residual = h->second;
    }
    return rec;
}

}  // namespace siegel
