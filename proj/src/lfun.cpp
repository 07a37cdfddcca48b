#include "siegel/lfun.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "siegel/fft.hpp"
#include "siegel/kahan.hpp"

namespace siegel {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2 = std::numbers::ln2;

void check_same_modulus(const PrimeContext& ctx, const PowerSequence& seq) {
    if (ctx.q != seq.q)
        throw std::invalid_argument("context and power sequence disagree on q");
}

// Sum of |y_k| over k < qbar for the log-sin kernel, exactly
// ((q-1) log 2 - log q)/2 from prod_{a=1}^{q-1} sin(pi a/q) = q / 2^{q-1}.
double abs_kernel_sum_even(uint32_t q) {
    return 0.5 * ((q - 1) * kLog2 - std::log(static_cast<double>(q)));
}

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::alternating: return "alternating";
        case Method::fft: return "fft";
    }
    return "?";
}

LValue l1_direct(uint32_t q) {
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw std::invalid_argument("l1_direct: q must be an odd prime");
    Parity parity = (q % 4 == 1) ? Parity::even : Parity::odd;
    double value;
    if (parity == Parity::odd) {
        int64_t sum = 0;
        for (uint32_t a = 1; a < q; ++a)
            sum += static_cast<int64_t>(a) * legendre_symbol(a, q);
        value = kPi * std::abs(static_cast<double>(sum)) /
                (static_cast<double>(q) * std::sqrt(static_cast<double>(q)));
    } else {
        KahanSum sum;
        double inv_q = 1.0 / static_cast<double>(q);
        for (uint32_t a = 1; a < q; ++a)
            sum.add(legendre_symbol(a, q) * log_gamma(a * inv_q));
        value = 2.0 / std::sqrt(static_cast<double>(q)) * std::abs(sum.value());
    }
    return {q, value, Method::direct, estimate_err_bound(q, Method::direct, kMachineEps),
            parity};
}

LValue l1_alternating(const PrimeContext& ctx, const PowerSequence& seq) {
    check_same_modulus(ctx, seq);
    const uint32_t q = ctx.q;
    double value;
    if (ctx.parity == Parity::odd) {
        // qbar is odd, so the k and k+qbar terms combine with opposite sign:
        // sum_k (-1)^k a_k/q = (1/q) sum_{k<qbar} (-1)^k (2 a_k - q), exact.
        int64_t sum = 0;
        for (uint32_t k = 0; k < ctx.qbar; ++k) {
            int64_t term = 2 * static_cast<int64_t>(seq.values[k]) - q;
            sum += (k & 1) ? -term : term;
        }
        value = kPi * std::abs(static_cast<double>(sum)) /
                (static_cast<double>(q) * std::sqrt(static_cast<double>(q)));
    } else {
        // qbar is even: pairs fuse with equal sign and the log pi constant
        // cancels over the alternating full period, leaving one
        // -log sin(pi a_k/q) evaluation per k < qbar.
        KahanSum sum;
        double inv_q = 1.0 / static_cast<double>(q);
        for (uint32_t k = 0; k < ctx.qbar; ++k) {
            double y = neg_log_sin_pi(seq.values[k] * inv_q);
            sum.add((k & 1) ? -y : y);
        }
        value = 2.0 / std::sqrt(static_cast<double>(q)) * std::abs(sum.value());
    }
    return {q, value, Method::alternating,
            estimate_err_bound(q, Method::alternating, kMachineEps), ctx.parity};
}

Spectrum l1_fft_spectrum(const PrimeContext& ctx, const PowerSequence& seq, KernelFn f) {
    check_same_modulus(ctx, seq);
    const uint32_t q = ctx.q;
    const uint32_t qbar = ctx.qbar;
    const double inv_q = 1.0 / static_cast<double>(q);
    const double root_q = std::sqrt(static_cast<double>(q));

    Spectrum spec;
    spec.q = q;
    spec.magnitudes.assign(q - 1, 0.0);

    FftPlan plan(qbar);

    if (f == KernelFn::identity) {
        // c_k = e(-k/(q-1)) (2 a_k/q - 1); transform fills odd j = 2t+1.
        std::vector<std::complex<double>> c(qbar);
        const long double two_pi = 6.283185307179586476925286766559L;
        for (uint32_t k = 0; k < qbar; ++k) {
            double x = static_cast<double>(2 * static_cast<int64_t>(seq.values[k]) - q) * inv_q;
            long double theta = -two_pi * (static_cast<long double>(k) /
                                           static_cast<long double>(q - 1));
            c[k] = {static_cast<double>(std::cos(theta)) * x,
                    static_cast<double>(std::sin(theta)) * x};
        }
        plan.forward(c);
        for (uint32_t t = 0; t < qbar; ++t)
            spec.magnitudes[2 * t + 1] = kPi / root_q * std::abs(c[t]);
        return spec;
    }

    // Even half, j = 2t for t in [1, qbar-1]. t = 0 is the principal
    // character and stays out of the spectrum, which is also why the log pi
    // shift between the log-gamma and log-sin forms of b_k is immaterial.
    std::vector<std::complex<double>> b(qbar);
    if (f == KernelFn::log_sin_neg) {
        for (uint32_t k = 0; k < qbar; ++k)
            b[k] = {neg_log_sin_pi(seq.values[k] * inv_q), 0.0};
    } else {
        for (uint32_t k = 0; k < qbar; ++k)
            b[k] = {log_gamma(seq.values[k] * inv_q) +
                        log_gamma(seq.values[k + qbar] * inv_q),
                    0.0};
    }
    plan.forward(b);
    for (uint32_t t = 1; t < qbar; ++t)
        spec.magnitudes[2 * t] = 2.0 / root_q * std::abs(b[t]);
    return spec;
}

LValue extract_quadratic(const Spectrum& spec) {
    const uint32_t q = spec.q;
    Parity parity = (q % 4 == 1) ? Parity::even : Parity::odd;
    double value = spec.magnitudes[(q - 1) / 2];
    return {q, value, Method::fft, estimate_err_bound(q, Method::fft, kMachineEps),
            parity};
}

double estimate_err_bound(uint32_t q, Method method, double machine_eps) {
    if (q < 3) throw std::invalid_argument("estimate_err_bound: q must be >= 3");
    const double qd = static_cast<double>(q);
    const double root_q = std::sqrt(qd);
    const double log_q = std::log(qd);
    const bool even = (q % 4 == 1);

    switch (method) {
        case Method::direct:
            if (!even) {
                // Exact integer sum; error is the final division/scaling,
                // bounded via |L| <= pi*sqrt(q)/2.
                return 2.0 * kPi * machine_eps * root_q;
            }
            // q-1 log-gamma terms, each |log Gamma| <= 1 + log q scale;
            // kernel error + compensated-summation error.
            return 2.0 / root_q * machine_eps * (4.0 * (qd - 1.0) + 2.0 * log_q);
        case Method::alternating:
            if (!even) return 2.0 * kPi * machine_eps * root_q;
            return 2.0 / root_q * machine_eps *
                   (4.0 * abs_kernel_sum_even(q) + 2.0 * log_q);
        case Method::fft: {
            const double n = (qd - 1.0) / 2.0;
            const double delta = 0.6 * machine_eps * std::sqrt(std::log2(n < 2 ? 2.0 : n));
            if (!even) {
                // ||x||_2 closed form plus per-element build rounding.
                const double norm2 = std::sqrt((qd - 1.0) * (qd - 2.0) / (6.0 * qd));
                return kPi / root_q * (delta * norm2 + 3.0 * machine_eps * norm2);
            }
            // ||y||_2 <= sqrt(N) ||y||_inf with ||y||_inf = -log sin(pi/q),
            // plus the kernel evaluation error term.
            const double norminf = -std::log(std::sin(kPi / qd));
            return 2.0 / root_q *
                   (delta * std::sqrt(n) * norminf +
                    machine_eps * (4.0 * abs_kernel_sum_even(q) + 2.0 * log_q));
        }
    }
    throw std::invalid_argument("estimate_err_bound: unknown method");
}

}  // namespace siegel
