#include "siegel/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace siegel {

namespace {

#include "zeta_coeffs.inc"

// P(z) = sum_{k>=2} (-1)^k zeta(k) z^k / k, the tail of the Taylor series of
// log Gamma(1+z) = -gamma*z + P(z), |z| <= 1/2. Terms decay like 2^-k, so the
// table above (k <= 60) is past double precision.
double lgamma1p_tail(double z) {
    constexpr int n = static_cast<int>(sizeof(kZetaOverK) / sizeof(kZetaOverK[0]));
    double acc = 0.0;
    for (int i = n - 1; i >= 0; --i) acc = acc * z + kZetaOverK[i];
    return acc * z * z;
}

[[noreturn]] void throw_domain(const char* fn) {
    throw std::domain_error(std::string(fn) + ": argument must lie in (0,1)");
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0 && x < 1.0)) throw_domain("log_gamma");
    constexpr double gamma = std::numbers::egamma;
    if (x > 0.5) {
        // log Gamma(x) = log Gamma(1+z), z = x-1 in (-1/2, 0): every series
        // term is positive, so no cancellation.
        double z = x - 1.0;
        return -gamma * z + lgamma1p_tail(z);
    }
    // log Gamma(x) = log Gamma(1+x) - log x.
    return -gamma * x + lgamma1p_tail(x) - std::log(x);
}

double neg_log_sin_pi(double x) {
    if (!(x > 0.0 && x < 1.0)) throw_domain("neg_log_sin_pi");
    // sin(pi*x) = sin(pi*(1-x)); folding to m <= 1/2 keeps the argument of
    // sin away from pi where pi's rounding would dominate.
    double m = x <= 0.5 ? x : 1.0 - x;
    return -std::log(std::sin(std::numbers::pi * m));
}

double eval_kernel(KernelFn f, double x) {
    switch (f) {
        case KernelFn::identity: return x;
        case KernelFn::log_gamma: return log_gamma(x);
        case KernelFn::log_sin_neg: return neg_log_sin_pi(x);
    }
    throw std::invalid_argument("eval_kernel: unknown kernel");
}

}  // namespace siegel
