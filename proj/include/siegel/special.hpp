#pragma once

namespace siegel {

// Scalar kernels evaluated on the open interval (0,1).
enum class KernelFn { identity, log_gamma, log_sin_neg };

// log Gamma(x) for x in (0,1), relative error <= 4 ulp.
// Throws std::domain_error outside (0,1).
double log_gamma(double x);

// -log(sin(pi*x)) for x in (0,1); symmetric about 1/2 with minimum 0 there.
// Throws std::domain_error outside (0,1).
double neg_log_sin_pi(double x);

double eval_kernel(KernelFn f, double x);

}  // namespace siegel
