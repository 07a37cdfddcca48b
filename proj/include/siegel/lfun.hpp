#pragma once

#include <cstdint>
#include <vector>

#include "siegel/arith.hpp"
#include "siegel/special.hpp"

namespace siegel {

enum class Method : uint8_t { direct, alternating, fft };

const char* method_name(Method m);

// A computed |L(1,chi_square)| with its method tag and an a priori absolute
// error bound. value > 0 always (Dirichlet's class number formula for odd
// characters, nonvanishing for even ones).
struct LValue {
    uint32_t q;
    double value;
    Method method;
    double err_bound;
    Parity parity;
};

// |L(1,chi_1^j)| for every non-principal character exponent j in [1, q-2].
// A spectrum built from one kernel populates only the character parity that
// kernel addresses (identity -> odd j, log-gamma/log-sin -> even j); the
// other entries stay zero. magnitudes[0] is unused.
struct Spectrum {
    uint32_t q = 0;
    std::vector<double> magnitudes;  // indexed by j, size q-1
};

// Direct Legendre-symbol evaluation: the independent oracle. chi_square(a)
// comes from the Euler criterion per term, with no primitive-root indexing.
// q == 3 (mod 4): (pi/sqrt q)|sum a*chi(a)| / q, the sum in exact integers.
// q == 1 (mod 4): (2/sqrt q)|sum chi(a) log Gamma(a/q)|, Kahan-compensated.
LValue l1_direct(uint32_t q);

// O(q) fast path: sum_k (-1)^k f(a_k/q) with the k and k+qbar terms fused
// through a_{k+qbar} = q - a_k, halving kernel evaluations. The odd case is
// exact integer arithmetic up to one division.
LValue l1_alternating(const PrimeContext& ctx, const PowerSequence& seq);

// Full decimation-in-frequency spectrum: two length-qbar DFTs over the
// derived sequences b_k (even output indices j = 2t) and c_k (odd output
// indices j = 2t+1), assembled with the parity-appropriate prefactors.
Spectrum l1_fft_spectrum(const PrimeContext& ctx, const PowerSequence& seq, KernelFn f);

// The quadratic entry j = (q-1)/2 of a spectrum, tagged Method::fft.
LValue extract_quadratic(const Spectrum& spec);

// A priori absolute error bound for |L(1,chi_square)| computed by `method`
// with unit roundoff `machine_eps`; monotone nondecreasing in q.
double estimate_err_bound(uint32_t q, Method method, double machine_eps);

// Unit roundoff of the working precision (binary64).
inline constexpr double kMachineEps = 1.1102230246251565e-16;  // 2^-53

}  // namespace siegel
