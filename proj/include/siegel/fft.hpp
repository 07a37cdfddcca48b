#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace siegel {

// Complex FFT plan for an arbitrary length n >= 1. Power-of-two lengths run
// the iterative radix-2 kernel directly; everything else goes through
// Bluestein's chirp-z reduction to a power-of-two convolution, so rough
// lengths such as prime (q-1)/2 are fine.
//
// Twiddles and chirp factors are computed in extended precision and rounded
// once, which keeps the per-transform RMS error within the
// 0.6*eps*sqrt(log2 n) model this library's diagnostics assume.
//
// A plan is immutable after construction and safe to share across threads.
class FftPlan {
public:
    explicit FftPlan(size_t n);

    size_t size() const { return n_; }

    // In-place transforms; v.size() must equal size().
    // inverse() includes the 1/n scaling.
    void forward(std::vector<std::complex<double>>& v) const;
    void inverse(std::vector<std::complex<double>>& v) const;

private:
    void transform(std::vector<std::complex<double>>& v, bool inverse) const;

    size_t n_;
    // power-of-two path
    std::vector<std::complex<double>> twiddles_;  // for length n_ (pow2 case)
    // Bluestein path
    size_t conv_len_ = 0;                          // pow2 >= 2n-1
    std::vector<std::complex<double>> chirp_;      // b_k = e(+k^2/(2n)), k < n
    std::vector<std::complex<double>> chirp_fft_;  // forward FFT of padded chirp
    std::vector<std::complex<double>> conv_twiddles_;
};

}  // namespace siegel
