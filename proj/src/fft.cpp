#include "siegel/fft.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace siegel {

namespace {

bool is_pow2(size_t n) { return n != 0 && (n & (n - 1)) == 0; }

size_t next_pow2(size_t n) {
    size_t m = 1;
    while (m < n) m <<= 1;
    return m;
}

// Twiddle table w[j] = exp(-2*pi*i*j/n), j < n/2, evaluated in extended
// precision and rounded once per entry.
template <typename R>
std::vector<std::complex<R>> make_twiddles(size_t n) {
    std::vector<std::complex<R>> tw(n / 2);
    const long double two_pi = 6.283185307179586476925286766559L;
    for (size_t j = 0; j < n / 2; ++j) {
        long double theta = -two_pi * (static_cast<long double>(j) / static_cast<long double>(n));
        tw[j] = std::complex<R>(static_cast<R>(std::cos(theta)),
                                static_cast<R>(std::sin(theta)));
    }
    return tw;
}

// Iterative radix-2 DIT transform, length n a power of two.
// tw must hold n/2 forward twiddles for this n.
template <typename R>
void radix2(std::complex<R>* v, size_t n, const std::complex<R>* tw, bool inverse) {
    // bit reversal
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        size_t half = len >> 1;
        size_t stride = n / len;
        for (size_t start = 0; start < n; start += len) {
            for (size_t k = 0; k < half; ++k) {
                std::complex<R> w = tw[k * stride];
                if (inverse) w = std::conj(w);
                std::complex<R> u = v[start + k];
                std::complex<R> t = w * v[start + k + half];
                v[start + k] = u + t;
                v[start + k + half] = u - t;
            }
        }
    }
}

}  // namespace

FftPlan::FftPlan(size_t n) : n_(n) {
    if (n == 0) throw std::invalid_argument("FftPlan: length must be >= 1");
    if (n == 1) return;
    if (is_pow2(n)) {
        twiddles_ = make_twiddles<double>(n);
        return;
    }

    conv_len_ = next_pow2(2 * n - 1);
    conv_twiddles_ = make_twiddles<double>(conv_len_);

    // Chirp c_k = exp(-i*pi*k^2/n). The angle is reduced with k^2 mod 2n in
    // integer arithmetic so large k keeps full precision.
    const long double pi_l = 3.1415926535897932384626433832795L;
    std::vector<std::complex<long double>> chirp_l(n);
    for (size_t k = 0; k < n; ++k) {
        uint64_t k2 = (static_cast<uint64_t>(k) * k) % (2 * static_cast<uint64_t>(n));
        long double theta = -pi_l * (static_cast<long double>(k2) / static_cast<long double>(n));
        chirp_l[k] = {std::cos(theta), std::sin(theta)};
    }
    chirp_.resize(n);
    for (size_t k = 0; k < n; ++k)
        chirp_[k] = {static_cast<double>(chirp_l[k].real()),
                     static_cast<double>(chirp_l[k].imag())};

    // FFT of the wrapped conjugate chirp, precomputed in extended precision.
    std::vector<std::complex<long double>> b(conv_len_, {0.0L, 0.0L});
    b[0] = std::conj(chirp_l[0]);
    for (size_t k = 1; k < n; ++k) {
        b[k] = std::conj(chirp_l[k]);
        b[conv_len_ - k] = std::conj(chirp_l[k]);
    }
    auto tw_l = make_twiddles<long double>(conv_len_);
    radix2<long double>(b.data(), conv_len_, tw_l.data(), false);
    chirp_fft_.resize(conv_len_);
    for (size_t k = 0; k < conv_len_; ++k)
        chirp_fft_[k] = {static_cast<double>(b[k].real()),
                         static_cast<double>(b[k].imag())};
}

void FftPlan::transform(std::vector<std::complex<double>>& v, bool inverse) const {
    if (v.size() != n_)
        throw std::invalid_argument("FftPlan: data length does not match plan");
    if (n_ == 1) return;

    if (conv_len_ == 0) {
        radix2<double>(v.data(), n_, twiddles_.data(), inverse);
        return;
    }

    // Bluestein. The inverse runs the forward machinery on the conjugate.
    if (inverse)
        for (auto& z : v) z = std::conj(z);

    std::vector<std::complex<double>> a(conv_len_, {0.0, 0.0});
    for (size_t k = 0; k < n_; ++k) a[k] = v[k] * chirp_[k];
    radix2<double>(a.data(), conv_len_, conv_twiddles_.data(), false);
    for (size_t k = 0; k < conv_len_; ++k) a[k] *= chirp_fft_[k];
    radix2<double>(a.data(), conv_len_, conv_twiddles_.data(), true);
    double scale = 1.0 / static_cast<double>(conv_len_);
    for (size_t k = 0; k < n_; ++k) v[k] = a[k] * scale * chirp_[k];

    if (inverse)
        for (auto& z : v) z = std::conj(z);
}

void FftPlan::forward(std::vector<std::complex<double>>& v) const {
    transform(v, false);
}

void FftPlan::inverse(std::vector<std::complex<double>>& v) const {
    transform(v, true);
    double scale = 1.0 / static_cast<double>(n_);
    for (auto& z : v) z *= scale;
}

}  // namespace siegel
