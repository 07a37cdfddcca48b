#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "siegel/arith.hpp"

namespace siegel {

// Round-trip FFT diagnostics for one prime: the RMS error model
// Delta(N,eps) = 0.6 eps sqrt(log2 N), the closed-form sequence norms, and
// the measured forward-then-inverse errors against the model bounds
// Delta(2+Delta)||u||_2 and Delta(2+Delta)sqrt(N)||u||_inf.
struct FftErrorReport {
    uint32_t q;
    size_t N;          // transform length (q-1)/2
    double eps;        // machine epsilon the model was evaluated with
    double delta;
    double norm2_x;    // ||x||_2, closed form
    double norminf_y;  // ||y||_inf = -log sin(pi/q)
    double e2_x, e2_y;
    double einf_x, einf_y;
    double bound_e2_x, bound_e2_y;
    double bound_einf_x, bound_einf_y;
};

// 0.6 * eps * sqrt(log2 N).
double delta_model(size_t N, double eps);

// ||x_k||_2 = sqrt((q-1)(q-2)/(6q)) for x_k = 2 a_k/q - 1, k < (q-1)/2.
double norm2_x(uint32_t q);

// ||y_k||_inf = -log sin(pi/q) for y_k = -log sin(pi a_k/q).
double norminf_y(uint32_t q);

// Builds the x and y sequences from the power sequence, runs
// forward-then-inverse FFTs and reports measured vs model errors.
// eps is the model configuration input (default binary64).
FftErrorReport roundtrip_diagnose(uint32_t q, const PowerSequence& seq,
                                  double eps = 1.1102230246251565e-16);

std::string fft_report_text(const FftErrorReport& r);
std::string fft_report_csv_header();
std::string fft_report_csv_row(const FftErrorReport& r);

}  // namespace siegel
