#include "siegel/fftcheck.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "siegel/fft.hpp"
#include "siegel/kahan.hpp"
#include "siegel/special.hpp"

namespace siegel {

namespace {

struct RoundtripErrors {
    double e2;
    double einf;
};

RoundtripErrors roundtrip(const FftPlan& plan, const std::vector<double>& u) {
    std::vector<std::complex<double>> v(u.size());
    for (size_t k = 0; k < u.size(); ++k) v[k] = {u[k], 0.0};
    plan.forward(v);
    plan.inverse(v);
    KahanSum sq;
    double einf = 0.0;
    for (size_t k = 0; k < u.size(); ++k) {
        double dr = v[k].real() - u[k];
        double di = v[k].imag();
        sq.add(dr * dr + di * di);
        einf = std::max(einf, std::sqrt(dr * dr + di * di));
    }
    return {std::sqrt(sq.value()), einf};
}

}  // namespace

double delta_model(size_t N, double eps) {
    if (N < 2) throw std::invalid_argument("delta_model: N must be >= 2");
    if (!(eps > 0.0)) throw std::invalid_argument("delta_model: eps must be > 0");
    return 0.6 * eps * std::sqrt(std::log2(static_cast<double>(N)));
}

double norm2_x(uint32_t q) {
    if (q < 3) throw std::invalid_argument("norm2_x: q must be >= 3");
    const double qd = static_cast<double>(q);
    return std::sqrt((qd - 1.0) * (qd - 2.0) / (6.0 * qd));
}

double norminf_y(uint32_t q) {
    if (q < 3) throw std::invalid_argument("norminf_y: q must be >= 3");
    return -std::log(std::sin(std::numbers::pi / static_cast<double>(q)));
}

FftErrorReport roundtrip_diagnose(uint32_t q, const PowerSequence& seq, double eps) {
    if (seq.q != q || seq.values.size() != q - 1)
        throw std::invalid_argument("roundtrip_diagnose: sequence does not match q");
    const size_t N = (q - 1) / 2;
    const double inv_q = 1.0 / static_cast<double>(q);

    std::vector<double> x(N), y(N);
    for (size_t k = 0; k < N; ++k) {
        x[k] = static_cast<double>(2 * static_cast<int64_t>(seq.values[k]) -
                                   static_cast<int64_t>(q)) * inv_q;
        // log-sin reflection form, matching the production kernel.
        y[k] = neg_log_sin_pi(seq.values[k] * inv_q);
    }

    FftPlan plan(N);
    RoundtripErrors ex = roundtrip(plan, x);
    RoundtripErrors ey = roundtrip(plan, y);

    FftErrorReport r;
    r.q = q;
    r.N = N;
    r.eps = eps;
    r.delta = delta_model(N, eps);
    r.norm2_x = norm2_x(q);
    r.norminf_y = norminf_y(q);
    r.e2_x = ex.e2;
    r.e2_y = ey.e2;
    r.einf_x = ex.einf;
    r.einf_y = ey.einf;
    const double factor = r.delta * (2.0 + r.delta);
    KahanSum y2;
    for (double v : y) y2.add(v * v);
    const double norm2_y = std::sqrt(y2.value());
    r.bound_e2_x = factor * r.norm2_x;
    r.bound_e2_y = factor * norm2_y;
    r.bound_einf_x = factor * std::sqrt(static_cast<double>(N)) *
                     1.0;  // ||x||_inf <= 1 by construction
    r.bound_einf_y = factor * std::sqrt(static_cast<double>(N)) * r.norminf_y;
    return r;
}

std::string fft_report_text(const FftErrorReport& r) {
    std::ostringstream os;
    os.precision(6);
    os << std::scientific;
    os << "q = " << r.q << ", N = " << r.N << ", eps = " << r.eps << "\n"
       << "Delta(N,eps)        = " << r.delta << "\n"
       << "Delta(2+Delta)      = " << r.delta * (2.0 + r.delta) << "\n"
       << "||x||_2 (closed)    = " << r.norm2_x << "\n"
       << "||y||_inf (closed)  = " << r.norminf_y << "\n"
       << "E2(x)   = " << r.e2_x << "   bound = " << r.bound_e2_x
       << (r.e2_x <= r.bound_e2_x ? "   ok" : "   EXCEEDED") << "\n"
       << "E2(y)   = " << r.e2_y << "   bound = " << r.bound_e2_y
       << (r.e2_y <= r.bound_e2_y ? "   ok" : "   EXCEEDED") << "\n"
       << "Einf(x) = " << r.einf_x << "   bound = " << r.bound_einf_x << "\n"
       << "Einf(y) = " << r.einf_y << "   bound = " << r.bound_einf_y << "\n";
    return os.str();
}

std::string fft_report_csv_header() {
    return "q,N,eps,delta,norm2_x,norminf_y,e2_x,e2_y,einf_x,einf_y,"
           "bound_e2_x,bound_e2_y,bound_einf_x,bound_einf_y";
}

std::string fft_report_csv_row(const FftErrorReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.q << ',' << r.N << ',' << r.eps << ',' << r.delta << ',' << r.norm2_x
       << ',' << r.norminf_y << ',' << r.e2_x << ',' << r.e2_y << ',' << r.einf_x
       << ',' << r.einf_y << ',' << r.bound_e2_x << ',' << r.bound_e2_y << ','
       << r.bound_einf_x << ',' << r.bound_einf_y;
    return os.str();
}

}  // namespace siegel
