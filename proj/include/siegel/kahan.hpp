#pragma once

namespace siegel {

// Kahan-compensated accumulator. Fixed ascending accumulation order keeps
// results bit-reproducible across thread counts.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    double value() const { return sum; }
};

}  // namespace siegel
