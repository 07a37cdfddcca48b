#include "siegel/plot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "siegel/kahan.hpp"

namespace siegel {

namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 560.0;
constexpr double kMarginL = 70.0;
constexpr double kMarginR = 20.0;
constexpr double kMarginT = 30.0;
constexpr double kMarginB = 50.0;

std::string fmt(double v, int prec = 6) {
    std::ostringstream os;
    os.precision(prec);
    os << v;
    return os.str();
}

struct Axis {
    double lo, hi;
    double to_px(double v, double px_lo, double px_hi) const {
        double t = hi > lo ? (v - lo) / (hi - lo) : 0.5;
        return px_lo + t * (px_hi - px_lo);
    }
};

void svg_open(std::ostringstream& os) {
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
       << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' '
       << kHeight << "\">\n"
       << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void svg_frame(std::ostringstream& os, const std::string& x_label,
               const std::string& y_label, const Axis& x, const Axis& y) {
    os << "<rect x=\"" << kMarginL << "\" y=\"" << kMarginT << "\" width=\""
       << kWidth - kMarginL - kMarginR << "\" height=\""
       << kHeight - kMarginT - kMarginB
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << (kMarginL + kWidth - kMarginR) / 2 << "\" y=\""
       << kHeight - 12 << "\" text-anchor=\"middle\" font-size=\"14\">" << x_label
       << "</text>\n";
    os << "<text x=\"16\" y=\"" << (kMarginT + kHeight - kMarginB) / 2
       << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 16 "
       << (kMarginT + kHeight - kMarginB) / 2 << ")\">" << y_label << "</text>\n";
    os << "<text x=\"" << kMarginL << "\" y=\"" << kHeight - kMarginB + 18
       << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(x.lo) << "</text>\n";
    os << "<text x=\"" << kWidth - kMarginR << "\" y=\"" << kHeight - kMarginB + 18
       << "\" font-size=\"11\" text-anchor=\"middle\">" << fmt(x.hi) << "</text>\n";
    os << "<text x=\"" << kMarginL - 6 << "\" y=\"" << kHeight - kMarginB + 4
       << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y.lo) << "</text>\n";
    os << "<text x=\"" << kMarginL - 6 << "\" y=\"" << kMarginT + 4
       << "\" font-size=\"11\" text-anchor=\"end\">" << fmt(y.hi) << "</text>\n";
}

void hline(std::ostringstream& os, double y_px, const std::string& color,
           bool dashed, const std::string& label) {
    os << "<line x1=\"" << kMarginL << "\" y1=\"" << y_px << "\" x2=\""
       << kWidth - kMarginR << "\" y2=\"" << y_px << "\" stroke=\"" << color
       << "\" stroke-width=\"1\""
       << (dashed ? " stroke-dasharray=\"6,4\"" : "") << "/>\n";
    if (!label.empty())
        os << "<text x=\"" << kWidth - kMarginR - 4 << "\" y=\"" << y_px - 4
           << "\" font-size=\"11\" text-anchor=\"end\" fill=\"" << color << "\">"
           << label << "</text>\n";
}

}  // namespace

std::vector<std::pair<uint32_t, double>> extract_column(
    const std::vector<ScanRow>& rows, const std::string& column, uint32_t qmin,
    uint32_t qmax) {
    std::vector<std::pair<uint32_t, double>> points;
    for (const ScanRow& r : rows) {
        if (r.q < qmin || r.q > qmax) continue;
        if (column == "c1") points.emplace_back(r.q, r.c1);
        else if (column == "c2") points.emplace_back(r.q, r.c2);
        else if (column == "uli") { if (r.uli) points.emplace_back(r.q, *r.uli); }
        else if (column == "lli") { if (r.lli) points.emplace_back(r.q, *r.lli); }
        else throw std::invalid_argument("unknown column: " + column);
    }
    return points;
}

ColumnStats column_stats(const std::vector<std::pair<uint32_t, double>>& points) {
    ColumnStats st;
    st.count = points.size();
    if (points.empty()) return st;
    KahanSum sum;
    st.min = st.max = points[0].second;
    for (auto& [q, v] : points) {
        sum.add(v);
        st.min = std::min(st.min, v);
        st.max = std::max(st.max, v);
    }
    st.mean = sum.value() / static_cast<double>(points.size());
    KahanSum sq;
    for (auto& [q, v] : points) sq.add((v - st.mean) * (v - st.mean));
    st.stddev = std::sqrt(sq.value() / static_cast<double>(points.size()));
    return st;
}

void render_plot(const PlotSpec& spec, const std::vector<ScanRow>& rows) {
    if (spec.bins < 1) throw std::invalid_argument("plot: bins must be >= 1");
    if (spec.qmax < spec.qmin) throw std::invalid_argument("plot: bad q range");
    auto points = extract_column(rows, spec.column, spec.qmin, spec.qmax);
    if (points.empty())
        throw std::invalid_argument("plot: no rows in range for column " +
                                    spec.column);
    ColumnStats st = column_stats(points);

    std::ostringstream os;
    os.precision(10);
    svg_open(os);

    const double px_x0 = kMarginL, px_x1 = kWidth - kMarginR;
    const double px_y0 = kHeight - kMarginB, px_y1 = kMarginT;

    if (spec.kind == PlotSpec::Kind::scatter) {
        Axis x{static_cast<double>(spec.qmin), static_cast<double>(spec.qmax)};
        if (spec.log_x) x = {std::log10(x.lo), std::log10(x.hi)};
        double lo = st.min, hi = st.max;
        for (auto& [v, label] : spec.reference_lines) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        double pad = (hi - lo) * 0.05 + 1e-12;
        Axis y{lo - pad, hi + pad};
        svg_frame(os, spec.log_x ? "log10 q" : "q", spec.column, x, y);
        for (auto& [v, label] : spec.reference_lines)
            hline(os, y.to_px(v, px_y0, px_y1), "black", false, label);
        hline(os, y.to_px(st.mean, px_y0, px_y1), "red", true,
              "mean = " + fmt(st.mean, 10));
        os << "<g fill=\"steelblue\" fill-opacity=\"0.6\">\n";
        for (auto& [q, v] : points) {
            double qx = spec.log_x ? std::log10(static_cast<double>(q))
                                   : static_cast<double>(q);
            os << "<circle cx=\"" << x.to_px(qx, px_x0, px_x1) << "\" cy=\""
               << y.to_px(v, px_y0, px_y1) << "\" r=\"1.5\"/>\n";
        }
        os << "</g>\n";
    } else {
        const double width = (st.max - st.min);
        const double bin_w = width > 0 ? width / static_cast<double>(spec.bins)
                                       : 1.0;
        std::vector<uint64_t> counts(spec.bins, 0);
        for (auto& [q, v] : points) {
            size_t b = width > 0
                           ? std::min(spec.bins - 1,
                                      static_cast<size_t>((v - st.min) / bin_w))
                           : 0;
            ++counts[b];
        }
        uint64_t peak = *std::max_element(counts.begin(), counts.end());
        Axis x{st.min, st.max};
        Axis y{0.0, static_cast<double>(peak)};
        svg_frame(os, spec.column, "count", x, y);
        os << "<g fill=\"steelblue\" stroke=\"white\" stroke-width=\"0.5\">\n";
        for (size_t b = 0; b < spec.bins; ++b) {
            double x0 = x.to_px(st.min + b * bin_w, px_x0, px_x1);
            double x1 = x.to_px(st.min + (b + 1) * bin_w, px_x0, px_x1);
            double yb = y.to_px(static_cast<double>(counts[b]), px_y0, px_y1);
            os << "<rect x=\"" << x0 << "\" y=\"" << yb << "\" width=\""
               << (x1 - x0) << "\" height=\"" << (px_y0 - yb) << "\"/>\n";
        }
        os << "</g>\n";
        double mean_px = x.to_px(st.mean, px_x0, px_x1);
        os << "<line x1=\"" << mean_px << "\" y1=\"" << px_y1 << "\" x2=\""
           << mean_px << "\" y2=\"" << px_y0
           << "\" stroke=\"red\" stroke-dasharray=\"6,4\"/>\n";
    }

    std::string legend = "n = " + std::to_string(st.count) +
                         ", mean = " + fmt(st.mean, 10) +
                         ", sigma = " + fmt(st.stddev, 10);
    if (spec.kind == PlotSpec::Kind::histogram)
        legend += ", interval = " +
                  fmt((st.max - st.min) / static_cast<double>(spec.bins), 10);
    os << "<text x=\"" << kMarginL + 8 << "\" y=\"" << kMarginT + 16
       << "\" font-size=\"12\">" << legend << "</text>\n";
    os << "</svg>\n";

    std::ofstream f(spec.output_path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + spec.output_path);
    f << os.str();
}

}  // namespace siegel
