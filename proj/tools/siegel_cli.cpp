// siegel: compute |L(1,chi_square)| for odd primes q and the derived ledger
// of Siegel-zero bound constants, Littlewood indices, Joshi flags and class
// numbers; scan ranges to CSV with checkpoint/resume; verify against the
// embedded reference table; emit SVG figures; run FFT accuracy diagnostics.

#include <atomic>
#include <cmath>
#include <csignal>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "siegel/bounds.hpp"
#include "siegel/fftcheck.hpp"
#include "siegel/lfun.hpp"
#include "siegel/plot.hpp"
#include "siegel/scan.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void on_sigint(int) { g_interrupted.store(true); }

unsigned default_workers() {
    if (const char* env = std::getenv("SIEGEL_WORKERS")) {
        long n = std::strtol(env, nullptr, 10);
        if (n >= 1) return static_cast<unsigned>(n);
    }
    return 1;
}

siegel::Method parse_method(const std::string& name) {
    if (name == "direct") return siegel::Method::direct;
    if (name == "alternating") return siegel::Method::alternating;
    if (name == "fft") return siegel::Method::fft;
    throw CLI::ValidationError("method", "must be direct, alternating or fft");
}

void print_single(uint32_t q, bool all_methods, const std::string& method_name) {
    using namespace siegel;
    PrimeContext ctx = make_prime_context(q);
    PowerSequence seq = build_power_sequence(ctx);
    double S = s_of_q(q);

    std::cout.precision(15);
    std::cout << "q = " << q << "  (" << (ctx.parity == Parity::even ? "even" : "odd")
              << " character, primitive root " << ctx.g << ")\n";

    LValue L = l1_alternating(ctx, seq);
    if (all_methods) {
        LValue d = l1_direct(q);
        KernelFn f = ctx.parity == Parity::even ? KernelFn::log_sin_neg
                                                : KernelFn::identity;
        LValue fv = extract_quadratic(l1_fft_spectrum(ctx, seq, f));
        std::cout << "L(1,chi)  direct      = " << d.value
                  << "  (err bound " << d.err_bound << ")\n"
                  << "L(1,chi)  alternating = " << L.value
                  << "  (err bound " << L.err_bound << ")\n"
                  << "L(1,chi)  fft         = " << fv.value
                  << "  (err bound " << fv.err_bound << ")\n";
    } else {
        Method m = parse_method(method_name);
        if (m == Method::direct) L = l1_direct(q);
        else if (m == Method::fft) {
            KernelFn f = ctx.parity == Parity::even ? KernelFn::log_sin_neg
                                                    : KernelFn::identity;
            L = extract_quadratic(l1_fft_spectrum(ctx, seq, f));
        }
        std::cout << "L(1,chi) [" << siegel::method_name(L.method) << "] = "
                  << L.value << "  (err bound " << L.err_bound << ")\n";
    }

    BoundsRecord b = siegel_bounds(L, S);
    std::cout << "S(q) = " << b.S << "\n"
              << "g(q) = " << b.gq << "\n"
              << "c1 = " << b.c1 << "\nc2 = " << b.c2 << "\nc3 = " << b.c3
              << "\nc4 = " << b.c4 << "\n"
              << "beta upper bound: beta < 1 - c2/log q = " << b.beta_upper << "\n";

    IndexRecord idx = make_index_record(q, L);
    if (idx.uli) std::cout << "ULI = " << *idx.uli << "\n";
    if (idx.lli) std::cout << "LLI = " << *idx.lli << "\n";
    std::cout << "Joshi: L/loglog q >= e^gamma: " << (idx.joshi1 ? "yes" : "no")
              << ";  L*loglog q <= pi^2/(6 e^gamma): " << (idx.joshi2 ? "yes" : "no")
              << "\n";
    if (idx.h)
        std::cout << "h(-q) = " << *idx.h << "  (residual " << idx.h_residual
                  << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"L(1,chi_square) computations and Siegel-zero bound constants "
                 "for odd primes"};
    app.require_subcommand(1);

    // single
    auto* single = app.add_subcommand("single", "full report for one prime");
    uint32_t single_q = 3;
    bool all_methods = false;
    std::string single_method = "alternating";
    single->add_option("q", single_q, "odd prime")->required();
    single->add_flag("--all-methods", all_methods, "compute by all three methods");
    single->add_option("--method", single_method, "direct|alternating|fft")
        ->capture_default_str();

    // scan
    auto* scan = app.add_subcommand("scan", "scan a prime range to CSV");
    siegel::ScanConfig cfg;
    cfg.workers = default_workers();
    std::string out_path = "-";
    bool resume = false;
    scan->add_option("--from", cfg.qmin, "lower bound")->capture_default_str();
    scan->add_option("--to", cfg.qmax, "upper bound")->required();
    scan->add_option("--workers", cfg.workers, "worker threads")
        ->capture_default_str();
    std::string scan_method = "alternating";
    scan->add_option("--method", scan_method, "direct|alternating|fft")
        ->capture_default_str();
    scan->add_option("--out", out_path, "output file ('-' = stdout)")
        ->capture_default_str();
    scan->add_option("--checkpoint", cfg.checkpoint_path,
                     "checkpoint file (atomic per-block updates)");
    scan->add_flag("--resume", resume, "resume from checkpoint");
    scan->add_flag("--emit-spectrum", cfg.emit_spectrum,
                   "with --method fft: dump all-character magnitudes to "
                   "<out>.spectrum.csv");
    scan->add_option("--block-size", cfg.block_size, "primes per work unit")
        ->capture_default_str();

    // verify
    auto* verify = app.add_subcommand(
        "verify", "recompute the embedded reference table and diff");

    // plot
    auto* plot = app.add_subcommand("plot", "render an SVG from a scan CSV");
    siegel::PlotSpec spec;
    std::string plot_kind = "scatter", plot_in;
    std::vector<std::string> reflines;
    plot->add_option("--kind", plot_kind, "scatter|histogram")
        ->capture_default_str();
    plot->add_option("--column", spec.column, "c1|c2|uli|lli")->required();
    plot->add_option("--in", plot_in, "scan CSV input")->required();
    plot->add_option("--out", spec.output_path, "SVG output path")->required();
    plot->add_option("--from", spec.qmin, "lower q bound")->capture_default_str();
    plot->add_option("--to", spec.qmax, "upper q bound")->capture_default_str();
    plot->add_option("--bins", spec.bins, "histogram bins")->capture_default_str();
    plot->add_flag("--logx", spec.log_x, "logarithmic q axis (scatter)");
    plot->add_option("--refline", reflines,
                     "reference line VALUE[:LABEL]; repeatable");

    // fftcheck
    auto* fftcheck = app.add_subcommand(
        "fftcheck", "round-trip FFT accuracy diagnostics for one prime");
    uint32_t fft_q = 101;
    double eps_model = siegel::kMachineEps;
    fftcheck->add_option("q", fft_q, "odd prime")->required();
    fftcheck->add_option("--eps-model", eps_model,
                         "machine epsilon for the error model")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (single->parsed()) {
            print_single(single_q, all_methods, single_method);
            return 0;
        }

        if (scan->parsed()) {
            cfg.method = parse_method(scan_method);
            // The driver checkpoints after every block; an interrupt stops
            // the scan at the next block boundary and stays resumable.
            std::signal(SIGINT, on_sigint);
            cfg.stop_flag = &g_interrupted;
            siegel::ScanOutcome outcome = siegel::scan_to_csv(cfg, out_path, resume);
            if (!outcome.completed) {
                std::cerr << "interrupted; checkpoint saved, resume with --resume\n";
                return 130;
            }
            std::cerr << "scan complete: " << outcome.rows_emitted << " new rows\n";
            return 0;
        }

        if (verify->parsed()) {
            siegel::GoldenReport rep = siegel::verify_golden();
            std::cout.precision(3);
            std::cout << std::scientific;
            for (const auto& col : rep.columns)
                std::cout << "column " << col.column << ": worst |rel err| = "
                          << col.worst_rel_err << " at q = " << col.worst_q << "\n";
            if (!rep.pass) {
                std::cout.precision(17);
                for (const auto& v : rep.violations)
                    std::cout << "MISMATCH q=" << v.q << " " << v.column
                              << " got=" << v.got << " want=" << v.want << "\n";
                std::cout << "verify: FAIL\n";
                return 1;
            }
            std::cout << "verify: PASS (" << siegel::golden_table().rows.size()
                      << " primes, tolerance 1e-11 relative)\n";
            return 0;
        }

        if (plot->parsed()) {
            spec.kind = plot_kind == "histogram" ? siegel::PlotSpec::Kind::histogram
                                                 : siegel::PlotSpec::Kind::scatter;
            for (const std::string& s : reflines) {
                size_t colon = s.find(':');
                spec.reference_lines.emplace_back(
                    std::stod(s.substr(0, colon)),
                    colon == std::string::npos ? "" : s.substr(colon + 1));
            }
            siegel::render_plot(spec, siegel::read_csv(plot_in));
            return 0;
        }

        if (fftcheck->parsed()) {
            siegel::PrimeContext ctx = siegel::make_prime_context(fft_q);
            siegel::PowerSequence seq = siegel::build_power_sequence(ctx);
            siegel::FftErrorReport rep =
                siegel::roundtrip_diagnose(fft_q, seq, eps_model);
            std::cout << siegel::fft_report_text(rep);
            bool ok = rep.e2_x <= rep.bound_e2_x && rep.e2_y <= rep.bound_e2_y;
            return ok ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
