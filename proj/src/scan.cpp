#include "siegel/scan.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace siegel {

namespace {

constexpr double kGoldenRelTol = 1e-11;

std::string fmt_double(double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

double parse_double(const std::string& s) {
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw std::runtime_error("bad numeric field: '" + s + "'");
    return v;
}

uint64_t fnv1a(const std::string& s) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

uint64_t config_hash(const ScanConfig& c) {
    std::string key = "v1|" + std::to_string(c.qmin) + '|' + std::to_string(c.qmax) +
                      '|' + method_name(c.method) + '|' + fmt_double(c.eps_model) +
                      '|' + (c.emit_spectrum ? '1' : '0') + '|' +
                      std::to_string(c.block_size);
    return fnv1a(key);
}

void validate(const ScanConfig& c) {
    if (c.qmin < 3) throw std::invalid_argument("scan: qmin must be >= 3");
    if (c.qmax < c.qmin) throw std::invalid_argument("scan: qmax must be >= qmin");
    if (c.workers < 1) throw std::invalid_argument("scan: workers must be >= 1");
    if (c.block_size < 1) throw std::invalid_argument("scan: block_size must be >= 1");
}

ScanRow row_from(const LValue& L, double S) {
    BoundsRecord b = siegel_bounds(L, S);
    IndexRecord idx = make_index_record(L.q, L);
    ScanRow row;
    row.q = L.q;
    row.parity = L.parity;
    row.L = L.value;
    row.err_bound = L.err_bound;
    row.c1 = b.c1;
    row.c2 = b.c2;
    row.c3 = b.c3;
    row.c4 = b.c4;
    row.beta_upper = b.beta_upper;
    row.S = S;
    row.gq = b.gq;
    row.uli = idx.uli;
    row.lli = idx.lli;
    row.h = idx.h;
    row.joshi1 = idx.joshi1;
    row.joshi2 = idx.joshi2;
    row.method = L.method;
    return row;
}

Spectrum merged_spectrum(const PrimeContext& ctx, const PowerSequence& seq) {
    Spectrum even = l1_fft_spectrum(ctx, seq, KernelFn::log_sin_neg);
    Spectrum odd = l1_fft_spectrum(ctx, seq, KernelFn::identity);
    for (uint32_t j = 1; j + 1 < ctx.q; j += 2) even.magnitudes[j] = odd.magnitudes[j];
    return even;
}

struct ScanBlock {
    size_t index = 0;
    std::vector<ScanRow> rows;
    std::vector<std::pair<uint32_t, uint32_t>> roots;  // (q, primitive root)
    std::string spectrum_text;
};

struct Checkpoint {
    uint64_t hash = 0;
    size_t total_blocks = 0;
    size_t next_block = 0;
    uint64_t out_bytes = 0;
    uint64_t spectrum_bytes = 0;
    std::vector<std::pair<uint32_t, uint32_t>> roots;
};

void write_checkpoint(const std::string& path, const Checkpoint& ck) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write checkpoint " + tmp);
        os << "siegel-checkpoint 1\n"
           << "config " << ck.hash << "\n"
           << "blocks " << ck.total_blocks << "\n"
           << "next " << ck.next_block << "\n"
           << "bytes " << ck.out_bytes << "\n"
           << "spectrum_bytes " << ck.spectrum_bytes << "\n"
           << "roots " << ck.roots.size() << "\n";
        for (auto [q, g] : ck.roots) os << q << ' ' << g << "\n";
        os.flush();
        if (!os) throw std::runtime_error("checkpoint write failure: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw std::runtime_error("checkpoint rename failed: " + ec.message());
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open checkpoint " + path);
    Checkpoint ck;
    std::string magic;
    int version = 0;
    is >> magic >> version;
    if (magic != "siegel-checkpoint" || version != 1)
        throw std::runtime_error("unrecognized checkpoint format in " + path);
    std::string key;
    size_t nroots = 0;
    while (is >> key) {
        if (key == "config") is >> ck.hash;
        else if (key == "blocks") is >> ck.total_blocks;
        else if (key == "next") is >> ck.next_block;
        else if (key == "bytes") is >> ck.out_bytes;
        else if (key == "spectrum_bytes") is >> ck.spectrum_bytes;
        else if (key == "roots") {
            is >> nroots;
            ck.roots.resize(nroots);
            for (auto& [q, g] : ck.roots) is >> q >> g;
            break;
        }
    }
    if (!is && !is.eof()) throw std::runtime_error("truncated checkpoint " + path);
    return ck;
}

LValue evaluate(uint32_t q, Method method) {
    if (method == Method::direct) return l1_direct(q);
    PrimeContext ctx = make_prime_context(q);
    PowerSequence seq = build_power_sequence(ctx);
    if (method == Method::alternating) return l1_alternating(ctx, seq);
    KernelFn f = ctx.parity == Parity::even ? KernelFn::log_sin_neg : KernelFn::identity;
    return extract_quadratic(l1_fft_spectrum(ctx, seq, f));
}

ScanBlock compute_block(const ScanConfig& cfg, const std::vector<uint32_t>& primes,
                        size_t index, uint64_t base_n, const KahanSum& base_state) {
    ScanBlock blk;
    blk.index = index;
    const size_t begin = index * cfg.block_size;
    const size_t end = std::min(primes.size(), begin + cfg.block_size);
    blk.rows.reserve(end - begin);

    SAccumulator s;
    s.restore(base_n, base_state);

    std::ostringstream spectrum;
    for (size_t i = begin; i < end; ++i) {
        const uint32_t q = primes[i];
        s.extend_to(q);
        LValue L;
        if (cfg.method == Method::direct) {
            L = l1_direct(q);
        } else {
            PrimeContext ctx = make_prime_context(q);
            PowerSequence seq = build_power_sequence(ctx);
            blk.roots.emplace_back(q, ctx.g);
            if (cfg.method == Method::alternating) {
                L = l1_alternating(ctx, seq);
            } else if (cfg.emit_spectrum) {
                Spectrum spec = merged_spectrum(ctx, seq);
                L = extract_quadratic(spec);
                for (uint32_t j = 1; j + 1 < q; ++j)
                    spectrum << q << ',' << j << ','
                             << fmt_double(spec.magnitudes[j]) << '\n';
            } else {
                KernelFn f = ctx.parity == Parity::even ? KernelFn::log_sin_neg
                                                        : KernelFn::identity;
                L = extract_quadratic(l1_fft_spectrum(ctx, seq, f));
            }
        }
        blk.rows.push_back(row_from(L, s.value()));
    }
    blk.spectrum_text = spectrum.str();
    return blk;
}

ScanOutcome run_blocks(const ScanConfig& cfg, const std::vector<uint32_t>& primes,
                       const std::function<bool(const ScanBlock&)>& on_block,
                       size_t first_block) {
    const size_t nblocks = (primes.size() + cfg.block_size - 1) / cfg.block_size;
    ScanOutcome outcome;
    if (first_block >= nblocks) {
        outcome.completed = true;
        return outcome;
    }
    const size_t limit =
        cfg.max_blocks == 0 ? nblocks
                            : std::min(nblocks, first_block + cfg.max_blocks);

    // S(q) block bases from one sequential pass; workers extend locally.
    std::vector<std::pair<uint64_t, KahanSum>> base(nblocks);
    {
        SAccumulator s;
        for (size_t b = 0; b < nblocks; ++b) {
            uint64_t base_n = primes[b * cfg.block_size] - 1;
            s.extend_to(base_n);
            base[b] = {base_n, s.state()};
        }
    }

    std::mutex mu;
    std::condition_variable cv;
    std::map<size_t, ScanBlock> done;
    std::atomic<size_t> next{first_block};
    std::atomic<bool> stop{false};
    std::exception_ptr error;
    const size_t backlog_cap = 2 * cfg.workers + 2;

    auto worker = [&] {
        while (!stop.load(std::memory_order_relaxed)) {
            size_t b = next.fetch_add(1);
            if (b >= limit) return;
            try {
                ScanBlock blk =
                    compute_block(cfg, primes, b, base[b].first, base[b].second);
                std::unique_lock<std::mutex> lock(mu);
                cv.wait(lock, [&] {
                    return done.size() < backlog_cap || stop.load();
                });
                if (stop.load()) return;
                done.emplace(b, std::move(blk));
                cv.notify_all();
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!error) error = std::current_exception();
                stop.store(true);
                cv.notify_all();
                return;
            }
        }
    };

    const size_t nthreads = std::min<size_t>(cfg.workers, limit - first_block);
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (size_t t = 0; t < nthreads; ++t) threads.emplace_back(worker);

    bool stopped_by_sink = false;
    for (size_t b = first_block; b < limit; ++b) {
        ScanBlock blk;
        {
            std::unique_lock<std::mutex> lock(mu);
            cv.wait(lock, [&] { return done.count(b) != 0 || stop.load(); });
            if (stop.load() && done.count(b) == 0) break;
            auto it = done.find(b);
            blk = std::move(it->second);
            done.erase(it);
            cv.notify_all();
        }
        outcome.rows_emitted += blk.rows.size();
        if (!on_block(blk)) {
            stopped_by_sink = true;
            stop.store(true);
            cv.notify_all();
            break;
        }
        if (b + 1 == nblocks) outcome.completed = true;
    }
    stop.store(true);
    cv.notify_all();
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
    if (stopped_by_sink) outcome.completed = false;
    return outcome;
}

}  // namespace

ScanRow compute_row(uint32_t q, Method method, double S) {
    return row_from(evaluate(q, method), S);
}

ScanOutcome scan_blocks(
    const ScanConfig& config,
    const std::function<bool(size_t, const std::vector<ScanRow>&)>& on_block,
    size_t first_block) {
    validate(config);
    std::vector<uint32_t> primes = primes_in_range(config.qmin, config.qmax);
    return run_blocks(config, primes,
                      [&](const ScanBlock& b) { return on_block(b.index, b.rows); },
                      first_block);
}

std::vector<ScanRow> scan_collect(const ScanConfig& config) {
    std::vector<ScanRow> rows;
    scan_blocks(config, [&](size_t, const std::vector<ScanRow>& blk) {
        rows.insert(rows.end(), blk.begin(), blk.end());
        return true;
    });
    return rows;
}

std::string csv_header() {
    return "q,parity,L,err_bound,c1,c2,c3,c4,beta_upper,S,g,uli,lli,h,joshi1,"
           "joshi2,method";
}

std::string format_csv_row(const ScanRow& r) {
    std::string out;
    out.reserve(256);
    out += std::to_string(r.q);
    out += r.parity == Parity::even ? ",E," : ",O,";
    out += fmt_double(r.L);
    out += ',';
    out += fmt_double(r.err_bound);
    out += ',';
    out += fmt_double(r.c1);
    out += ',';
    out += fmt_double(r.c2);
    out += ',';
    out += fmt_double(r.c3);
    out += ',';
    out += fmt_double(r.c4);
    out += ',';
    out += fmt_double(r.beta_upper);
    out += ',';
    out += fmt_double(r.S);
    out += ',';
    out += fmt_double(r.gq);
    out += ',';
    if (r.uli) out += fmt_double(*r.uli);
    out += ',';
    if (r.lli) out += fmt_double(*r.lli);
    out += ',';
    if (r.h) out += std::to_string(*r.h);
    out += r.joshi1 ? ",1" : ",0";
    out += r.joshi2 ? ",1" : ",0";
    out += ',';
    out += method_name(r.method);
    return out;
}

ScanOutcome scan_to_csv(const ScanConfig& config, const std::string& out_path,
                        bool resume) {
    validate(config);
    const bool to_stdout = out_path == "-" || out_path.empty();
    const bool checkpointing = !config.checkpoint_path.empty();
    if (to_stdout && (checkpointing || resume))
        throw std::invalid_argument("scan: checkpoint/resume requires a file sink");
    if (resume && !checkpointing)
        throw std::invalid_argument("scan: --resume requires a checkpoint path");

    std::vector<uint32_t> primes = primes_in_range(config.qmin, config.qmax);
    const size_t nblocks = (primes.size() + config.block_size - 1) / config.block_size;
    const uint64_t hash = config_hash(config);
    const std::string spectrum_path =
        config.emit_spectrum ? out_path + ".spectrum.csv" : "";

    Checkpoint ck;
    ck.hash = hash;
    ck.total_blocks = nblocks;

    std::ofstream out_file;
    std::ofstream spectrum_file;
    std::ostream* out = &std::cout;

    const std::string header = csv_header() + "\n";
    if (resume) {
        ck = load_checkpoint(config.checkpoint_path);
        if (ck.hash != hash)
            throw std::runtime_error(
                "checkpoint was written by a different scan configuration");
        if (ck.total_blocks != nblocks)
            throw std::runtime_error("checkpoint block count mismatch");
        std::filesystem::resize_file(out_path, ck.out_bytes);
        out_file.open(out_path, std::ios::in | std::ios::out | std::ios::ate);
        if (!out_file) throw std::runtime_error("cannot reopen " + out_path);
        if (config.emit_spectrum) {
            std::filesystem::resize_file(spectrum_path, ck.spectrum_bytes);
            spectrum_file.open(spectrum_path,
                               std::ios::in | std::ios::out | std::ios::ate);
        }
        out = &out_file;
    } else {
        if (!to_stdout) {
            out_file.open(out_path, std::ios::trunc);
            if (!out_file) throw std::runtime_error("cannot open " + out_path);
            out = &out_file;
        }
        if (config.emit_spectrum && !to_stdout)
            spectrum_file.open(spectrum_path, std::ios::trunc);
        (*out) << header;
        out->flush();
        ck.next_block = 0;
        ck.out_bytes = header.size();
        ck.spectrum_bytes = 0;
        if (checkpointing) write_checkpoint(config.checkpoint_path, ck);
    }

    auto sink = [&](const ScanBlock& blk) {
        std::string text;
        for (const ScanRow& row : blk.rows) {
            text += format_csv_row(row);
            text += '\n';
        }
        (*out) << text;
        out->flush();
        if (!*out) throw std::runtime_error("write failure on " + out_path);
        ck.out_bytes += text.size();
        if (spectrum_file.is_open()) {
            spectrum_file << blk.spectrum_text;
            spectrum_file.flush();
            ck.spectrum_bytes += blk.spectrum_text.size();
        }
        ck.roots.insert(ck.roots.end(), blk.roots.begin(), blk.roots.end());
        ck.next_block = blk.index + 1;
        if (checkpointing) write_checkpoint(config.checkpoint_path, ck);
        return !(config.stop_flag && config.stop_flag->load());
    };

    ScanOutcome outcome = run_blocks(config, primes, sink, ck.next_block);
    return outcome;
}

std::vector<ScanRow> read_csv(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("empty csv " + path);
    if (line != csv_header())
        throw std::runtime_error("unrecognized csv header in " + path);
    std::vector<ScanRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        size_t start = 0;
        while (true) {
            size_t pos = line.find(',', start);
            if (pos == std::string::npos) {
                f.push_back(line.substr(start));
                break;
            }
            f.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        if (f.size() != 17) throw std::runtime_error("malformed csv row: " + line);
        ScanRow r;
        r.q = static_cast<uint32_t>(std::stoul(f[0]));
        r.parity = f[1] == "E" ? Parity::even : Parity::odd;
        r.L = parse_double(f[2]);
        r.err_bound = parse_double(f[3]);
        r.c1 = parse_double(f[4]);
        r.c2 = parse_double(f[5]);
        r.c3 = parse_double(f[6]);
        r.c4 = parse_double(f[7]);
        r.beta_upper = parse_double(f[8]);
        r.S = parse_double(f[9]);
        r.gq = parse_double(f[10]);
        if (!f[11].empty()) r.uli = parse_double(f[11]);
        if (!f[12].empty()) r.lli = parse_double(f[12]);
        if (!f[13].empty()) r.h = static_cast<uint32_t>(std::stoul(f[13]));
        r.joshi1 = f[14] == "1";
        r.joshi2 = f[15] == "1";
        if (f[16] == "direct") r.method = Method::direct;
        else if (f[16] == "alternating") r.method = Method::alternating;
        else if (f[16] == "fft") r.method = Method::fft;
        else throw std::runtime_error("unknown method tag: " + f[16]);
        rows.push_back(r);
    }
    return rows;
}

ExtremaReport extrema(const std::vector<ScanRow>& rows) {
    if (rows.empty()) throw std::invalid_argument("extrema: empty row stream");
    ExtremaReport rep;
    auto update = [](ExtremaReport::Entry& e, double v, uint32_t q) {
        if (!e.valid) {
            e = {v, v, q, q, true};
            return;
        }
        if (v < e.min_value) { e.min_value = v; e.argmin = q; }
        if (v > e.max_value) { e.max_value = v; e.argmax = q; }
    };
    for (const ScanRow& r : rows) {
        update(rep.c1, r.c1, r.q);
        update(rep.c2, r.c2, r.q);
        if (r.q >= 5 && r.uli) update(rep.uli, *r.uli, r.q);
        if (r.q >= 5 && r.lli) {
            if (*r.lli < 1.0) rep.lli_exceptions.emplace_back(r.q, *r.lli);
            if (r.q != 5 && r.q != 163) update(rep.lli, *r.lli, r.q);
        }
    }
    return rep;
}

JoshiCensus joshi_census(const std::vector<ScanRow>& rows, size_t first_n) {
    if (rows.empty()) throw std::invalid_argument("joshi_census: empty row stream");
    JoshiCensus census;
    for (const ScanRow& r : rows) {
        if (r.joshi1) {
            ++census.count1;
            if (census.first1.size() < first_n) census.first1.push_back(r.q);
        }
        if (r.joshi2) {
            ++census.count2;
            if (census.first2.size() < first_n) census.first2.push_back(r.q);
        }
    }
    return census;
}

GoldenReport verify_golden() { return verify_golden(golden_table()); }

GoldenReport verify_golden(const GoldenTable& table) {
    GoldenReport rep;
    rep.columns = {{"L"}, {"c1"}, {"c2"}, {"c3"}, {"c4"}, {"beta_upper"}};
    SAccumulator s;
    for (const GoldenRow& want : table.rows) {
        s.extend_to(want.q);
        ScanRow got = compute_row(want.q, Method::alternating, s.value());
        const std::pair<double, double> checks[6] = {
            {got.L, want.L},           {got.c1, want.c1}, {got.c2, want.c2},
            {got.c3, want.c3},         {got.c4, want.c4}, {got.beta_upper, want.beta_upper},
        };
        for (int i = 0; i < 6; ++i) {
            double rel = std::abs(checks[i].first - checks[i].second) /
                         std::abs(checks[i].second);
            if (rel > rep.columns[i].worst_rel_err) {
                rep.columns[i].worst_rel_err = rel;
                rep.columns[i].worst_q = want.q;
            }
            if (rel > kGoldenRelTol) {
                rep.pass = false;
                rep.violations.push_back(
                    {want.q, rep.columns[i].column, checks[i].first, checks[i].second});
            }
        }
    }
    return rep;
}

}  // namespace siegel
