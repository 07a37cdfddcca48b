#include "siegel/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace siegel {

namespace {

constexpr uint32_t kMaxModulus = 1u << 31;

[[noreturn]] void throw_invalid_modulus(uint64_t q) {
    throw std::invalid_argument("invalid modulus: " + std::to_string(q) +
                                " is not an odd prime below 2^31");
}

}  // namespace

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m < 2) throw std::invalid_argument("pow_mod: modulus must be >= 2");
    uint64_t result = 1 % m;
    uint64_t b = base % m;
    while (exp) {
        if (exp & 1) result = static_cast<uint64_t>((unsigned __int128)result * b % m);
        b = static_cast<uint64_t>((unsigned __int128)b * b % m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

std::vector<uint32_t> factorize(uint32_t n) {
    if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<uint32_t> factors;
    uint32_t m = n;
    for (uint32_t p = 2; (uint64_t)p * p <= m; p += (p == 2 ? 1 : 2)) {
        while (m % p == 0) {
            factors.push_back(p);
            m /= p;
        }
    }
    if (m > 1) factors.push_back(m);
    return factors;
}

std::vector<uint32_t> primes_in_range(uint64_t lo, uint64_t hi) {
    if (lo < 2) lo = 2;
    std::vector<uint32_t> primes;
    if (hi < lo) return primes;
    if (hi >= kMaxModulus)
        throw std::invalid_argument("primes_in_range: upper bound must be < 2^31");

    // Base primes up to sqrt(hi) by a plain sieve.
    uint32_t root = static_cast<uint32_t>(std::sqrt(static_cast<double>(hi)));
    while ((uint64_t)(root + 1) * (root + 1) <= hi) ++root;
    std::vector<uint8_t> base(root + 1, 1);
    std::vector<uint32_t> base_primes;
    for (uint32_t i = 2; i <= root; ++i) {
        if (!base[i]) continue;
        base_primes.push_back(i);
        for (uint64_t j = (uint64_t)i * i; j <= root; j += i) base[j] = 0;
    }

    if (lo <= 2 && hi >= 2) primes.push_back(2);

    // Sieve odd numbers only, 2^20 per segment.
    constexpr uint64_t kSegmentOdds = 1u << 20;
    std::vector<uint8_t> seg(kSegmentOdds);
    uint64_t first = std::max<uint64_t>(lo | 1, 3);
    for (uint64_t seg_lo = first; seg_lo <= hi; seg_lo += 2 * kSegmentOdds) {
        uint64_t seg_hi = std::min(hi, seg_lo + 2 * kSegmentOdds - 2);
        size_t count = static_cast<size_t>((seg_hi - seg_lo) / 2 + 1);
        std::fill(seg.begin(), seg.begin() + count, 1);
        for (uint32_t p : base_primes) {
            if (p == 2) continue;
            uint64_t start = std::max<uint64_t>((uint64_t)p * p,
                                                (seg_lo + p - 1) / p * p);
            if (start % 2 == 0) start += p;
            if (start > seg_hi) continue;
            for (uint64_t j = start; j <= seg_hi; j += 2 * p)
                seg[(j - seg_lo) / 2] = 0;
        }
        for (size_t i = 0; i < count; ++i)
            if (seg[i]) primes.push_back(static_cast<uint32_t>(seg_lo + 2 * i));
    }
    return primes;
}

uint32_t find_primitive_root(uint32_t q) {
    if (q < 3 || q % 2 == 0 || !is_prime(q)) throw_invalid_modulus(q);
    if (q == 3) return 2;
    std::vector<uint32_t> prime_factors = factorize(q - 1);
    prime_factors.erase(std::unique(prime_factors.begin(), prime_factors.end()),
                        prime_factors.end());
    for (uint32_t g = 2; g < q; ++g) {
        bool ok = true;
        for (uint32_t p : prime_factors) {
            if (pow_mod(g, (q - 1) / p, q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw_invalid_modulus(q);  // unreachable for prime q
}

int legendre_symbol(int64_t a, uint32_t q) {
    if (q < 3 || q % 2 == 0) throw_invalid_modulus(q);
    int64_t r = a % static_cast<int64_t>(q);
    if (r < 0) r += q;
    if (r == 0) return 0;
    uint64_t e = pow_mod(static_cast<uint64_t>(r), (q - 1) / 2, q);
    if (e == 1) return 1;
    if (e == q - 1) return -1;
    throw_invalid_modulus(q);  // Euler criterion can only fail for composite q
}

PrimeContext make_prime_context(uint32_t q) {
    if (q < 3 || q >= kMaxModulus || q % 2 == 0 || !is_prime(q))
        throw_invalid_modulus(q);
    PrimeContext ctx;
    ctx.q = q;
    ctx.parity = (q % 4 == 1) ? Parity::even : Parity::odd;
    ctx.g = find_primitive_root(q);
    ctx.qbar = (q - 1) / 2;
    ctx.j_quad = ctx.qbar;
    return ctx;
}

PowerSequence build_power_sequence(const PrimeContext& ctx) {
    PowerSequence seq;
    seq.q = ctx.q;
    seq.values.resize(ctx.q - 1);
    uint64_t a = 1;
    for (uint32_t k = 0; k + 1 < ctx.q; ++k) {
        seq.values[k] = static_cast<uint32_t>(a);
        a = a * ctx.g % ctx.q;
    }
    return seq;
}

}  // namespace siegel
