#pragma once

#include <cstdint>
#include <vector>

namespace siegel {

// Character parity: chi_square mod q is even iff q == 1 (mod 4).
enum class Parity : uint8_t { even, odd };

// An odd prime q together with the derived quantities every evaluator needs:
// the smallest primitive root g of q, the decimated transform length
// qbar = (q-1)/2 and the character exponent j_quad of the quadratic
// character (chi_square = chi_1^j_quad, which equals qbar).
struct PrimeContext {
    uint32_t q;
    Parity parity;
    uint32_t g;
    uint32_t qbar;
    uint32_t j_quad;
};

// The primitive-root power permutation of Z*_q: values[k] = g^k mod q for
// k = 0..q-2. values is a permutation of {1,...,q-1} and satisfies the
// complement identity values[k + qbar] = q - values[k].
struct PowerSequence {
    uint32_t q = 0;
    std::vector<uint32_t> values;
};

// base^exp mod m by square-and-multiply; 128-bit intermediate products.
uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t m);

// Trial division; adequate for the q <= 2^31 range this library enforces.
bool is_prime(uint32_t n);

// Prime factors of n with multiplicity, ascending. factorize(1) == {}.
std::vector<uint32_t> factorize(uint32_t n);

// All primes p with lo <= p <= hi, ascending. Segmented sieve (2^20 odd
// numbers per segment) so hi = 10^7 runs in bounded memory.
std::vector<uint32_t> primes_in_range(uint64_t lo, uint64_t hi);

// Smallest primitive root of the odd prime q.
// Throws std::invalid_argument if q is not an odd prime.
uint32_t find_primitive_root(uint32_t q);

// Legendre symbol (a|q) in {-1,0,+1} by the Euler criterion; equals
// chi_square(a). q must be an odd prime.
int legendre_symbol(int64_t a, uint32_t q);

// Validates q (odd prime, q < 2^31) and fills in parity, root and lengths.
PrimeContext make_prime_context(uint32_t q);

// The full power sequence a_0..a_{q-2} by iterated modular multiplication.
PowerSequence build_power_sequence(const PrimeContext& ctx);

}  // namespace siegel
