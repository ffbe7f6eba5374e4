#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace volc {

/// Exact signed arbitrary-precision integer. Everything downstream (traces,
/// valuations, 1024-bit primes) rides on this alias.
using Integer = mpz_class;

/// An enumeration or factoring job ran past its configured effort budget.
/// Distinct from invalid_argument: the input was fine, the work was too big.
class budget_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// 2-adic valuation of n (sign ignored). Rejects n = 0.
long nu2(const Integer& n);

/// ⌊log₂ n⌋ = bitlength(n) − 1 for n ≥ 1.
long floor_log2(const Integer& n);

/// Minimal μ with 4^μ ≥ p, for odd p ≥ 3. Equals ⌈(1/2)·log₂ p⌉ because an
/// odd p is never a power of two. Integer comparisons only, no floating point.
long mu_of(const Integer& p);

/// ⌊√n⌋ for n ≥ 0.
Integer isqrt(const Integer& n);

/// Miller–Rabin primality. Deterministic for n < 2⁶⁴ (fixed 12-base set),
/// 65 pseudorandom rounds above (error < 2⁻¹³⁰).
bool is_prime(const Integer& n);

struct Factor {
    Integer prime;
    unsigned exponent = 0;
};

/// Prime factorization of n ≥ 1, sorted by prime. Trial division to 10⁶,
/// then Pollard-Brent rho. Throws budget_error when rho exceeds its
/// iteration budget; never returns a wrong factorization.
std::vector<Factor> factorize(const Integer& n, uint64_t rho_budget = 1u << 26);

}  // namespace volc
